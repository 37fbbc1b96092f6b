#pragma once

#include "kleinlab/spectral_flow.hpp"
#include "kleinlab/units.hpp"

namespace kleinlab::supercritical {

// Integer part with an explicit flag for arguments sitting (to rounding
// noise) exactly on an integer; such values snap to the integer instead of
// flooring an epsilon short of it.
struct IntPart {
    long long value;
    bool on_boundary;
};

IntPart int_part(double x);

// Depth at which the N-th level of a well of half-width a reaches E = -m:
//   V_N^c = m + sqrt(m^2 + N^2 pi^2 / (4 a^2))
// Odd N are even-parity levels (interior phase pa = N pi/2), even N odd ones.
double critical_potential(int N, double a, const UnitSystem& units);

// Number of supercritical levels of a well of depth V:
//   Q_S = Int[(2a/pi) sqrt(V^2 - 2mV)],  0 for V <= 2m.
long long count_supercritical(double V, double a, const UnitSystem& units);

// The zero crossings (charge absorbed by the well) are only bracketed by the
// closed form: Q_p is Int[(2a/pi) sqrt(V^2 - m^2)] or that plus one.
struct PositronBracket {
    long long lower;
    long long upper;
};

PositronBracket count_positrons(double V, double a, const UnitSystem& units);

// Delta-well analogues, lambda = 2Va held fixed in the narrow-well limit:
long long delta_well_positrons(double lambda);     // Int[lambda/pi + 1/2]
long long delta_well_supercritical(double lambda); // Int[lambda/pi]

// Charge bookkeeping at a given depth along a spectral flow. The vacuum
// charge is the negative of the particle charge: what the well gains, the
// vacuum loses.
struct ChargeLedger {
    double depth;
    long long particle_charge;     // Q_p: levels that crossed E = 0
    long long supercritical_count; // Q_S: levels that reached E = -m
    long long vacuum_charge;       // Q_0 = -Q_p
};

ChargeLedger ledger_at(const spectrum::SpectralFlow& flow, double depth);

} // namespace kleinlab::supercritical
