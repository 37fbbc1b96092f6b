#include "kleinlab/spectral_flow.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace kleinlab::spectrum {

namespace {

constexpr double pi = std::numbers::pi;

// matching_phase at fixed E as a function of depth; increasing in V.
double phase_at_depth(Parity parity, double E, double V, double a,
                      const UnitSystem& u) {
    return matching_phase(parity, E, V, a, u);
}

// Depth at which the (parity, branch) level sits exactly at energy E_fix,
// bracketed by [V_lo, V_hi]. Bisection on the phase residual.
double crossing_depth(Parity parity, int branch, double E_fix, double V_lo,
                      double V_hi, double a, const UnitSystem& u) {
    const double m = u.mass;
    const double target = branch * pi;
    // the phase needs E_fix + V > m to be defined
    double lo = std::max(V_lo, m - E_fix + 1e-14 * m);
    double hi = V_hi;
    auto h = [&](double V) { return phase_at_depth(parity, E_fix, V, a, u) - target; };
    double hlo = h(lo);
    if (hlo > 0.0)
        throw NumericalError("crossing bracket does not straddle the level");
    for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

struct Key {
    Parity parity;
    int branch;
    bool operator<(const Key& o) const {
        if (parity != o.parity)
            return parity < o.parity;
        return branch < o.branch;
    }
};

} // namespace

long SpectralFlow::crossings(CrossingType type, double up_to_depth) const {
    long n = 0;
    for (const auto& e : events)
        if (e.type == type && e.depth <= up_to_depth)
            ++n;
    return n;
}

SpectralFlow ramp_spectrum(double V_max, int n_steps, double a,
                           const UnitSystem& units, double tol) {
    const double m = units.mass;
    if (!(V_max > 0.0))
        throw DomainError("ramp depth must be positive");
    if (n_steps < 2)
        throw DomainError("ramp needs at least two slices");
    const double dV = V_max / (n_steps - 1);
    if (dV > 0.25 * m)
        throw NumericalError(
            "ramp step too coarse to pair states between slices; "
            "increase n_steps so that V_max/(n_steps-1) <= m/4");

    SpectralFlow flow;
    flow.half_width = a;
    flow.slices.reserve(n_steps);

    std::map<Key, double> prev; // energy of each tracked level at the previous slice
    double max_slope = 1.0;     // |dE/dV| is bounded by 1; grows only if observed
    double V_prev = 0.0;

    for (int i = 0; i < n_steps; ++i) {
        const double V = V_max * i / (n_steps - 1);
        RampSlice slice{V, find_bound_states(V, a, units, tol)};

        std::map<Key, double> cur;
        for (const BoundState& s : slice.states)
            cur[{s.parity, s.branch_index}] = s.energy;

        if (i > 0) {
            const double guard = 3.0 * max_slope * dV;
            for (const auto& [key, E_now] : cur) {
                auto it = prev.find(key);
                if (it == prev.end()) {
                    // level born at the upper gap edge since the last slice
                    if (m - E_now > guard)
                        throw NumericalError(
                            "ramp step too coarse: a level appeared far from E = m; "
                            "increase n_steps");
                    continue;
                }
                const double E_before = it->second;
                if (std::abs(E_now - E_before) > guard)
                    throw NumericalError(
                        "ramp step too coarse to pair states between slices; "
                        "increase n_steps");
                // |dE/dV| <= 1 physically; cap the update so one bad pairing
                // cannot widen the guard enough to hide a missed crossing
                max_slope = std::max(max_slope,
                                     std::min(2.0, std::abs(E_now - E_before) / dV));
                if (E_before > 0.0 && E_now <= 0.0)
                    flow.events.push_back(
                        {CrossingType::zero_energy, key.parity, key.branch,
                         crossing_depth(key.parity, key.branch, 0.0, V_prev, V, a,
                                        units)});
            }
            for (const auto& [key, E_before] : prev) {
                if (cur.find(key) != cur.end())
                    continue;
                // level left through the lower continuum since the last slice
                if (E_before + m > guard)
                    throw NumericalError(
                        "ramp step too coarse: a level vanished far from E = -m; "
                        "increase n_steps");
                flow.events.push_back(
                    {CrossingType::lower_continuum, key.parity, key.branch,
                     crossing_depth(key.parity, key.branch, -m, V_prev, V, a, units)});
            }
        }

        flow.slices.push_back(std::move(slice));
        prev = std::move(cur);
        V_prev = V;
    }

    std::sort(flow.events.begin(), flow.events.end(),
              [](const CrossingEvent& x, const CrossingEvent& y) {
                  return x.depth < y.depth;
              });
    return flow;
}

} // namespace kleinlab::spectrum
