#pragma once

#include "kleinlab/kinematics.hpp"
#include "kleinlab/potential.hpp"
#include "kleinlab/units.hpp"

#include <complex>
#include <vector>

namespace kleinlab::tmatrix {

using cplx = std::complex<double>;

// Two-component spinor value at a point.
struct SpinorAmplitude {
    cplx upper{};
    cplx lower{};
    double x = 0.0;
};

// Conserved current j = -psi^dagger sigma_y psi (alpha_x = -sigma_y in this
// representation). Positive means rightward flux.
double current_density(const SpinorAmplitude& psi);

// Propagator of the first-order system psi' = A psi across one constant
// region, A = [[0, -(E-V+m)], [E-V-m, 0]]. Since A^2 = -q^2 I with
// q^2 = (E-V)^2 - m^2, the matrix exponential is closed-form:
//   exp(A w) = cos(qw) I + sin(qw)/q A
// (cosh/sinh when q^2 < 0). Real entries, det = 1, conserves the current.
struct TransferMatrix {
    cplx m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};

    SpinorAmplitude apply(const SpinorAmplitude& psi, double x_out) const {
        return {m00 * psi.upper + m01 * psi.lower,
                m10 * psi.upper + m11 * psi.lower, x_out};
    }
    TransferMatrix operator*(const TransferMatrix& rhs) const {
        return {m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
                m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
    }
    cplx det() const { return m00 * m11 - m01 * m10; }
};

TransferMatrix region_propagator(double E, double level, double width,
                                 const UnitSystem& units);

struct SolverResult {
    double R = 0.0;
    double T = 0.0;
    cplx reflection_amplitude{};
    cplx transmission_amplitude{};
    double unitarity_residual = 0.0;
};

// Full scattering solution: coefficients plus the wavefunction, evaluable
// anywhere (the vacuum machinery reads interior amplitudes off this).
class ScatteringSolution {
  public:
    const SolverResult& result() const { return result_; }
    SpinorAmplitude at(double x) const;

  private:
    friend ScatteringSolution solve_scattering(const Potential&, double,
                                               const UnitSystem&);
    struct Region {
        double x_left;
        double width;
        double level;
        SpinorAmplitude psi_left; // wavefunction at the region's left edge
    };
    SolverResult result_;
    UnitSystem units_;
    double energy_ = 0.0;
    double left_level_ = 0.0, right_level_ = 0.0;
    double x_left_ = 0.0, x_right_ = 0.0; // outermost interfaces
    double q_in_ = 0.0, q_out_ = 0.0;     // signed asymptotic momentum labels
    std::vector<Region> regions_;
};

// Unit-flux wave incident from the left. Requires E propagating in both
// asymptotic regions; the Klein-zone group-velocity bookkeeping is handled
// by matching fluxes, not momentum signs.
ScatteringSolution solve_scattering(const Potential& potential, double E,
                                    const UnitSystem& units);

} // namespace kleinlab::tmatrix
