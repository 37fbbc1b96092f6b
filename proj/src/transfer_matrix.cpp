#include "kleinlab/transfer_matrix.hpp"

#include <cmath>

namespace kleinlab::tmatrix {

namespace {

constexpr cplx I{0.0, 1.0};

// Plane-wave spinor (1, -i q/(E-V+m)) exp(i q x) for a region at `level`;
// q is the signed momentum label. Unnormalised: fluxes divide out.
SpinorAmplitude plane_wave(double E, double level, double q, double x,
                           const UnitSystem& units) {
    const double eps_m = E - level + units.mass;
    return {cplx{1.0, 0.0}, -I * q / eps_m, x};
}

double plane_wave_flux(double E, double level, double q, const UnitSystem& units) {
    return 2.0 * q / (E - level + units.mass);
}

struct Layout {
    double left_level, right_level;
    double x_left, x_right;
    std::vector<std::pair<double, double>> regions; // (x_left, level), contiguous
};

Layout layout_of(const Potential& potential) {
    struct Visitor {
        Layout operator()(const StepPotential& s) const {
            return {0.0, s.height, 0.0, 0.0, {}};
        }
        Layout operator()(const BarrierPotential& b) const {
            return {0.0, 0.0, -b.half_width, b.half_width,
                    {{-b.half_width, b.height}}};
        }
        Layout operator()(const WellPotential& w) const {
            return {0.0, 0.0, -w.half_width, w.half_width,
                    {{-w.half_width, -w.depth}}};
        }
        Layout operator()(const DeltaWellPotential&) const {
            throw DomainError("delta well has no finite-width region layout");
            return Layout{};
        }
        Layout operator()(const PiecewisePotential& p) const {
            Layout out{p.left_level, p.right_level, 0.0, 0.0, {}};
            if (p.regions.empty())
                throw DomainError("piecewise potential has no regions");
            out.x_left = p.regions.front().x_left;
            out.x_right = p.regions.back().x_right;
            for (const auto& r : p.regions)
                out.regions.emplace_back(r.x_left, r.level);
            return out;
        }
    };
    return std::visit(Visitor{}, potential);
}

} // namespace

double current_density(const SpinorAmplitude& psi) {
    return -2.0 * std::imag(std::conj(psi.upper) * psi.lower);
}

TransferMatrix region_propagator(double E, double level, double width,
                                 const UnitSystem& units) {
    const double m = units.mass;
    const double eps = E - level;
    const double q2 = eps * eps - m * m;

    double c, s; // cos(qw) and sin(qw)/q, continued through q^2 <= 0
    const double w = width;
    if (std::abs(q2) * w * w < 1e-8) {
        const double z = q2 * w * w;
        c = 1.0 - z / 2.0 + z * z / 24.0;
        s = w * (1.0 - z / 6.0 + z * z / 120.0);
    } else if (q2 > 0.0) {
        const double q = std::sqrt(q2);
        c = std::cos(q * w);
        s = std::sin(q * w) / q;
    } else {
        const double mu = std::sqrt(-q2);
        c = std::cosh(mu * w);
        s = std::sinh(mu * w) / mu;
    }

    TransferMatrix M;
    M.m00 = c;
    M.m01 = -s * (eps + m);
    M.m10 = s * (eps - m);
    M.m11 = c;
    return M;
}

SpinorAmplitude ScatteringSolution::at(double x) const {
    if (x <= x_left_) {
        const cplx ph = std::exp(I * q_in_ * (x - x_left_));
        SpinorAmplitude in = plane_wave(energy_, left_level_, q_in_, x, units_);
        SpinorAmplitude re = plane_wave(energy_, left_level_, -q_in_, x, units_);
        const cplx r = result_.reflection_amplitude;
        return {in.upper * ph + r * re.upper / ph, in.lower * ph + r * re.lower / ph, x};
    }
    if (x >= x_right_) {
        const cplx ph = std::exp(I * q_out_ * (x - x_right_));
        SpinorAmplitude tr = plane_wave(energy_, right_level_, q_out_, x, units_);
        const cplx t = result_.transmission_amplitude;
        return {t * tr.upper * ph, t * tr.lower * ph, x};
    }
    for (auto it = regions_.rbegin(); it != regions_.rend(); ++it) {
        if (x >= it->x_left) {
            const TransferMatrix M =
                region_propagator(energy_, it->level, x - it->x_left, units_);
            return M.apply(it->psi_left, x);
        }
    }
    // unreachable for a contiguous layout
    throw NumericalError("wavefunction evaluation outside region layout");
}

ScatteringSolution solve_scattering(const Potential& potential, double E,
                                    const UnitSystem& units) {
    const Layout lay = layout_of(potential);

    const Momenta left = momenta_for(E, lay.left_level, units,
                                     lay.left_level == 0.0 ? RegionRole::asymptotic
                                                           : RegionRole::interior);
    const Momenta right = momenta_for(E, lay.right_level, units,
                                      lay.right_level == 0.0 ? RegionRole::asymptotic
                                                             : RegionRole::interior);
    if (left.regime == Regime::evanescent)
        throw DomainError("left asymptotic region is evanescent at this energy");
    if (right.regime == Regime::evanescent)
        throw DomainError("right asymptotic region is evanescent at this energy");

    ScatteringSolution sol;
    sol.units_ = units;
    sol.energy_ = E;
    sol.left_level_ = lay.left_level;
    sol.right_level_ = lay.right_level;
    sol.x_left_ = lay.x_left;
    sol.x_right_ = lay.x_right;
    sol.q_in_ = left.momentum_label_sign * (lay.left_level == 0.0 ? left.k : left.p_mag);
    sol.q_out_ = right.momentum_label_sign * (lay.right_level == 0.0 ? right.k : right.p_mag);

    // chain the closed-form propagators left to right
    TransferMatrix M; // identity
    std::vector<TransferMatrix> partials;
    partials.reserve(lay.regions.size());
    for (std::size_t i = 0; i < lay.regions.size(); ++i) {
        partials.push_back(M);
        const double right_edge =
            (i + 1 < lay.regions.size()) ? lay.regions[i + 1].first : lay.x_right;
        const double width = right_edge - lay.regions[i].first;
        M = region_propagator(E, lay.regions[i].second, width, units) * M;
    }

    const SpinorAmplitude u_in =
        plane_wave(E, lay.left_level, sol.q_in_, lay.x_left, units);
    const SpinorAmplitude u_ref =
        plane_wave(E, lay.left_level, -sol.q_in_, lay.x_left, units);
    const SpinorAmplitude u_tr =
        plane_wave(E, lay.right_level, sol.q_out_, lay.x_right, units);

    // M (u_in + r u_ref) = t u_tr  ->  r (M u_ref) - t u_tr = -(M u_in)
    const SpinorAmplitude Mu_ref = M.apply(u_ref, lay.x_right);
    const SpinorAmplitude Mu_in = M.apply(u_in, lay.x_right);
    const cplx a11 = Mu_ref.upper, a12 = -u_tr.upper;
    const cplx a21 = Mu_ref.lower, a22 = -u_tr.lower;
    const cplx b1 = -Mu_in.upper, b2 = -Mu_in.lower;
    const cplx det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-300)
        throw NumericalError("singular matching system in scattering solve");
    const cplx r = (b1 * a22 - a12 * b2) / det;
    const cplx t = (a11 * b2 - b1 * a21) / det;

    const double j_in = plane_wave_flux(E, lay.left_level, sol.q_in_, units);
    const double j_ref = plane_wave_flux(E, lay.left_level, -sol.q_in_, units);
    const double j_tr = plane_wave_flux(E, lay.right_level, sol.q_out_, units);

    sol.result_.reflection_amplitude = r;
    sol.result_.transmission_amplitude = t;
    sol.result_.R = std::norm(r) * std::abs(j_ref) / j_in;
    sol.result_.T = std::norm(t) * j_tr / j_in;
    sol.result_.unitarity_residual = std::abs(sol.result_.R + sol.result_.T - 1.0);

    // wavefunction at each region's left edge, for interior evaluation
    SpinorAmplitude psi{u_in.upper + r * u_ref.upper, u_in.lower + r * u_ref.lower,
                        lay.x_left};
    for (std::size_t i = 0; i < lay.regions.size(); ++i) {
        const SpinorAmplitude edge = partials[i].apply(psi, lay.regions[i].first);
        sol.regions_.push_back({lay.regions[i].first,
                                (i + 1 < lay.regions.size()
                                     ? lay.regions[i + 1].first
                                     : lay.x_right) -
                                    lay.regions[i].first,
                                lay.regions[i].second, edge});
    }
    return sol;
}

} // namespace kleinlab::tmatrix
