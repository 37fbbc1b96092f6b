#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

namespace kleinlab {

// One-dimensional electrostatic potentials, all piecewise constant.
// Sign convention: positive height repels electrons, positive depth binds them.

struct StepPotential {
    double height; // V for x > 0, 0 for x < 0

    explicit StepPotential(double height_) : height(height_) {
        if (height <= 0.0)
            throw std::invalid_argument("step height must be positive");
    }
};

struct BarrierPotential {
    double height;     // V on |x| < a
    double half_width; // a

    BarrierPotential(double height_, double half_width_)
        : height(height_), half_width(half_width_) {
        if (half_width <= 0.0)
            throw std::invalid_argument("barrier half-width must be positive");
    }
};

struct WellPotential {
    double depth;      // potential is -depth on |x| < a, depth > 0
    double half_width; // a

    WellPotential(double depth_, double half_width_)
        : depth(depth_), half_width(half_width_) {
        if (depth <= 0.0)
            throw std::invalid_argument("well depth must be positive");
        if (half_width <= 0.0)
            throw std::invalid_argument("well half-width must be positive");
    }
};

struct DeltaWellPotential {
    double strength; // lambda in -lambda*delta(x); dimensionless, >= 0

    explicit DeltaWellPotential(double strength_) : strength(strength_) {
        if (strength < 0.0)
            throw std::invalid_argument("delta-well strength must be non-negative");
    }
};

struct PiecewiseRegion {
    double x_left;
    double x_right;
    double level;
};

// General finite stack of constant regions between two asymptotic levels.
struct PiecewisePotential {
    std::vector<PiecewiseRegion> regions; // ordered left to right, contiguous
    double left_level = 0.0;
    double right_level = 0.0;

    PiecewisePotential(std::vector<PiecewiseRegion> regions_, double left_level_,
                       double right_level_)
        : regions(std::move(regions_)), left_level(left_level_), right_level(right_level_) {
        for (std::size_t i = 0; i < regions.size(); ++i) {
            if (!(regions[i].x_right > regions[i].x_left))
                throw std::invalid_argument("piecewise region has non-positive width");
            if (i > 0 && regions[i].x_left != regions[i - 1].x_right)
                throw std::invalid_argument("piecewise regions must be contiguous");
        }
    }
};

using Potential = std::variant<StepPotential, BarrierPotential, WellPotential,
                               DeltaWellPotential, PiecewisePotential>;

} // namespace kleinlab
