#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phlab/maps.hpp"

namespace phlab {

// Closed arc [lo, hi] of the circle coordinate, lo <= hi as lifted reals (hi - lo < 1).
struct Arc {
    double lo = 0.0;
    double hi = 0.0;
};

// Region: circle coordinate in one of the arcs, optionally the T^2 factor starting at
// fiber_offset inside the DA box |u| <= box_u, |v| <= box_v. No arcs means the whole circle.
struct TrapRegion {
    std::string name;
    std::vector<Arc> arcs;
    bool fiber_box = false;
    int fiber_offset = 0;
    double box_u = 0.0;
    double box_v = 0.0;
};

struct TrapReport {
    std::string name;
    bool pass = false;
    double margin = 0.0;    // worst inward distance of the image of the sampled boundary
    double required = 0.0;  // pass needs margin >= required and margin > 0
    std::size_t samples = 0;
    Vec witness;
};

using StepFn = std::function<Vec(const Vec&)>;

// Samples the boundary of the region (and a quarter of the budget in its interior) and
// measures how far inside the region the images land.
TrapReport trapping_check(const DynamicalSystem& sys, const StepFn& map, const TrapRegion& region,
                          std::size_t samples, std::uint64_t seed, double required = 0.0);
TrapReport trapping_check(const DynamicalSystem& sys, const TrapRegion& region, std::size_t samples,
                          std::uint64_t seed, double required = 0.0);

// Slab T^4 x [-eta, eta] for F_k with required margin (1 - theta)/2 * eta.
TrapReport slab_check(const DynamicalSystem& sys, double eta, double theta, std::size_t samples, std::uint64_t seed);

// The five nested regions of G_k; the first one carries the DA box of the z factor.
std::vector<TrapRegion> filtration_regions(const DynamicalSystem& sys);
std::vector<TrapReport> filtration_check(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed);

// Minimum circle displacement |p - K^{+-1}(p)| on the middle region [eta, 1/2 - eta] u [1/2 + eta, 1 - eta].
double middle_displacement(const SineFlowMap& circle, double eta, std::size_t grid = 100000);

struct EscapeReport {
    std::size_t steps = 0;
    std::size_t bound = 0;
    bool resolved = false;
    bool stayed = true;  // remained in the slab for the persistence window
};

// Forward: steps until the circle coordinate enters (-eta, eta). Reverse: inverse steps until
// it enters (1/2 - eta, 1/2 + eta). Persistence steps are only taken forward.
EscapeReport escape_time(const DynamicalSystem& sys, const Vec& start, double eta, bool reverse = false,
                         std::size_t persistence = 0);

}  // namespace phlab
