#pragma once

#include <cstdint>
#include <vector>

#include "phlab/circle_map.hpp"
#include "phlab/maps.hpp"

namespace phlab {

// Geometry of the DA sink in eigencoordinates (u, v).
struct DAGeometry {
    double lambda = 0.0;
    double delta0 = 0.0;
    int k = 0;
    double u0 = 0.0;        // saddle abscissa: phi(k u0) = (lambda - 1)/(lambda - 1/2)
    double u0_residual = 0.0;
    double u1 = 0.0;        // dL/du = 1 on (0, u0)
    double a = 0.0;         // trapping half-width in u
    double v_half = 0.0;    // trapping half-width in v, delta0 / 4
};

DAGeometry da_geometry(double lambda, int k, const BumpProfile& bump);

// dL/du with phi(v) = 1.
double da_dLdu(double lambda, int k, const BumpProfile& bump, double u);

// Ambient point of T^2 with eigencoordinates (u, v) for the matrix A^N.
Vec da_point(const ToralAutomorphism& a, double u, double v);

struct DAReport {
    DAGeometry geometry;
    std::vector<ConditionResult> checks;
    bool pass() const;
};

// a_override > 0 replaces the trapping half-width.
DAReport da_complement_check(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed,
                             double a_override = 0.0, std::size_t orbits = 1000, std::size_t max_steps = 500);

}  // namespace phlab
