#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phlab/ensemble.hpp"
#include "phlab/maps.hpp"

namespace phlab {

// Cone C_eps(E, F) = { v in span(E + F) : |v_F| <= eps |v_E| } in chart coordinates,
// pushed forward by the Jacobian or pulled back by its inverse.
struct ConeFamily {
    std::string name;
    bool inverse = false;
    std::vector<int> E, F;
};

std::vector<ConeFamily> cone_families(Family family);

// Upper bound on kappa with D C_eps inside C_{kappa eps}: |T_FE T_EE^-1| / eps + |T_FF| |T_EE^-1|,
// exact when E and F are one-dimensional. Returns +inf if span(E + F) is not invariant
// or the block structure is not triangular.
double cone_kappa(const Mat& chart_jac, const ConeFamily& cone, double eps);

struct ConeFamilyResult {
    std::string name;
    double worst_kappa = 0.0;
    Vec witness;
    bool pass = false;
};

struct ConeReport {
    double eps = 0.5;
    double kappa_max = 0.9;
    std::size_t samples = 0;
    std::vector<ConeFamilyResult> families;
    bool pass = false;
};

// Samples: three quarters inside the deformation support, the rest uniform on the torus.
Vec cone_sample(const DynamicalSystem& sys, std::uint64_t seed, std::size_t index);

ConeReport cone_invariance(const DynamicalSystem& sys, double eps, std::size_t samples, std::uint64_t seed,
                           double kappa_max = 0.9, Exec exec = Exec::Parallel);

struct ChainReport {
    bool pass = false;
    std::size_t samples = 0;
    double worst_margin = 0.0;  // min over samples and links of 1 - d_{i+1} / d_i
    Vec witness;
    Vec witness_diagonal;
};

// Strict decrease of the chart-Jacobian diagonal.
ChainReport dominated_chain(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed,
                            Exec exec = Exec::Parallel);

// Largest off-diagonal entry of the deformed row of the chart Jacobian over support samples.
double offdiag_sup(const DynamicalSystem& sys, std::size_t samples, std::uint64_t seed,
                   Exec exec = Exec::Parallel);

}  // namespace phlab
