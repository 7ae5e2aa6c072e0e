#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "phlab/anosov.hpp"
#include "phlab/circle_map.hpp"
#include "phlab/system_spec.hpp"

namespace phlab {

struct FixedPoints {
    long long count = 0;  // |det(M - I)|
    std::vector<std::array<double, 2>> points;
};

// Fixed points of a toral automorphism, enumerated exactly over the fundamental domain.
FixedPoints enumerate_fixed_points(const ToralAutomorphism& a);

struct KStep {
    int k = 0;
    double offdiag = 0.0;
    double eps_cone = 0.0;
    double worst_kappa = -1.0;  // negative when the cone check was not reached
    bool pass_offdiag = false;
    bool pass_cone = false;
};

struct KSelection {
    int k = 0;
    bool pass = false;
    std::vector<KStep> trace;
};

struct GateReport {
    std::vector<ConditionResult> conditions;
    double lambda = 0.0;
    double C = 0.0;
    double delta0 = 0.0;
    std::array<double, 2> fixed_point{0.0, 0.0};
    long long fixed_point_count = 0;
    int k = 0;
    double flow_strength = 0.0;
    std::vector<KStep> k_trace;

    bool pass() const;
    // Name of the first failing condition, empty when all pass.
    std::string first_failure() const;
};

// The four standing hypotheses: fixed point outside the box, lambda >= 6,
// lambda^2 >= 3(C+1)lambda - 3C/2, log(lambda)/log(3 lambda) > (2 delta0)^2.
GateReport check_H(int N, double delta0, double C);
GateReport check_H(int N, double delta0, bool r_uses_phi_prime = false);

constexpr std::uint64_t kGateSeed = 0x5eedULL;

// Doubles k until the off-diagonal sup is below 1e-3 of the domination gap and the
// cone check passes at eps = 1/2. Defined for F_k and G_k.
KSelection select_k(const SystemSpec& draft, std::size_t samples = 100000, double kappa_max = 0.9,
                    int k_limit = 1 << 20);

struct Certification {
    GateReport report;
    std::optional<SystemSpec> spec;
};

Certification certify(const SystemSpec& draft);

}  // namespace phlab
