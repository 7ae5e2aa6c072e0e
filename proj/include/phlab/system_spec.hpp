#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phlab {

enum class Family { LinearB, Fk, Gk, DAgk, Hk, Ak, M3Glued };
enum class Mode { Strict, Relaxed };

std::string to_string(Family f);
std::string to_string(Mode m);
Family parse_family(const std::string& s);
Mode parse_mode(const std::string& s);

struct PerturbationSpec {
    double eps = 0.0;
    std::uint64_t seed = 0;
};

// k = 0 and flow_strength = 0 mean "resolve automatically".
struct SystemSpec {
    Family family = Family::Fk;
    int N = 4;
    int k = 0;
    double delta0 = 9.5e-5;
    double flow_strength = 0.0;
    std::vector<double> rotation_offsets;  // sink positions of the glued blocks
    PerturbationSpec perturbation;
    Mode mode = Mode::Strict;
    bool r_uses_phi_prime = false;
    bool certified = false;
};

constexpr double kStrictDelta0 = 9.5e-5;
constexpr double kRelaxedDelta0 = 0.02;
constexpr double kStrictDelta0Limit = 1e-4;

int dimension(Family f);
// Number of sink/source pairs of the circle factor; 0 when there is none.
int circle_harmonics(Family f);

double lambda_of(int N);

// Fills flow strength and rotation offsets; k is left to the gate.
SystemSpec with_defaults(SystemSpec spec);

// Throws std::invalid_argument on inconsistent fields.
void validate(const SystemSpec& spec);

std::string describe(const SystemSpec& spec);

}  // namespace phlab
