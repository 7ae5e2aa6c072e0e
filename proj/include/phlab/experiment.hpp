#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phlab/gate.hpp"
#include "phlab/system_spec.hpp"

namespace phlab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key = value configuration. Unset "auto" fields stay zero until the gate resolves them.
struct ExperimentConfig {
    SystemSpec spec;
    bool delta0_set = false;
    std::size_t ensemble = 100;
    std::size_t steps = 10000;
    std::size_t transient = 0;  // 0 selects the default for the command
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
    std::size_t window = 10000;
    std::size_t budget = 20'000'000;
    double cone_eps = 0.5;
    std::filesystem::path out_dir = "out";
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

// Command-line overrides, then mode-dependent defaults and validation.
struct Overrides {
    std::optional<std::filesystem::path> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<Mode> mode;
};
void apply_overrides(ExperimentConfig& cfg, const Overrides& o);

struct CommandResult {
    int exit_code = 0;  // 0 pass, 1 check failed, 2 configuration error
    std::string message;
    std::vector<std::filesystem::path> files;
};

CommandResult cmd_gate(const ExperimentConfig& cfg);
CommandResult cmd_lyapunov(const ExperimentConfig& cfg);
CommandResult cmd_basin(const ExperimentConfig& cfg);
CommandResult cmd_cone(const ExperimentConfig& cfg);
CommandResult cmd_trap(const ExperimentConfig& cfg);
CommandResult cmd_da(const ExperimentConfig& cfg);
CommandResult cmd_report(const ExperimentConfig& cfg);

CommandResult run_command(const std::string& name, const ExperimentConfig& cfg);

// "# "-prefixed header block shared by every CSV output.
std::string csv_header(const std::string& command, const SystemSpec& spec, const ExperimentConfig& cfg);

}  // namespace phlab
