#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "phlab/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"phlab: partially hyperbolic torus map experiments"};
    app.require_subcommand(1);

    std::string config_path, out_dir, mode;
    std::uint64_t seed = 0;
    const char* names[] = {"gate", "lyapunov", "basin", "cone", "trap", "da", "report"};
    const char* help[] = {"verify the standing hypotheses and resolve k",
                          "Lyapunov spectra of an ensemble of starts",
                          "basin classification and Birkhoff clustering",
                          "cone-field contraction and domination chain",
                          "trapping slab or filtration inclusions",
                          "DA sink and hyperbolic complement checks",
                          "collate existing outputs into report.md"};
    for (int i = 0; i < 7; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], help[i]);
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--seed", seed, "seed override");
        sub->add_option("--mode", mode, "strict or relaxed")->check(CLI::IsMember({"strict", "relaxed"}));
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    const CLI::App* sub = app.get_subcommands().front();

    try {
        phlab::ExperimentConfig cfg;
        if (!config_path.empty()) cfg = phlab::load_config(config_path);
        phlab::Overrides o;
        if (sub->count("--out")) o.out_dir = out_dir;
        if (sub->count("--seed")) o.seed = seed;
        if (sub->count("--mode")) o.mode = phlab::parse_mode(mode);
        phlab::apply_overrides(cfg, o);
        const phlab::CommandResult r = phlab::run_command(command, cfg);
        for (const auto& f : r.files) std::cout << "wrote " << f.string() << "\n";
        (r.exit_code == 0 ? std::cout : std::cerr) << r.message << "\n";
        return r.exit_code;
    } catch (const phlab::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
