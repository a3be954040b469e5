// Command-line front end for the delayed-choice interferometry simulator.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "dcsim/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Delayed-choice interferometry simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed_override;
    std::optional<std::uint64_t> shots_override;

    CLI::App* run = app.add_subcommand("run", "Run one experiment config");
    run->add_option("config", config_path, "Config file")->required();
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_option("--seed", seed_override, "Override the config seed");
    run->add_option("--shots", shots_override, "Override the config shot count");

    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep config");
    sweep->add_option("config", config_path, "Config file with a [sweep] section")->required();
    sweep->add_option("--out", out_dir, "Output directory")->required();

    CLI::App* check = app.add_subcommand("check", "Validate a config without running it");
    check->add_option("config", config_path, "Config file")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed())
        return dcsim::cli::run_command(config_path, out_dir, {seed_override, shots_override},
                                       std::cerr);
    if (sweep->parsed()) return dcsim::cli::sweep_command(config_path, out_dir, std::cerr);
    return dcsim::cli::check_command(config_path, std::cout);
}
