#include "dcsim/cli.hpp"

#include <cstdio>
#include <vector>

#include "dcsim/config.hpp"
#include "dcsim/report.hpp"

namespace dcsim::cli {

namespace {

int fail(std::ostream& diag, const std::exception& e) {
    diag << "error: " << e.what() << "\n";
    return 1;
}

std::string point_dir_name(std::size_t index) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "point_%03zu", index);
    return buffer;
}

} // namespace

int run_command(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                const RunOverrides& overrides, std::ostream& diag) {
    try {
        ParsedConfig parsed = parse_config(config_path);
        if (parsed.sweep) {
            diag << "error: config has a [sweep] section; use the sweep command\n";
            return 1;
        }
        if (overrides.seed) parsed.base.seed = *overrides.seed;
        if (overrides.shots) parsed.base.shots = *overrides.shots;
        validate_config(parsed.base);
        write_run_outputs(run_scenario(parsed.base), out_dir);
        return 0;
    } catch (const std::exception& e) {
        return fail(diag, e);
    }
}

int sweep_command(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
                  std::ostream& diag) {
    try {
        const ParsedConfig parsed = parse_config(config_path);
        if (!parsed.sweep) {
            diag << "error: config has no [sweep] section\n";
            return 1;
        }
        const std::vector<SweepPoint> points = expand_sweep(parsed);
        std::vector<double> params;
        std::vector<ExperimentReport> reports;
        params.reserve(points.size());
        reports.reserve(points.size());
        for (std::size_t k = 0; k < points.size(); ++k) {
            reports.push_back(run_scenario(points[k].config));
            params.push_back(points[k].parameter_value);
            write_run_outputs(reports.back(), out_dir / point_dir_name(k));
        }
        std::filesystem::create_directories(out_dir);
        atomic_write_file(out_dir / "summary.csv", render_sweep_summary(params, reports));
        return 0;
    } catch (const std::exception& e) {
        return fail(diag, e);
    }
}

int check_command(const std::filesystem::path& config_path, std::ostream& diag) {
    try {
        const ParsedConfig parsed = parse_config(config_path);
        const std::size_t runs = expand_sweep(parsed).size();
        diag << "ok: " << to_string(parsed.base.scenario) << ", " << runs
             << (runs == 1 ? " run\n" : " runs\n");
        return 0;
    } catch (const std::exception& e) {
        return fail(diag, e);
    }
}

} // namespace dcsim::cli
