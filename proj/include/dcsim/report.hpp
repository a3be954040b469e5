#pragma once

// Report, histogram, and plot-data serialization. All writers are
// deterministic: identical reports produce byte-identical files. Files are
// written atomically (write to a temp name, then rename).

#include <filesystem>
#include <span>
#include <string>

#include "dcsim/experiments.hpp"

namespace dcsim {

// Structured-text document, one `key = value` line per field.
std::string render_report(const ExperimentReport& report);

// CSV with header `bin_center,count`. Port-mode records use the port index
// (1, 2) as bin_center.
std::string render_histogram_csv(const ExperimentReport& report);
std::string render_revival_histogram_csv(const ExperimentReport& report);

// CSV with header `x,intensity`: expected counts per bin from the exact pdf.
std::string render_plot_data_csv(const ExperimentReport& report);
std::string render_revival_plot_data_csv(const ExperimentReport& report);

void atomic_write_file(const std::filesystem::path& path, std::string_view contents);

// report.txt, histogram.csv, plotdata.csv, plus histogram_revival.csv and
// plotdata_revival.csv when the scenario has a revival epoch.
void write_run_outputs(const ExperimentReport& report, const std::filesystem::path& dir);

// summary.csv over sweep points: `param,visibility,visibility_stderr,
// count_ratio`, or `param,port_prob_1,port_prob_2,count_ratio` for
// closed-interferometer sweeps.
std::string render_sweep_summary(std::span<const double> params,
                                 std::span<const ExperimentReport> reports);

} // namespace dcsim
