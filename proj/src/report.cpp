#include "dcsim/report.hpp"

#include <fstream>
#include <sstream>

#include "dcsim/format.hpp"

namespace dcsim {

namespace {

std::string matrix_text(const DensityOperator& rho) {
    std::string out = "[";
    const int dim = rho.dimension();
    for (int r = 0; r < dim; ++r) {
        if (r > 0) out += "; ";
        for (int c = 0; c < dim; ++c) {
            if (c > 0) out += " ";
            const Complex z = rho.at(r, c);
            out += "(" + format_double(z.real()) + "," + format_double(z.imag()) + ")";
        }
    }
    return out + "]";
}

// Expected counts per bin for a list of per-photon pdfs, `shots` draws each.
std::vector<double> expected_counts(const std::vector<std::vector<double>>& pdfs,
                                    std::uint64_t shots) {
    std::vector<double> expected(pdfs.front().size(), 0.0);
    for (const std::vector<double>& pdf : pdfs)
        for (std::size_t b = 0; b < expected.size(); ++b)
            expected[b] += pdf[b] * static_cast<double>(shots);
    return expected;
}

std::string histogram_csv(const DetectionRecord& record, const ScreenModel& screen,
                          bool port_mode) {
    std::ostringstream out;
    out << "bin_center,count\n";
    for (std::size_t b = 0; b < record.counts.size(); ++b) {
        if (port_mode) out << (b + 1);
        else out << format_double(screen.bin_center(static_cast<int>(b)));
        out << "," << record.counts[b] << "\n";
    }
    return out.str();
}

std::string plot_data_csv(const std::vector<std::vector<double>>& pdfs, const ScreenModel& screen,
                          std::uint64_t shots, bool port_mode) {
    std::ostringstream out;
    out << "x,intensity\n";
    const std::vector<double> expected = expected_counts(pdfs, shots);
    for (std::size_t b = 0; b < expected.size(); ++b) {
        if (port_mode) out << (b + 1);
        else out << format_double(screen.bin_center(static_cast<int>(b)));
        out << "," << format_double(expected[b]) << "\n";
    }
    return out.str();
}

} // namespace

std::string render_report(const ExperimentReport& report) {
    const ExperimentConfig& c = report.config;
    std::ostringstream out;
    out << "scenario = " << to_string(c.scenario) << "\n";
    if (c.atom_level) out << "atom_level = " << to_string(*c.atom_level) << "\n";
    out << "plate = " << to_string(c.plate) << "\n";
    if (c.interferometer_closed)
        out << "interferometer_closed = " << (*c.interferometer_closed ? "true" : "false") << "\n";
    out << "phi = " << format_double(c.phi) << "\n";
    if (c.mirror_overlap) out << "s = " << format_double(*c.mirror_overlap) << "\n";
    out << "choice_time = " << to_string(c.choice_time) << "\n";
    out << "shots = " << c.shots << "\n";
    out << "seed = " << c.seed << "\n";
    out << "bins = " << c.screen.bins << "\n";
    out << "fringe_period = " << format_double(c.screen.fringe_period) << "\n";
    out << "total_detections = " << report.record.total_detections << "\n";
    out << "count_ratio = " << format_double(report.count_ratio) << "\n";
    if (report.visibility) {
        out << "visibility = " << format_double(report.visibility->value) << "\n";
        out << "visibility_stderr = " << format_double(report.visibility->std_error) << "\n";
    }
    if (report.visibility_exact)
        out << "visibility_exact = " << format_double(*report.visibility_exact) << "\n";
    if (report.port_probabilities) {
        out << "port_prob_1 = " << format_double((*report.port_probabilities)[0]) << "\n";
        out << "port_prob_2 = " << format_double((*report.port_probabilities)[1]) << "\n";
    }
    if (report.revival) {
        if (report.revival->fitted) {
            out << "revival_visibility = " << format_double(report.revival->fitted->value) << "\n";
            out << "revival_visibility_stderr = "
                << format_double(report.revival->fitted->std_error) << "\n";
        }
        out << "revival_visibility_exact = " << format_double(report.revival->exact_visibility)
            << "\n";
    }
    out << "witness_value = " << format_double(report.witness_value) << "\n";
    if (report.entanglement_entropy_value)
        out << "entanglement_entropy = " << format_double(*report.entanglement_entropy_value)
            << "\n";
    if (report.reduced_rho_i) out << "reduced_rho_i = " << matrix_text(*report.reduced_rho_i) << "\n";
    if (report.reduced_rho_n) out << "reduced_rho_n = " << matrix_text(*report.reduced_rho_n) << "\n";
    return out.str();
}

std::string render_histogram_csv(const ExperimentReport& report) {
    return histogram_csv(report.record, report.config.screen, report.port_mode);
}

std::string render_revival_histogram_csv(const ExperimentReport& report) {
    if (!report.revival) throw argument_error("report has no revival epoch");
    return histogram_csv(report.revival->record, report.config.screen, false);
}

std::string render_plot_data_csv(const ExperimentReport& report) {
    return plot_data_csv(report.exact_pdfs, report.config.screen, report.config.shots,
                         report.port_mode);
}

std::string render_revival_plot_data_csv(const ExperimentReport& report) {
    if (!report.revival_pdfs) throw argument_error("report has no revival epoch");
    return plot_data_csv(*report.revival_pdfs, report.config.screen, report.config.shots, false);
}

void atomic_write_file(const std::filesystem::path& path, std::string_view contents) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw argument_error("cannot write to " + tmp.string());
        out << contents;
        if (!out.flush()) throw argument_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void write_run_outputs(const ExperimentReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    atomic_write_file(dir / "report.txt", render_report(report));
    atomic_write_file(dir / "histogram.csv", render_histogram_csv(report));
    atomic_write_file(dir / "plotdata.csv", render_plot_data_csv(report));
    if (report.revival) {
        atomic_write_file(dir / "histogram_revival.csv", render_revival_histogram_csv(report));
        atomic_write_file(dir / "plotdata_revival.csv", render_revival_plot_data_csv(report));
    }
}

std::string render_sweep_summary(std::span<const double> params,
                                 std::span<const ExperimentReport> reports) {
    if (params.size() != reports.size())
        throw argument_error("sweep summary: parameter/report count mismatch");
    std::ostringstream out;
    const bool port_mode = !reports.empty() && reports.front().port_mode;
    if (port_mode) {
        out << "param,port_prob_1,port_prob_2,count_ratio\n";
        for (std::size_t k = 0; k < reports.size(); ++k) {
            out << format_double(params[k]) << ","
                << format_double((*reports[k].port_probabilities)[0]) << ","
                << format_double((*reports[k].port_probabilities)[1]) << ","
                << format_double(reports[k].count_ratio) << "\n";
        }
    } else {
        out << "param,visibility,visibility_stderr,count_ratio\n";
        for (std::size_t k = 0; k < reports.size(); ++k) {
            const ExperimentReport& r = reports[k];
            const double v = r.visibility ? r.visibility->value
                                          : r.visibility_exact.value_or(0.0);
            const double se = r.visibility ? r.visibility->std_error : 0.0;
            out << format_double(params[k]) << "," << format_double(v) << ","
                << format_double(se) << "," << format_double(r.count_ratio) << "\n";
        }
    }
    return out.str();
}

} // namespace dcsim
