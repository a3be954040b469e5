#include "dcsim/detection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dcsim/rng.hpp"

namespace dcsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_path_operator(const DensityOperator& rho) {
    if (rho.dimension() != 2)
        throw argument_error("position_pdf needs a 2x2 path density operator");
}

// Inverse-CDF draw over a cumulative table.
int draw_bin(const std::vector<double>& cumulative, double u) {
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto idx = std::distance(cumulative.begin(), it);
    return static_cast<int>(std::min<std::ptrdiff_t>(idx, cumulative.size() - 1));
}

} // namespace

void ScreenModel::validate() const {
    if (bins < 8) throw argument_error("screen needs at least 8 bins");
    if (!(fringe_period > 0.0)) throw argument_error("fringe_period must be positive");
}

DensityOperator dephase(const DensityOperator& rho) {
    const int dim = rho.dimension();
    std::vector<Complex> matrix(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
    for (int r = 0; r < dim; ++r) matrix[r * dim + r] = rho.at(r, r);
    return DensityOperator(rho.space(), std::move(matrix));
}

std::vector<double> position_pdf(const DensityOperator& rho_path, const ScreenModel& screen,
                                 PlateKind plate) {
    screen.validate();
    require_path_operator(rho_path);

    const Complex coherence =
        plate == PlateKind::movable ? Complex{0.0, 0.0} : rho_path.at(0, 1);

    std::vector<double> pdf(screen.bins);
    double total = 0.0;
    for (int b = 0; b < screen.bins; ++b) {
        const double phase = kTwoPi * screen.bin_x(b);
        const double value =
            1.0 + 2.0 * (coherence * Complex{std::cos(phase), std::sin(phase)}).real();
        pdf[b] = std::max(value, 0.0); // |rho_12| <= 1/2 keeps this nonnegative
        total += pdf[b];
    }
    for (double& p : pdf) p /= total;
    return pdf;
}

DetectionRecord sample_from_tables(std::span<const std::vector<double>> pdfs, std::uint64_t shots,
                                   std::uint64_t seed) {
    if (shots == 0) throw argument_error("shots must be >= 1");
    if (pdfs.empty()) throw argument_error("no distributions to sample");
    const std::size_t bins = pdfs.front().size();

    std::vector<std::vector<double>> cumulative;
    cumulative.reserve(pdfs.size());
    for (const std::vector<double>& pdf : pdfs) {
        if (pdf.size() != bins) throw argument_error("distribution sizes differ");
        std::vector<double> cdf(pdf.size());
        double running = 0.0;
        for (std::size_t b = 0; b < pdf.size(); ++b) {
            if (!(pdf[b] >= 0.0)) throw argument_error("negative probability in table");
            running += pdf[b];
            cdf[b] = running;
        }
        if (!(running > 0.0)) throw argument_error("distribution sums to zero");
        for (double& c : cdf) c /= running;
        cdf.back() = 1.0;
        cumulative.push_back(std::move(cdf));
    }

    DetectionRecord record;
    record.counts.assign(bins, 0);
    record.shots = shots;
    record.seed = seed;

    Rng rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        for (const std::vector<double>& cdf : cumulative) {
            ++record.counts[draw_bin(cdf, rng.next_unit())];
        }
    }
    record.total_detections = shots * pdfs.size();
    return record;
}

DetectionRecord sample_detections(const SuperSystemState& state, const ScreenModel& screen,
                                  PlateKind plate, std::uint64_t shots, std::uint64_t seed) {
    screen.validate();
    std::vector<std::vector<double>> pdfs;
    if (state.photon_count() == 1) {
        pdfs.push_back(position_pdf(density_from_pure(state.photon().state()), screen, plate));
    } else {
        // The plate measures i and n simultaneously and independently, each
        // distributed by its own reduced operator.
        const DensityOperator rho = density_from_pure(state.two_photon_state());
        pdfs.push_back(position_pdf(partial_trace(rho, kInitialPhoton), screen, plate));
        pdfs.push_back(position_pdf(partial_trace(rho, kNewPhoton), screen, plate));
    }
    return sample_from_tables(pdfs, shots, seed);
}

VisibilityEstimate fit_visibility(std::span<const double> bin_values) {
    const int n = static_cast<int>(bin_values.size());
    if (n < 8) throw argument_error("visibility fit needs at least 8 bins");

    // Model c_b = a0 + a1 cos(2 pi x_b) + a2 sin(2 pi x_b). Bin centers over
    // exactly one period make the design matrix orthogonal, so the normal
    // equations reduce to projections.
    double a0 = 0.0, a1 = 0.0, a2 = 0.0;
    for (int b = 0; b < n; ++b) {
        const double phase = kTwoPi * (b + 0.5) / n;
        a0 += bin_values[b];
        a1 += bin_values[b] * std::cos(phase);
        a2 += bin_values[b] * std::sin(phase);
    }
    a0 /= n;
    a1 *= 2.0 / n;
    a2 *= 2.0 / n;

    if (a0 <= 0.0) throw argument_error("visibility fit needs a positive mean intensity");

    double ssr = 0.0;
    for (int b = 0; b < n; ++b) {
        const double phase = kTwoPi * (b + 0.5) / n;
        const double fitted = a0 + a1 * std::cos(phase) + a2 * std::sin(phase);
        ssr += (bin_values[b] - fitted) * (bin_values[b] - fitted);
    }
    const double sigma_sq = ssr / std::max(n - 3, 1);

    const double amplitude = std::hypot(a1, a2);
    const double v = amplitude / a0;

    // Propagated from Var(a0) = sigma^2/n, Var(a1) = Var(a2) = 2 sigma^2/n.
    const double var_v = (2.0 * sigma_sq / n + v * v * sigma_sq / n) / (a0 * a0);

    VisibilityEstimate est;
    est.value = std::clamp(v, 0.0, 1.0);
    est.std_error = std::sqrt(std::max(var_v, 0.0));
    return est;
}

VisibilityEstimate visibility(const DetectionRecord& record) {
    if (record.total_detections < 1000)
        throw argument_error("visibility estimate needs at least 1000 detections");
    std::vector<double> values(record.counts.size());
    std::transform(record.counts.begin(), record.counts.end(), values.begin(),
                   [](std::uint64_t c) { return static_cast<double>(c); });
    return fit_visibility(values);
}

} // namespace dcsim
