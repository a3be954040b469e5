#include "dcsim/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace dcsim {

namespace {

double norm_sq(std::span<const Complex> amplitudes) {
    double total = 0.0;
    for (const Complex& a : amplitudes) total += std::norm(a);
    return total;
}

} // namespace

ProductSpace::ProductSpace(std::vector<Subsystem> subsystems)
    : subsystems_(std::move(subsystems)) {
    std::sort(subsystems_.begin(), subsystems_.end(),
              [](const Subsystem& a, const Subsystem& b) { return a.name < b.name; });
    dimension_ = 1;
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        const Subsystem& s = subsystems_[k];
        if (s.name.empty()) throw argument_error("subsystem name must be non-empty");
        if (s.dim < 1) throw argument_error("subsystem '" + s.name + "' must have dim >= 1");
        if (k > 0 && subsystems_[k - 1].name == s.name)
            throw labeling_conflict_error("duplicate subsystem name '" + s.name + "'");
        dimension_ *= s.dim;
    }
}

bool ProductSpace::has(std::string_view name) const {
    for (const Subsystem& s : subsystems_)
        if (s.name == name) return true;
    return false;
}

int ProductSpace::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < subsystems_.size(); ++k)
        if (subsystems_[k].name == name) return static_cast<int>(k);
    throw lookup_error("unknown subsystem '" + std::string(name) + "'");
}

std::vector<int> ProductSpace::modes_at(int flat) const {
    if (flat < 0 || flat >= dimension_) throw lookup_error("basis index out of range");
    std::vector<int> modes(subsystems_.size());
    int rest = flat;
    for (std::size_t k = subsystems_.size(); k-- > 0;) {
        const int d = subsystems_[k].dim;
        modes[k] = rest % d + 1;
        rest /= d;
    }
    return modes;
}

int ProductSpace::flat_index(std::span<const int> modes) const {
    if (modes.size() != subsystems_.size())
        throw argument_error("mode list length does not match factor count");
    int flat = 0;
    for (std::size_t k = 0; k < subsystems_.size(); ++k) {
        const int d = subsystems_[k].dim;
        if (modes[k] < 1 || modes[k] > d)
            throw lookup_error("mode " + std::to_string(modes[k]) + " out of range for subsystem '" +
                               subsystems_[k].name + "'");
        flat = flat * d + (modes[k] - 1);
    }
    return flat;
}

std::string BasisLabel::str() const {
    std::string out;
    for (const auto& [name, mode] : factors) {
        out += "|" + std::to_string(mode) + ">_" + name;
    }
    return out;
}

StateVector::StateVector(ProductSpace space, std::vector<Complex> amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
    if (static_cast<int>(amplitudes_.size()) != space_.dimension())
        throw argument_error("amplitude count does not match space dimension");
    const double n2 = norm_sq(amplitudes_);
    if (std::abs(n2 - 1.0) > kAlgebraTol)
        throw invariant_error("state vector is not unit norm (|norm^2 - 1| = " +
                              std::to_string(std::abs(n2 - 1.0)) + ")");
}

StateVector StateVector::basis_state(ProductSpace space, std::span<const int> modes) {
    std::vector<Complex> amps(space.dimension(), Complex{0.0, 0.0});
    amps[space.flat_index(modes)] = Complex{1.0, 0.0};
    return StateVector(std::move(space), std::move(amps));
}

BasisLabel StateVector::label(int flat) const {
    const std::vector<int> modes = space_.modes_at(flat);
    BasisLabel label;
    for (std::size_t k = 0; k < modes.size(); ++k)
        label.factors.emplace_back(space_.subsystems()[k].name, modes[k]);
    return label;
}

DensityOperator::DensityOperator(ProductSpace space, std::vector<Complex> matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)), dim_(space_.dimension()) {
    if (static_cast<int>(matrix_.size()) != dim_ * dim_)
        throw argument_error("matrix size does not match space dimension");
    Complex trace{0.0, 0.0};
    for (int r = 0; r < dim_; ++r) {
        trace += matrix_[r * dim_ + r];
        for (int c = r; c < dim_; ++c) {
            const Complex diff = matrix_[r * dim_ + c] - std::conj(matrix_[c * dim_ + r]);
            if (std::abs(diff) > kAlgebraTol)
                throw invariant_error("density matrix is not Hermitian");
        }
    }
    if (std::abs(trace - Complex{1.0, 0.0}) > kAlgebraTol)
        throw invariant_error("density matrix trace differs from 1");
    for (double lambda : hermitian_eigenvalues(matrix_, dim_)) {
        if (lambda < -kEigenvalueSlack)
            throw invariant_error("density matrix has negative eigenvalue " + std::to_string(lambda));
    }
}

Complex DensityOperator::at(int row, int col) const {
    if (row < 0 || row >= dim_ || col < 0 || col >= dim_)
        throw lookup_error("matrix index out of range");
    return matrix_[row * dim_ + col];
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    for (const Subsystem& s : a.space().subsystems()) {
        if (b.space().has(s.name))
            throw labeling_conflict_error("subsystem '" + s.name + "' appears in both factors");
    }
    std::vector<Subsystem> merged = a.space().subsystems();
    merged.insert(merged.end(), b.space().subsystems().begin(), b.space().subsystems().end());
    ProductSpace space(std::move(merged));

    // The merged factor order is name-sorted, which need not equal the
    // concatenation order, so amplitudes are placed label by label.
    const std::size_t na = a.space().factor_count();
    std::vector<int> mode_source(space.factor_count()); // position in (a | b) factor lists
    for (std::size_t k = 0; k < space.factor_count(); ++k) {
        const std::string& name = space.subsystems()[k].name;
        mode_source[k] = a.space().has(name) ? a.space().index_of(name)
                                             : static_cast<int>(na) + b.space().index_of(name);
    }

    std::vector<Complex> amps(space.dimension());
    std::vector<int> modes_a(na), modes_b(b.space().factor_count());
    for (int ia = 0; ia < a.dimension(); ++ia) {
        const std::vector<int> ma = a.space().modes_at(ia);
        for (int ib = 0; ib < b.dimension(); ++ib) {
            const std::vector<int> mb = b.space().modes_at(ib);
            std::vector<int> combined(space.factor_count());
            for (std::size_t k = 0; k < combined.size(); ++k) {
                const int src = mode_source[k];
                combined[k] = src < static_cast<int>(na) ? ma[src] : mb[src - na];
            }
            amps[space.flat_index(combined)] = a.amplitude(ia) * b.amplitude(ib);
        }
    }
    return StateVector(std::move(space), std::move(amps));
}

DensityOperator density_from_pure(const StateVector& v) {
    const int dim = v.dimension();
    std::vector<Complex> matrix(static_cast<std::size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            matrix[r * dim + c] = v.amplitude(r) * std::conj(v.amplitude(c));
    return DensityOperator(v.space(), std::move(matrix));
}

DensityOperator partial_trace(const DensityOperator& rho, std::string_view keep) {
    const ProductSpace& space = rho.space();
    const int keep_pos = space.index_of(keep);
    if (space.factor_count() < 2)
        throw argument_error("partial trace needs at least two subsystems");

    const Subsystem kept = space.subsystems()[keep_pos];
    ProductSpace reduced_space({kept});

    // Enumerate joint modes of the traced-out factors.
    std::vector<int> traced_dims;
    for (std::size_t k = 0; k < space.factor_count(); ++k)
        if (static_cast<int>(k) != keep_pos) traced_dims.push_back(space.subsystems()[k].dim);
    const int traced_total =
        std::accumulate(traced_dims.begin(), traced_dims.end(), 1, std::multiplies<>());

    std::vector<Complex> reduced(static_cast<std::size_t>(kept.dim) * kept.dim, Complex{0.0, 0.0});
    std::vector<int> row_modes(space.factor_count()), col_modes(space.factor_count());
    for (int a = 1; a <= kept.dim; ++a) {
        for (int b = 1; b <= kept.dim; ++b) {
            Complex sum{0.0, 0.0};
            for (int j = 0; j < traced_total; ++j) {
                int rest = j;
                for (std::size_t k = space.factor_count(); k-- > 0;) {
                    if (static_cast<int>(k) == keep_pos) continue;
                    const int d = space.subsystems()[k].dim;
                    const int mode = rest % d + 1;
                    rest /= d;
                    row_modes[k] = mode;
                    col_modes[k] = mode;
                }
                row_modes[keep_pos] = a;
                col_modes[keep_pos] = b;
                sum += rho.at(space.flat_index(row_modes), space.flat_index(col_modes));
            }
            reduced[(a - 1) * kept.dim + (b - 1)] = sum;
        }
    }
    return DensityOperator(std::move(reduced_space), std::move(reduced));
}

DensityOperator mix(std::span<const MixtureComponent> components) {
    if (components.empty()) throw argument_error("mixture needs at least one component");
    const ProductSpace& space = components.front().state.space();
    double weight_sum = 0.0;
    for (const MixtureComponent& c : components) {
        if (c.weight < 0.0 || c.weight > 1.0)
            throw normalization_error("mixture weight outside [0, 1]");
        if (!(c.state.space() == space))
            throw argument_error("mixture components must share one basis");
        weight_sum += c.weight;
    }
    if (std::abs(weight_sum - 1.0) > kWeightTol)
        throw normalization_error("mixture weights sum to " + std::to_string(weight_sum));

    const int dim = space.dimension();
    std::vector<Complex> matrix(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
    for (const MixtureComponent& c : components)
        for (int r = 0; r < dim; ++r)
            for (int col = 0; col < dim; ++col)
                matrix[r * dim + col] +=
                    c.weight * c.state.amplitude(r) * std::conj(c.state.amplitude(col));
    return DensityOperator(space, std::move(matrix));
}

DensityOperator mix(std::initializer_list<MixtureComponent> components) {
    return mix(std::span<const MixtureComponent>(components.begin(), components.size()));
}

// Cyclic Jacobi diagonalization. At dim <= 8 a handful of sweeps reaches
// machine precision; the sweep cap only guards against NaN inputs.
HermitianEigenSystem hermitian_eigensystem(std::span<const Complex> matrix, int n) {
    if (n < 1 || static_cast<int>(matrix.size()) != n * n)
        throw argument_error("hermitian_eigensystem: bad matrix size");

    std::vector<Complex> a(matrix.begin(), matrix.end());
    std::vector<Complex> v(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
    for (int i = 0; i < n; ++i) v[i * n + i] = Complex{1.0, 0.0};

    auto off_diag_sq = [&]() {
        double s = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) s += std::norm(a[p * n + q]);
        return s;
    };

    double scale = 0.0;
    for (const Complex& x : a) scale = std::max(scale, std::abs(x));
    const double stop_sq = std::max(scale, 1.0) * std::max(scale, 1.0) * 1e-30;

    for (int sweep = 0; sweep < 100 && off_diag_sq() > stop_sq; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex w = a[p * n + q];
                const double aw = std::abs(w);
                if (aw == 0.0) continue;
                const Complex phase = w / aw;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double theta = 0.5 * std::atan2(2.0 * aw, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // Rotation columns: |p'> = c|p> + s e^{-i phi}|q>,
                //                   |q'> = -s e^{i phi}|p> + c|q>.
                const Complex up_q = -s * phase;      // row p, col q of U
                const Complex uq_p = s * std::conj(phase);
                for (int r = 0; r < n; ++r) { // A <- A U
                    const Complex arp = a[r * n + p];
                    const Complex arq = a[r * n + q];
                    a[r * n + p] = arp * c + arq * uq_p;
                    a[r * n + q] = arp * up_q + arq * c;
                }
                for (int col = 0; col < n; ++col) { // A <- U^dagger A
                    const Complex apc = a[p * n + col];
                    const Complex aqc = a[q * n + col];
                    a[p * n + col] = c * apc + std::conj(uq_p) * aqc;
                    a[q * n + col] = std::conj(up_q) * apc + c * aqc;
                }
                for (int r = 0; r < n; ++r) { // V <- V U
                    const Complex vrp = v[r * n + p];
                    const Complex vrq = v[r * n + q];
                    v[r * n + p] = vrp * c + vrq * uq_p;
                    v[r * n + q] = vrp * up_q + vrq * c;
                }
            }
        }
    }
    if (off_diag_sq() > 1e-20 * std::max(scale * scale, 1.0))
        throw invariant_error("Jacobi eigensolver failed to converge");

    // Sort ascending, carrying eigenvector columns along.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a[i * n + i].real() < a[j * n + j].real(); });

    HermitianEigenSystem out;
    out.eigenvalues.resize(n);
    out.eigenvectors_col_major.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a[order[k] * n + order[k]].real();
        for (int r = 0; r < n; ++r)
            out.eigenvectors_col_major[static_cast<std::size_t>(k) * n + r] = v[r * n + order[k]];
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(std::span<const Complex> matrix, int n) {
    return hermitian_eigensystem(matrix, n).eigenvalues;
}

} // namespace dcsim
