#include "dcsim/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace dcsim {

int SchmidtDecomposition::rank() const {
    return static_cast<int>(std::count_if(coefficients.begin(), coefficients.end(),
                                          [](double c) { return c > kSchmidtRankTol; }));
}

SchmidtDecomposition schmidt_decompose(const StateVector& state, std::string_view left_subsystem,
                                       std::string_view right_subsystem) {
    const ProductSpace& space = state.space();
    if (space.factor_count() != 2)
        throw argument_error("schmidt_decompose needs a state over exactly two subsystems");
    const int left_pos = space.index_of(left_subsystem);
    const int right_pos = space.index_of(right_subsystem);
    if (left_pos == right_pos) throw argument_error("bipartition subsystems must differ");

    const int dim_left = space.subsystems()[left_pos].dim;
    const int dim_right = space.subsystems()[right_pos].dim;

    // Coefficient matrix M[a][b] = <a|_left <b|_right psi.
    std::vector<Complex> coeff(static_cast<std::size_t>(dim_left) * dim_right);
    std::vector<int> modes(2);
    for (int a = 1; a <= dim_left; ++a) {
        for (int b = 1; b <= dim_right; ++b) {
            modes[left_pos] = a;
            modes[right_pos] = b;
            coeff[(a - 1) * dim_right + (b - 1)] = state.amplitude(space.flat_index(modes));
        }
    }

    // Left vectors are eigenvectors of M M^dagger; right vectors follow as
    // (u_k^dagger M) / c_k, orthonormal by construction.
    std::vector<Complex> gram(static_cast<std::size_t>(dim_left) * dim_left, Complex{0.0, 0.0});
    for (int r = 0; r < dim_left; ++r)
        for (int c = 0; c < dim_left; ++c)
            for (int b = 0; b < dim_right; ++b)
                gram[r * dim_left + c] +=
                    coeff[r * dim_right + b] * std::conj(coeff[c * dim_right + b]);

    const HermitianEigenSystem eig = hermitian_eigensystem(gram, dim_left);

    const int terms = std::min(dim_left, dim_right);
    SchmidtDecomposition out;
    out.coefficients.reserve(terms);
    // Eigenvalues ascending; take the largest `terms` in descending order.
    for (int k = dim_left - 1; k >= dim_left - terms; --k) {
        const double c = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        out.coefficients.push_back(c);
        if (c <= kSchmidtRankTol) continue;

        std::vector<Complex> u(dim_left);
        for (int r = 0; r < dim_left; ++r)
            u[r] = eig.eigenvectors_col_major[static_cast<std::size_t>(k) * dim_left + r];
        // Fix the arbitrary eigenvector phase: largest component real positive.
        int pivot = 0;
        for (int r = 1; r < dim_left; ++r)
            if (std::abs(u[r]) > std::abs(u[pivot])) pivot = r;
        const Complex phase = std::abs(u[pivot]) > 0.0 ? u[pivot] / std::abs(u[pivot])
                                                       : Complex{1.0, 0.0};
        for (Complex& x : u) x /= phase;

        std::vector<Complex> v(dim_right, Complex{0.0, 0.0});
        for (int b = 0; b < dim_right; ++b) {
            for (int r = 0; r < dim_left; ++r)
                v[b] += std::conj(u[r]) * coeff[r * dim_right + b];
            v[b] /= c;
        }
        out.left_vectors.push_back(std::move(u));
        out.right_vectors.push_back(std::move(v));
    }
    return out;
}

double entanglement_entropy(const StateVector& state, std::string_view left_subsystem,
                            std::string_view right_subsystem) {
    const SchmidtDecomposition schmidt =
        schmidt_decompose(state, left_subsystem, right_subsystem);
    double entropy = 0.0;
    for (double c : schmidt.coefficients) {
        const double p = c * c;
        if (p > 1e-15) entropy -= p * std::log(p);
    }
    return entropy;
}

double super_systemic_witness(const DensityOperator& candidate, const StateVector& reference) {
    if (candidate.dimension() != reference.dimension())
        throw argument_error("witness: dimension mismatch");
    Complex value{0.0, 0.0};
    const int dim = candidate.dimension();
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            value += std::conj(reference.amplitude(r)) * candidate.at(r, c) * reference.amplitude(c);
    return std::clamp(value.real(), 0.0, 1.0);
}

bool subsystem_equivalence_check(const StateVector& entangled, const DensityOperator& mixture) {
    if (!(entangled.space() == mixture.space()))
        throw argument_error("equivalence check: subsystem structure mismatch");
    const DensityOperator exact = density_from_pure(entangled);
    for (const Subsystem& s : entangled.space().subsystems()) {
        const DensityOperator lhs = partial_trace(exact, s.name);
        const DensityOperator rhs = partial_trace(mixture, s.name);
        for (int r = 0; r < lhs.dimension(); ++r)
            for (int c = 0; c < lhs.dimension(); ++c)
                if (std::abs(lhs.at(r, c) - rhs.at(r, c)) > kAlgebraTol) return false;
    }
    return true;
}

double purity(const DensityOperator& rho) {
    const int dim = rho.dimension();
    Complex trace{0.0, 0.0};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            trace += rho.at(r, c) * rho.at(c, r);
    return trace.real();
}

} // namespace dcsim
