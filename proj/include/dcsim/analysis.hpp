#pragma once

// Entanglement and mixture diagnostics: Schmidt decomposition, entanglement
// entropy, the projector witness that separates the exact super-systemic
// description from its second-kind mixture, and the sub-systemic equivalence
// check showing no single-subsystem measurement can tell them apart.

#include <string_view>
#include <vector>

#include "dcsim/hilbert.hpp"

namespace dcsim {

// Coefficients below this are numerical noise, not Schmidt terms.
inline constexpr double kSchmidtRankTol = 1e-10;

struct SchmidtDecomposition {
    // All min(dim_left, dim_right) coefficients, descending, >= 0; their
    // squares sum to 1.
    std::vector<double> coefficients;
    // Orthonormal vectors for the coefficients above kSchmidtRankTol only.
    std::vector<std::vector<Complex>> left_vectors;
    std::vector<std::vector<Complex>> right_vectors;

    int rank() const;
};

SchmidtDecomposition schmidt_decompose(const StateVector& state, std::string_view left_subsystem,
                                       std::string_view right_subsystem);

// -sum c_k^2 ln c_k^2 in nats; 0 for product states, ln 2 for the maximally
// entangled two-photon state.
double entanglement_entropy(const StateVector& state, std::string_view left_subsystem,
                            std::string_view right_subsystem);

// Tr(P_ref candidate) with P_ref the projector onto `reference`: 1 certifies
// the entangled description, 1/2 on its second-kind mixture.
double super_systemic_witness(const DensityOperator& candidate, const StateVector& reference);

// True iff partial traces of both descriptions agree on every subsystem
// within kAlgebraTol, i.e. no sub-systemic measurement distinguishes them.
bool subsystem_equivalence_check(const StateVector& entangled, const DensityOperator& mixture);

// Tr(rho^2)
double purity(const DensityOperator& rho);

} // namespace dcsim
