#pragma once

// Exact finite-dimensional complex linear algebra over labeled tensor-product
// bases: state vectors, density operators, tensor products, partial traces,
// and mixtures. Dimensions in this project never exceed 8, so everything is
// dense and validated eagerly.

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcsim/errors.hpp"

namespace dcsim {

using Complex = std::complex<double>;

// Tolerance for exact-algebra checks (norms, Hermiticity, traces).
inline constexpr double kAlgebraTol = 1e-12;
// Slack allowed on density-operator eigenvalues before positivity fails.
inline constexpr double kEigenvalueSlack = 1e-10;
// Tolerance on mixture weight sums.
inline constexpr double kWeightTol = 1e-9;

// One tensor factor. Modes are labeled 1..dim.
struct Subsystem {
    std::string name;
    int dim = 0;

    bool operator==(const Subsystem&) const = default;
};

// A tensor-product space. Subsystems are kept sorted by name and the product
// basis is enumerated row-major in that order, so matrix layouts are
// deterministic for any set of labels.
class ProductSpace {
  public:
    ProductSpace() = default;
    explicit ProductSpace(std::vector<Subsystem> subsystems);

    int dimension() const { return dimension_; }
    const std::vector<Subsystem>& subsystems() const { return subsystems_; }
    std::size_t factor_count() const { return subsystems_.size(); }

    bool has(std::string_view name) const;
    // Position of a subsystem in the sorted factor list. Throws lookup_error.
    int index_of(std::string_view name) const;

    // Per-subsystem modes (1-based) of a flat basis index, in factor order.
    std::vector<int> modes_at(int flat) const;
    int flat_index(std::span<const int> modes) const;

    bool operator==(const ProductSpace&) const = default;

  private:
    std::vector<Subsystem> subsystems_;
    int dimension_ = 0;
};

// Human-readable label of one product-basis element, e.g. |1>_i|2>_n.
struct BasisLabel {
    std::vector<std::pair<std::string, int>> factors;

    std::string str() const;
    bool operator==(const BasisLabel&) const = default;
};

// Unit-norm amplitude list over the product basis of `space`.
class StateVector {
  public:
    StateVector(ProductSpace space, std::vector<Complex> amplitudes);

    // The basis ket with the given per-subsystem modes (factor order).
    static StateVector basis_state(ProductSpace space, std::span<const int> modes);

    const ProductSpace& space() const { return space_; }
    int dimension() const { return static_cast<int>(amplitudes_.size()); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex amplitude(int flat) const { return amplitudes_.at(flat); }
    BasisLabel label(int flat) const;

  private:
    ProductSpace space_;
    std::vector<Complex> amplitudes_;
};

// Hermitian, positive semidefinite, unit-trace matrix over a product basis.
// All three invariants are checked at construction.
class DensityOperator {
  public:
    DensityOperator(ProductSpace space, std::vector<Complex> matrix);

    const ProductSpace& space() const { return space_; }
    int dimension() const { return dim_; }
    std::span<const Complex> matrix() const { return matrix_; }
    Complex at(int row, int col) const;

  private:
    ProductSpace space_;
    std::vector<Complex> matrix_; // row-major dim x dim
    int dim_ = 0;
};

struct MixtureComponent {
    double weight = 0.0;
    StateVector state;
};

// |a> (x) |b>. Subsystem names must be disjoint; the result uses the global
// name-sorted factor order regardless of argument order.
StateVector tensor(const StateVector& a, const StateVector& b);

// Outer product |v><v|.
DensityOperator density_from_pure(const StateVector& v);

// Trace out every subsystem except `keep`.
DensityOperator partial_trace(const DensityOperator& rho, std::string_view keep);

// Convex combination sum_k w_k |v_k><v_k|. Weights must sum to 1 within
// kWeightTol and all states must share one space.
DensityOperator mix(std::span<const MixtureComponent> components);
DensityOperator mix(std::initializer_list<MixtureComponent> components);

// Eigenvalues/vectors of a Hermitian matrix via cyclic Jacobi rotations.
// Eigenvalues ascending; eigenvectors_col_major holds the matching columns.
struct HermitianEigenSystem {
    std::vector<double> eigenvalues;
    std::vector<Complex> eigenvectors_col_major;
};
HermitianEigenSystem hermitian_eigensystem(std::span<const Complex> matrix, int n);
std::vector<double> hermitian_eigenvalues(std::span<const Complex> matrix, int n);

} // namespace dcsim
