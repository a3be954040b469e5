#pragma once

// Shared test helpers: deterministic random-state generators and the
// independent brute-force oracles the library is checked against. Everything
// here stays deliberately naive and separate from the library's code paths.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "dcsim/hilbert.hpp"
#include "dcsim/rng.hpp"

namespace testsupport {

using dcsim::Complex;

// Box-Muller normal deviate from the library's seeded generator (the
// generator is shared plumbing; the oracles below are not).
inline double gaussian(dcsim::Rng& rng) {
    double u1 = rng.next_unit();
    while (u1 <= 1e-300) u1 = rng.next_unit();
    const double u2 = rng.next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline std::vector<Complex> random_unit_vector(dcsim::Rng& rng, int dim) {
    std::vector<Complex> amps(dim);
    double norm_sq = 0.0;
    for (Complex& a : amps) {
        a = Complex{gaussian(rng), gaussian(rng)};
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (Complex& a : amps) a *= inv;
    return amps;
}

// Random density matrix rho = G G^dagger / Tr(G G^dagger): Hermitian, PSD,
// unit trace by construction.
inline std::vector<Complex> random_density_matrix(dcsim::Rng& rng, int dim) {
    std::vector<Complex> g(static_cast<std::size_t>(dim) * dim);
    for (Complex& x : g) x = Complex{gaussian(rng), gaussian(rng)};
    std::vector<Complex> rho(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            for (int k = 0; k < dim; ++k)
                rho[r * dim + c] += g[r * dim + k] * std::conj(g[c * dim + k]);
    Complex trace{0.0, 0.0};
    for (int r = 0; r < dim; ++r) trace += rho[r * dim + r];
    for (Complex& x : rho) x /= trace;
    // Clean the diagonal so the strict Hermiticity check cannot trip on
    // representation noise.
    for (int r = 0; r < dim; ++r) rho[r * dim + r] = Complex{rho[r * dim + r].real(), 0.0};
    for (int r = 0; r < dim; ++r)
        for (int c = r + 1; c < dim; ++c) rho[c * dim + r] = std::conj(rho[r * dim + c]);
    return rho;
}

// Brute-force partial trace of a 4x4 operator over a 2 (x) 2 product basis
// ordered (11, 12, 21, 22): explicit index arithmetic, nothing shared with
// the library's label-driven implementation.
inline std::array<Complex, 4> brute_force_trace_out_second(const std::vector<Complex>& rho4) {
    std::array<Complex, 4> out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Complex sum{0.0, 0.0};
            for (int j = 0; j < 2; ++j) sum += rho4[(2 * a + j) * 4 + (2 * b + j)];
            out[a * 2 + b] = sum;
        }
    return out;
}

inline std::array<Complex, 4> brute_force_trace_out_first(const std::vector<Complex>& rho4) {
    std::array<Complex, 4> out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Complex sum{0.0, 0.0};
            for (int j = 0; j < 2; ++j) sum += rho4[(2 * j + a) * 4 + (2 * j + b)];
            out[a * 2 + b] = sum;
        }
    return out;
}

// 2x2 complex matrix product, for building interferometer oracles by hand.
inline std::array<Complex, 4> mat2_mul(const std::array<Complex, 4>& a,
                                       const std::array<Complex, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline std::array<Complex, 2> mat2_apply(const std::array<Complex, 4>& m,
                                         const std::array<Complex, 2>& v) {
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

inline dcsim::ProductSpace photon_pair_space() {
    return dcsim::ProductSpace({{"i", 2}, {"n", 2}});
}

// (|1,1> + |2,2>)/sqrt 2 over the two photons, basis order (11, 12, 21, 22).
inline dcsim::StateVector entangled_pair_state() {
    return dcsim::StateVector(photon_pair_space(),
                              {Complex{kInvSqrt2, 0.0}, Complex{}, Complex{}, Complex{kInvSqrt2, 0.0}});
}

// The second-kind mixture: (1/2)|11><11| + (1/2)|22><22|.
inline dcsim::DensityOperator second_kind_mixture() {
    const dcsim::ProductSpace space = photon_pair_space();
    const dcsim::StateVector both_upper =
        dcsim::StateVector::basis_state(space, std::array{1, 1});
    const dcsim::StateVector both_lower =
        dcsim::StateVector::basis_state(space, std::array{2, 2});
    return dcsim::mix({{0.5, both_upper}, {0.5, both_lower}});
}

} // namespace testsupport
