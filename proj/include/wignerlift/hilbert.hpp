#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace wignerlift {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Numerical thresholds shared by every check in the library.
///
/// `eq_tol` decides equalities (ray equality, residual acceptance),
/// `rank_tol` decides rank and degeneracy (span, totality, surjectivity).
struct ToleranceConfig {
  double eq_tol = 1e-9;
  double rank_tol = 1e-8;

  /// Throws InvalidTolerance unless both are positive and eq_tol < 1.
  void validate() const;
};

/// A subspace of C^n stored as an orthonormal frame (columns).
class Subspace {
 public:
  Subspace(Eigen::Index ambient_dim, ComplexMatrix frame);

  Eigen::Index ambient_dim() const noexcept { return ambient_dim_; }
  Eigen::Index dim() const noexcept { return frame_.cols(); }
  const ComplexMatrix& frame() const noexcept { return frame_; }

  /// Orthogonal projector frame * frame^dagger.
  ComplexMatrix projector() const;

 private:
  Eigen::Index ambient_dim_;
  ComplexMatrix frame_;
};

ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index);

/// <v|w>, conjugate-linear in `v`.
Complex inner_product(const ComplexVector& v, const ComplexVector& w);

/// |<v|w>|^2 / (<v|v><w|w>). Exactly symmetric in its arguments.
double transition_probability(const ComplexVector& v, const ComplexVector& w,
                              const ToleranceConfig& tol = {});

/// Orthonormal basis of the linear span via modified Gram-Schmidt with one
/// reorthogonalization pass. Vectors whose residual falls below
/// rank_tol * (largest input norm) are dropped.
Subspace span(std::span<const ComplexVector> vectors, const ToleranceConfig& tol = {});

bool subspace_contains(const Subspace& s, const ComplexVector& v,
                       const ToleranceConfig& tol = {});

/// Kronecker product with index (i, j) -> i * b.size() + j.
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

// ---------------------------------------------------------------------------
// Seeded randomness
//
// Bit stream: std::mt19937_64 (fully specified by the C++ standard), seeded
// with the 64-bit seed directly. Uniforms use the top 53 bits; normals use the
// Box-Muller transform, one pair per complex Gaussian (re, im). This is stream
// version 1; changing any step changes every report.

inline constexpr int kRandomStreamVersion = 1;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Standard complex Gaussian: re and im are independent N(0, 1).
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for trial `index` of a named stream: mix64 chain over the master seed,
/// the FNV-1a hash of `tag`, and the index.
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) noexcept;

ComplexVector random_gaussian_vector(Eigen::Index dim, Rng& rng);

/// Unit vector with normalized complex-Gaussian components.
ComplexVector random_state(Eigen::Index dim, std::uint64_t seed);
ComplexVector random_state(Eigen::Index dim, Rng& rng);

/// Haar unitary: Gram-Schmidt QR of a complex-Gaussian matrix. Gram-Schmidt
/// makes the R diagonal real positive, which is the phase fix Haar needs.
ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);
ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng);

/// max |(U^dagger U - I)_kl|
double unitarity_residual(const ComplexMatrix& u);

/// Aligns `candidate` to `reference` by the global phase read off the
/// reference's largest-modulus entry, then returns the max entrywise deviation.
double phase_aligned_deviation(const ComplexMatrix& candidate, const ComplexMatrix& reference);

}  // namespace wignerlift
