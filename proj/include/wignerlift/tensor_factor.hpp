#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wignerlift/composition.hpp"
#include "wignerlift/error.hpp"
#include "wignerlift/hilbert.hpp"

namespace wignerlift {

/// Outcome of one hypothesis check on a composition map.
///
/// `residual` is the measured violation (zero for an ideal instance);
/// `detail` is a one-line human summary.
struct CheckReport {
  bool pass = false;
  std::size_t samples = 0;
  double residual = 0.0;
  std::string detail;
  /// Offending (a_i, b_j) pair, 0-based, when the failure sits on a basis pair.
  std::optional<std::pair<Eigen::Index, Eigen::Index>> basis_pair;
  std::optional<double> min_norm;
  std::optional<Eigen::Index> rank;
};

/// H1: every basis pair and `trials` random pairs map to a vector of norm
/// above rank_tol. residual = max(0, rank_tol - smallest norm).
CheckReport check_totality(const BilinearComposition& m, std::size_t trials, std::uint64_t seed,
                           const ToleranceConfig& tol = {});

/// H2 on a black-box map: additivity and homogeneity in each slot, with the
/// residual normalized by max(1, norm of the terms).
CheckReport check_bilinearity(const CompositionOracle& m, std::size_t trials, std::uint64_t seed,
                              const ToleranceConfig& tol = {});

/// |P(m(a, b), m(psi, b)) - P(a, psi)| and the mirrored B-side identity, over
/// random triples plus the structured pairs with the other slot frozen.
CheckReport check_probability_product(const BilinearComposition& m, std::size_t trials,
                                      std::uint64_t seed, const ToleranceConfig& tol = {});

/// H3: numerical rank of the basis-image matrix equals dim_c. The rank
/// threshold is rank_tol times the largest singular value.
CheckReport check_span_surjectivity(const BilinearComposition& m, const ToleranceConfig& tol = {});

struct BasisReport {
  std::vector<ComplexVector> vectors;  ///< m(e_i, e_j) at i * dim_b + j
  ComplexMatrix gram;
  double gram_deviation = 0.0;  ///< max |Gram - I|
  bool pass = false;
};

BasisReport map_basis(const BilinearComposition& m, const ToleranceConfig& tol = {});

struct IsomorphismResult {
  ComplexMatrix iso;  ///< dim_c x (dim_a * dim_b)
  double unitarity_residual = 0.0;
  double factorization_residual = 0.0;
};

/// Thrown by construct_isomorphism when a hypothesis fails; `condition()`
/// is "H1", "H3" or "basis".
class PreconditionError : public Error {
 public:
  PreconditionError(std::string condition, const std::string& what)
      : Error(ErrorCode::PreconditionFailed, condition + ": " + what),
        condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

struct IsomorphismOptions {
  ToleranceConfig tol;
  std::size_t trials = 100;
  std::uint64_t seed = 0x150ULL;
};

/// The unique I with I(a (x) b) = m(a, b): column i * dim_b + j is m(e_i, e_j).
/// Checks H1, H3 and the orthonormal basis first (PreconditionError), then
/// DimensionMismatch if dim_c != dim_a * dim_b.
IsomorphismResult construct_isomorphism(const BilinearComposition& m,
                                        const IsomorphismOptions& options = {});

/// Largest |P(m(a1,b), m(a2,b)) - P(a1,a2)|, |P(m(a,b1), m(a,b2)) - P(b1,b2)|
/// and |P(m(a,b), m(psi,phi)) - P(a,psi) P(b,phi)| over random states.
struct IndependenceReport {
  CheckReport a_side;
  CheckReport b_side;
  CheckReport factorization;
  bool pass() const noexcept { return a_side.pass && b_side.pass && factorization.pass; }
};

IndependenceReport check_composite_independence(const BilinearComposition& m, std::size_t trials,
                                                std::uint64_t seed,
                                                const ToleranceConfig& tol = {});

/// Kronecker model: m = canonical tensor of the given dims.
IndependenceReport check_composite_independence(Eigen::Index dim_a, Eigen::Index dim_b,
                                                std::size_t trials, std::uint64_t seed,
                                                const ToleranceConfig& tol = {});

/// Single-system Born rule in the composite: measuring a on A alone (summing
/// a (x) b_j over an orthonormal B basis) in m(psi, phi) gives P(a, psi), and
/// symmetrically for B.
CheckReport check_single_system_born(const BilinearComposition& m, std::size_t trials,
                                     std::uint64_t seed, const ToleranceConfig& tol = {});

enum class Convention { Linear, Antilinear };

/// Lifts M_b(ray(a)) = ray(m(a, b)) for a random b and reports which branch
/// the composition follows in its first slot. Propagates LiftError.
Convention composition_convention(const BilinearComposition& m, std::uint64_t seed,
                                  const ToleranceConfig& tol = {});

}  // namespace wignerlift
