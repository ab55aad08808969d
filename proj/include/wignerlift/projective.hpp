#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wignerlift/composition.hpp"
#include "wignerlift/hilbert.hpp"

namespace wignerlift {

/// A point of projective space, stored as its canonical representative:
/// unit norm, and the first component with modulus above eq_tol is real and
/// strictly positive.
class Ray {
 public:
  /// Empty ray of dimension zero; only useful as a placeholder.
  Ray() = default;

  const ComplexVector& rep() const noexcept { return rep_; }
  Eigen::Index dim() const noexcept { return rep_.size(); }

 private:
  friend Ray canonicalize(const ComplexVector& v, const ToleranceConfig& tol);
  explicit Ray(ComplexVector rep) : rep_(std::move(rep)) {}

  ComplexVector rep_;
};

Ray canonicalize(const ComplexVector& v, const ToleranceConfig& tol = {});

/// 1 - P(r, s) < eq_tol.
bool ray_equal(const Ray& r, const Ray& s, const ToleranceConfig& tol = {});

/// x -> ray(matrix * x), or ray(matrix * conj(x)) when conjugate_input is set.
struct MatrixInduced {
  ComplexMatrix matrix;
  bool conjugate_input = false;
};

/// An explicitly listed map on finitely many rays.
struct Tabulated {
  std::vector<std::pair<Ray, Ray>> pairs;
};

enum class FrozenSlot { A, B };

/// One argument of a composition frozen: for slot B frozen to b this is
/// M_b(ray(a)) = ray(m(a, b)).
struct CompositeSlice {
  BilinearComposition composition;
  ComplexVector frozen;
  FrozenSlot frozen_slot = FrozenSlot::B;
};

/// Arbitrary representative-level map; the result is canonicalized.
struct CustomMap {
  std::function<ComplexVector(const ComplexVector&)> fn;
  std::string label;
};

class RayMapOracle {
 public:
  using Kind = std::variant<MatrixInduced, Tabulated, CompositeSlice, CustomMap>;

  /// Throws RankDeficient unless `matrix` has full column rank.
  static RayMapOracle matrix_induced(ComplexMatrix matrix, bool conjugate_input = false,
                                     const ToleranceConfig& tol = {});
  /// Throws DuplicateDomainRay if two domain rays coincide, EmptyInput if
  /// `pairs` is empty, DimensionMismatch if the rays disagree in dimension.
  static RayMapOracle tabulated(std::vector<std::pair<Ray, Ray>> pairs,
                                const ToleranceConfig& tol = {});
  static RayMapOracle composite(BilinearComposition m, ComplexVector frozen,
                                FrozenSlot frozen_slot = FrozenSlot::B);
  static RayMapOracle custom(Eigen::Index domain_dim, Eigen::Index codomain_dim,
                             std::function<ComplexVector(const ComplexVector&)> fn,
                             std::string label = {});

  Eigen::Index domain_dim() const noexcept { return domain_dim_; }
  Eigen::Index codomain_dim() const noexcept { return codomain_dim_; }
  const Kind& kind() const noexcept { return kind_; }
  bool is_tabulated() const noexcept { return std::holds_alternative<Tabulated>(kind_); }

 private:
  RayMapOracle(Eigen::Index domain_dim, Eigen::Index codomain_dim, Kind kind)
      : domain_dim_(domain_dim), codomain_dim_(codomain_dim), kind_(std::move(kind)) {}

  Eigen::Index domain_dim_;
  Eigen::Index codomain_dim_;
  Kind kind_;
};

/// Throws NotInTable for an unmatched tabulated query, ZeroVector when the
/// map annihilates the representative.
Ray apply_oracle(const RayMapOracle& map, const Ray& r, const ToleranceConfig& tol = {});

struct PreservationReport {
  std::size_t samples = 0;
  double max_abs_deviation = 0.0;
  bool pass = false;
  std::pair<Ray, Ray> worst_pair;
};

/// Pairs the lift construction relies on: (e_i, e_j) for i < j and
/// (e_i, e_i + e_j) for i != j.
std::vector<std::pair<ComplexVector, ComplexVector>> structured_pairs(Eigen::Index dim);

/// max |P(v, w) - P(Mv, Mw)| over `trials` random pairs plus the structured
/// pairs. A tabulated map can only be queried on its own domain, so for it
/// the sample set is every pair of tabulated domain rays instead.
PreservationReport check_probability_preservation(const RayMapOracle& map, Eigen::Index dim,
                                                  std::size_t trials, std::uint64_t seed,
                                                  const ToleranceConfig& tol = {});

/// Same measurement restricted to an explicit list of pairs.
PreservationReport measure_preservation(
    const RayMapOracle& map, const std::vector<std::pair<ComplexVector, ComplexVector>>& pairs,
    const ToleranceConfig& tol = {});

/// Domain rays usable as queries: the table for tabulated maps, otherwise
/// `count` seeded random states.
std::vector<Ray> sample_domain_rays(const RayMapOracle& map, std::size_t count,
                                    std::uint64_t seed, const ToleranceConfig& tol = {});

}  // namespace wignerlift
