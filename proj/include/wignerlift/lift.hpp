#pragma once

#include <cstdint>
#include <string>

#include "wignerlift/error.hpp"
#include "wignerlift/hilbert.hpp"
#include "wignerlift/projective.hpp"

namespace wignerlift {

/// A linear or antilinear isometry m with ray(m(x)) == M(ray(x)).
///
/// When `antilinear` is set, m(x) = matrix * conj(x). `residual` is the
/// largest 1 - P(ray(m(x)), M(ray(x))) seen over the validation queries.
struct SemilinearLift {
  ComplexMatrix matrix;
  bool antilinear = false;
  double residual = 0.0;
  std::string global_phase_convention;
};

struct LiftOptions {
  ToleranceConfig tol;
  /// Seed for the generic validation vectors (never used for construction).
  std::uint64_t validation_seed = 0x5eedULL;
  /// Extra random validation queries beyond the fixed ones.
  std::size_t random_validation = 8;
};

/// Raised by lift() for preservation failures; carries the measurement that
/// exposed the failure.
class LiftError : public Error {
 public:
  LiftError(ErrorCode code, const std::string& what, PreservationReport report = {})
      : Error(code, what), report_(std::move(report)) {}

  const PreservationReport& report() const noexcept { return report_; }

 private:
  PreservationReport report_;
};

/// Reconstructs the semilinear map behind a probability-preserving ray map.
///
/// Queries M on ray(e_i), ray(e_1 + e_i) and ray(e_1 + i e_j) only, fixes
/// the single global phase by taking the image of e_1 as column one, then
/// validates the result (including vectors with no e_1 component).
///
/// Errors: AmbiguousTau for domain_dim == 1; NotProbabilityPreserving when
/// basis images are not orthonormal, an image leaves the expected plane, or
/// validation fails; NonUnimodularK when the e_1 + e_i image needs |k| != 1;
/// InconsistentTau when the conjugation test disagrees between indices.
/// Failures are thrown as LiftError.
SemilinearLift lift(const RayMapOracle& map, Eigen::Index domain_dim, Eigen::Index codomain_dim,
                    const LiftOptions& options = {});

ComplexVector apply_lift(const SemilinearLift& l, const ComplexVector& v);

/// |<v|w> - <m(v)|m(w)>| when `antilinear_branch` is false, otherwise
/// |<v|w> - <m(w)|m(v)>|.
double inner_product_deviation(const SemilinearLift& l, const ComplexVector& v,
                               const ComplexVector& w, bool antilinear_branch);

/// Checks ray agreement with the oracle and inner-product preservation in
/// the branch selected by `l.antilinear`; the deviation is the max over both.
PreservationReport verify_lift(const SemilinearLift& l, const RayMapOracle& map,
                               std::size_t trials, std::uint64_t seed,
                               const ToleranceConfig& tol = {});

}  // namespace wignerlift
