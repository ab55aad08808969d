#include "wignerlift/lift.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace wignerlift {

namespace {

constexpr Complex kI{0.0, 1.0};

Ray basis_ray(Eigen::Index dim, Eigen::Index i, const ToleranceConfig& tol) {
  return canonicalize(basis_vector(dim, i), tol);
}

// Canonical image of e_1 + c e_i.
ComplexVector query_plane(const RayMapOracle& map, Eigen::Index dim, Eigen::Index i, Complex c,
                          const ToleranceConfig& tol) {
  const ComplexVector x = basis_vector(dim, 0) + c * basis_vector(dim, i);
  return apply_oracle(map, canonicalize(x, tol), tol).rep();
}

std::string index_label(Eigen::Index i) { return "e" + std::to_string(i + 1); }

enum class Branch { Linear, Antilinear, Neither };

Branch classify(const ComplexVector& image, const ComplexVector& v1, const ComplexVector& vj,
                const ToleranceConfig& tol) {
  if (1.0 - transition_probability(image, v1 + kI * vj, tol) < tol.eq_tol) return Branch::Linear;
  if (1.0 - transition_probability(image, v1 - kI * vj, tol) < tol.eq_tol) return Branch::Antilinear;
  return Branch::Neither;
}

std::vector<ComplexVector> validation_queries(const RayMapOracle& map, Eigen::Index dim,
                                              const LiftOptions& options) {
  std::vector<ComplexVector> out;
  if (map.is_tabulated()) {
    for (const auto& r : sample_domain_rays(map, 0, 0, options.tol)) out.push_back(r.rep());
    return out;
  }
  Rng rng(options.validation_seed);
  // Full support with generic coefficients.
  out.push_back(random_gaussian_vector(dim, rng));
  // No e_1 component.
  ComplexVector no_pivot = random_gaussian_vector(dim, rng);
  no_pivot[0] = 0.0;
  out.push_back(no_pivot);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      out.push_back(basis_vector(dim, i) - basis_vector(dim, j));
    }
  }
  for (std::size_t t = 0; t < options.random_validation; ++t) {
    out.push_back(random_state(dim, rng));
  }
  return out;
}

}  // namespace

SemilinearLift lift(const RayMapOracle& map, Eigen::Index domain_dim, Eigen::Index codomain_dim,
                    const LiftOptions& options) {
  const ToleranceConfig& tol = options.tol;
  tol.validate();
  if (domain_dim != map.domain_dim() || codomain_dim != map.codomain_dim()) {
    throw LiftError(ErrorCode::DimensionMismatch, "requested dims do not match the oracle");
  }
  if (domain_dim == 1) {
    throw LiftError(ErrorCode::AmbiguousTau,
                    "a one-dimensional domain cannot separate linear from antilinear");
  }
  const Eigen::Index n = domain_dim;

  // Images of the basis rays must be pairwise orthogonal.
  std::vector<ComplexVector> units;
  units.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    units.push_back(apply_oracle(map, basis_ray(n, i, tol), tol).rep());
  }
  PreservationReport basis_report;
  basis_report.max_abs_deviation = -1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double overlap = transition_probability(units[i], units[j], tol);
      ++basis_report.samples;
      if (overlap > basis_report.max_abs_deviation) {
        basis_report.max_abs_deviation = overlap;
        basis_report.worst_pair = {basis_ray(n, i, tol), basis_ray(n, j, tol)};
      }
    }
  }
  basis_report.pass = basis_report.max_abs_deviation < tol.eq_tol;
  if (!basis_report.pass) {
    std::ostringstream msg;
    msg << "basis images are not orthogonal: P = " << basis_report.max_abs_deviation;
    throw LiftError(ErrorCode::NotProbabilityPreserving, msg.str(), basis_report);
  }

  // Fix the phase of every column relative to the first through e_1 + e_i.
  std::vector<ComplexVector> columns(static_cast<std::size_t>(n));
  columns[0] = units[0];
  for (Eigen::Index i = 1; i < n; ++i) {
    const ComplexVector image = query_plane(map, n, i, 1.0, tol);
    const Complex along_first = inner_product(columns[0], image);
    const Complex along_unit = inner_product(units[i], image);
    const double off_plane = (image - along_first * columns[0] - along_unit * units[i]).norm();
    if (off_plane >= tol.eq_tol) {
      std::ostringstream msg;
      msg << "image of e1+" << index_label(i) << " leaves the plane of its basis images by "
          << off_plane;
      throw LiftError(ErrorCode::NotProbabilityPreserving, msg.str());
    }
    if (std::abs(along_first) < tol.eq_tol) {
      throw LiftError(ErrorCode::NonUnimodularK,
                      "image of e1+" + index_label(i) + " has no component along the first column");
    }
    const Complex k = along_unit / along_first;
    if (std::abs(std::abs(k) - 1.0) >= tol.eq_tol) {
      std::ostringstream msg;
      msg << "|k| = " << std::abs(k) << " for e1+" << index_label(i);
      throw LiftError(ErrorCode::NonUnimodularK, msg.str());
    }
    // |k| is 1 to within eq_tol; dropping the remainder keeps columns unit.
    columns[static_cast<std::size_t>(i)] = (k / std::abs(k)) * units[i];
  }

  // The conjugation test with c = i, first on e_2 and then on every other index.
  const Branch branch = classify(query_plane(map, n, 1, kI, tol), columns[0], columns[1], tol);
  if (branch == Branch::Neither) {
    throw LiftError(ErrorCode::InconsistentTau,
                    "image of e1+i*e2 matches neither the linear nor the antilinear branch");
  }
  for (Eigen::Index j = 2; j < n; ++j) {
    const Branch other =
        classify(query_plane(map, n, j, kI, tol), columns[0], columns[static_cast<std::size_t>(j)], tol);
    if (other != branch) {
      throw LiftError(ErrorCode::InconsistentTau,
                      "conjugation test for e1+i*" + index_label(j) + " disagrees with e1+i*e2");
    }
  }

  SemilinearLift result;
  result.matrix.resize(codomain_dim, n);
  for (Eigen::Index i = 0; i < n; ++i) result.matrix.col(i) = columns[static_cast<std::size_t>(i)];
  result.antilinear = branch == Branch::Antilinear;
  result.global_phase_convention =
      "column 1 is the canonical representative of M(ray(e1)); every other column is "
      "phased so that M(ray(e1+ej)) = ray(col1 + colj)";

  // Re-check the preservation precondition, then validate the lift itself.
  const PreservationReport recheck = check_probability_preservation(
      map, n, options.random_validation + 1, options.validation_seed, tol);
  if (!recheck.pass) {
    std::ostringstream msg;
    msg << "ray map changes transition probabilities by " << recheck.max_abs_deviation;
    throw LiftError(ErrorCode::NotProbabilityPreserving, msg.str(), recheck);
  }
  for (const auto& x : validation_queries(map, n, options)) {
    const Ray query = canonicalize(x, tol);
    const ComplexVector lifted = apply_lift(result, query.rep());
    const double miss =
        1.0 - transition_probability(lifted, apply_oracle(map, query, tol).rep(), tol);
    result.residual = std::max(result.residual, miss);
  }
  if (!(result.residual < tol.eq_tol)) {
    std::ostringstream msg;
    msg << "lift disagrees with the ray map on validation queries: 1-P = " << result.residual;
    throw LiftError(ErrorCode::NotProbabilityPreserving, msg.str());
  }
  return result;
}

ComplexVector apply_lift(const SemilinearLift& l, const ComplexVector& v) {
  if (v.size() != l.matrix.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "vector does not live in the lift domain");
  }
  if (l.antilinear) return l.matrix * v.conjugate();
  return l.matrix * v;
}

double inner_product_deviation(const SemilinearLift& l, const ComplexVector& v,
                               const ComplexVector& w, bool antilinear_branch) {
  const ComplexVector mv = apply_lift(l, v);
  const ComplexVector mw = apply_lift(l, w);
  const Complex mapped = antilinear_branch ? inner_product(mw, mv) : inner_product(mv, mw);
  return std::abs(inner_product(v, w) - mapped);
}

PreservationReport verify_lift(const SemilinearLift& l, const RayMapOracle& map,
                               std::size_t trials, std::uint64_t seed,
                               const ToleranceConfig& tol) {
  if (l.matrix.cols() != map.domain_dim() || l.matrix.rows() != map.codomain_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "lift and oracle dims differ");
  }
  const std::vector<Ray> rays = sample_domain_rays(map, trials + 1, seed, tol);
  PreservationReport report;
  double worst = -1.0;
  for (std::size_t t = 0; t < rays.size(); ++t) {
    const Ray& v = rays[t];
    const Ray& w = rays[(t + 1) % rays.size()];
    const double ray_miss =
        1.0 - transition_probability(apply_lift(l, v.rep()), apply_oracle(map, v, tol).rep(), tol);
    const double ip_miss = inner_product_deviation(l, v.rep(), w.rep(), l.antilinear);
    const double deviation = std::max(ray_miss, ip_miss);
    ++report.samples;
    if (deviation > worst) {
      worst = deviation;
      report.worst_pair = {v, w};
    }
  }
  report.max_abs_deviation = std::max(worst, 0.0);
  report.pass = report.samples > 0 && report.max_abs_deviation < tol.eq_tol;
  return report;
}

}  // namespace wignerlift
