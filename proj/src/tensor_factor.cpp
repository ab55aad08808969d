#include "wignerlift/tensor_factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wignerlift/lift.hpp"
#include "wignerlift/projective.hpp"

namespace wignerlift {

namespace {

std::string pair_label(Eigen::Index i, Eigen::Index j) {
  return "(a" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) + ")";
}

// Tracks the largest deviation seen and a description of where it happened.
struct WorstCase {
  double value = 0.0;
  std::string where;
  std::size_t samples = 0;

  void observe(double deviation, const std::string& label) {
    ++samples;
    if (deviation > value || samples == 1) {
      value = std::max(value, deviation);
      where = label;
    }
  }
};

CheckReport finish(const WorstCase& worst, double threshold, const std::string& what) {
  CheckReport report;
  report.samples = worst.samples;
  report.residual = worst.value;
  report.pass = worst.samples > 0 && worst.value < threshold;
  std::ostringstream msg;
  msg << what << ": max deviation " << worst.value;
  if (!worst.where.empty()) msg << " at " << worst.where;
  report.detail = msg.str();
  return report;
}

}  // namespace

CheckReport check_totality(const BilinearComposition& m, std::size_t trials, std::uint64_t seed,
                           const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorCode::InvalidPlan, "trials must be at least 1");
  double min_norm = std::numeric_limits<double>::infinity();
  std::optional<std::pair<Eigen::Index, Eigen::Index>> worst_pair;
  std::string where;
  std::size_t samples = 0;
  for (Eigen::Index i = 0; i < m.dim_a(); ++i) {
    for (Eigen::Index j = 0; j < m.dim_b(); ++j) {
      const double norm =
          evaluate(m, basis_vector(m.dim_a(), i), basis_vector(m.dim_b(), j)).norm();
      ++samples;
      if (norm < min_norm) {
        min_norm = norm;
        worst_pair = std::pair{i, j};
        where = pair_label(i, j);
      }
    }
  }
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector a = random_state(m.dim_a(), rng);
    const ComplexVector b = random_state(m.dim_b(), rng);
    const double norm = evaluate(m, a, b).norm();
    ++samples;
    if (norm < min_norm) {
      min_norm = norm;
      worst_pair.reset();
      where = "random pair " + std::to_string(t);
    }
  }
  CheckReport report;
  report.samples = samples;
  report.min_norm = min_norm;
  report.residual = std::max(0.0, tol.rank_tol - min_norm);
  report.pass = min_norm > tol.rank_tol;
  if (!report.pass) report.basis_pair = worst_pair;
  std::ostringstream msg;
  msg << "min |m(a,b)| = " << min_norm << " at " << where;
  report.detail = msg.str();
  return report;
}

CheckReport check_bilinearity(const CompositionOracle& m, std::size_t trials, std::uint64_t seed,
                              const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorCode::InvalidPlan, "trials must be at least 1");
  Rng rng(seed);
  WorstCase worst;
  const auto relative = [](const ComplexVector& lhs, const ComplexVector& t1,
                           const ComplexVector& t2) {
    const double scale = std::max({1.0, lhs.norm(), t1.norm() + t2.norm()});
    return (lhs - t1 - t2).norm() / scale;
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector a1 = random_state(m.dim_a, rng);
    const ComplexVector a2 = random_state(m.dim_a, rng);
    const ComplexVector b1 = random_state(m.dim_b, rng);
    const ComplexVector b2 = random_state(m.dim_b, rng);
    const Complex k1 = rng.complex_gaussian();
    const Complex k2 = rng.complex_gaussian();
    const std::string trial = "trial " + std::to_string(t);
    worst.observe(relative(m(k1 * a1 + k2 * a2, b1), k1 * m(a1, b1), k2 * m(a2, b1)),
                  trial + " (first slot)");
    worst.observe(relative(m(a1, k1 * b1 + k2 * b2), k1 * m(a1, b1), k2 * m(a1, b2)),
                  trial + " (second slot)");
  }
  return finish(worst, tol.eq_tol, "bilinearity");
}

CheckReport check_probability_product(const BilinearComposition& m, std::size_t trials,
                                      std::uint64_t seed, const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorCode::InvalidPlan, "trials must be at least 1");
  Rng rng(seed);
  WorstCase worst;
  const auto a_side = [&](const ComplexVector& a, const ComplexVector& psi, const ComplexVector& b,
                          const std::string& label) {
    worst.observe(std::abs(transition_probability(evaluate(m, a, b), evaluate(m, psi, b), tol) -
                           transition_probability(a, psi, tol)),
                  label);
  };
  const auto b_side = [&](const ComplexVector& a, const ComplexVector& b, const ComplexVector& phi,
                          const std::string& label) {
    worst.observe(std::abs(transition_probability(evaluate(m, a, b), evaluate(m, a, phi), tol) -
                           transition_probability(b, phi, tol)),
                  label);
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector a = random_state(m.dim_a(), rng);
    const ComplexVector psi = random_state(m.dim_a(), rng);
    const ComplexVector b = random_state(m.dim_b(), rng);
    const ComplexVector phi = random_state(m.dim_b(), rng);
    a_side(a, psi, b, "random A-side triple " + std::to_string(t));
    b_side(a, b, phi, "random B-side triple " + std::to_string(t));
  }
  const ComplexVector frozen_b = random_state(m.dim_b(), rng);
  for (const auto& [v, w] : structured_pairs(m.dim_a())) a_side(v, w, frozen_b, "structured A pair");
  const ComplexVector frozen_a = random_state(m.dim_a(), rng);
  for (const auto& [v, w] : structured_pairs(m.dim_b())) b_side(frozen_a, v, w, "structured B pair");
  return finish(worst, tol.eq_tol, "probability product");
}

CheckReport check_span_surjectivity(const BilinearComposition& m, const ToleranceConfig& tol) {
  ComplexMatrix images(m.dim_c(), m.dim_a() * m.dim_b());
  for (Eigen::Index i = 0; i < m.dim_a(); ++i) {
    for (Eigen::Index j = 0; j < m.dim_b(); ++j) {
      images.col(i * m.dim_b() + j) =
          evaluate(m, basis_vector(m.dim_a(), i), basis_vector(m.dim_b(), j));
    }
  }
  const Eigen::JacobiSVD<ComplexMatrix> svd(images);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv[0] > 0.0) {
    for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv[k] > tol.rank_tol * sv[0] ? 1 : 0;
  }
  CheckReport report;
  report.samples = static_cast<std::size_t>(images.cols());
  report.rank = rank;
  report.residual = static_cast<double>(m.dim_c() - rank);
  report.pass = rank == m.dim_c();
  report.detail = "rank " + std::to_string(rank) + " of dim_c " + std::to_string(m.dim_c());
  return report;
}

BasisReport map_basis(const BilinearComposition& m, const ToleranceConfig& tol) {
  BasisReport report;
  for (Eigen::Index i = 0; i < m.dim_a(); ++i) {
    for (Eigen::Index j = 0; j < m.dim_b(); ++j) {
      report.vectors.push_back(evaluate(m, basis_vector(m.dim_a(), i), basis_vector(m.dim_b(), j)));
    }
  }
  const auto count = static_cast<Eigen::Index>(report.vectors.size());
  report.gram.resize(count, count);
  for (Eigen::Index p = 0; p < count; ++p) {
    for (Eigen::Index q = 0; q < count; ++q) {
      report.gram(p, q) = inner_product(report.vectors[static_cast<std::size_t>(p)],
                                        report.vectors[static_cast<std::size_t>(q)]);
    }
  }
  report.gram_deviation =
      (report.gram - ComplexMatrix::Identity(count, count)).cwiseAbs().maxCoeff();
  report.pass = report.gram_deviation < tol.eq_tol && count == m.dim_c();
  return report;
}

IsomorphismResult construct_isomorphism(const BilinearComposition& m,
                                        const IsomorphismOptions& options) {
  const ToleranceConfig& tol = options.tol;
  if (const auto h1 = check_totality(m, options.trials, options.seed, tol); !h1.pass) {
    throw PreconditionError("H1", h1.detail);
  }
  if (const auto h3 = check_span_surjectivity(m, tol); !h3.pass) {
    throw PreconditionError("H3", h3.detail);
  }
  const BasisReport basis = map_basis(m, tol);
  if (!basis.pass) {
    std::ostringstream msg;
    msg << "basis images are not orthonormal: max |Gram - I| = " << basis.gram_deviation;
    throw PreconditionError("basis", msg.str());
  }
  if (m.dim_c() != m.dim_a() * m.dim_b()) {
    throw Error(ErrorCode::DimensionMismatch, "dim_c differs from dim_a * dim_b");
  }

  IsomorphismResult result;
  result.iso.resize(m.dim_c(), m.dim_c());
  for (Eigen::Index col = 0; col < m.dim_c(); ++col) {
    result.iso.col(col) = basis.vectors[static_cast<std::size_t>(col)];
  }
  result.unitarity_residual = unitarity_residual(result.iso);
  Rng rng(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) {
    const ComplexVector a = random_state(m.dim_a(), rng);
    const ComplexVector b = random_state(m.dim_b(), rng);
    result.factorization_residual = std::max(
        result.factorization_residual, (evaluate(m, a, b) - result.iso * kron(a, b)).norm());
  }
  return result;
}

IndependenceReport check_composite_independence(const BilinearComposition& m, std::size_t trials,
                                                std::uint64_t seed, const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorCode::InvalidPlan, "trials must be at least 1");
  Rng rng(seed);
  WorstCase a_side, b_side, product;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector a1 = random_state(m.dim_a(), rng);
    const ComplexVector a2 = random_state(m.dim_a(), rng);
    const ComplexVector b1 = random_state(m.dim_b(), rng);
    const ComplexVector b2 = random_state(m.dim_b(), rng);
    const std::string label = "trial " + std::to_string(t);
    a_side.observe(std::abs(transition_probability(evaluate(m, a1, b1), evaluate(m, a2, b1), tol) -
                            transition_probability(a1, a2, tol)),
                   label);
    b_side.observe(std::abs(transition_probability(evaluate(m, a1, b1), evaluate(m, a1, b2), tol) -
                            transition_probability(b1, b2, tol)),
                   label);
    product.observe(std::abs(transition_probability(evaluate(m, a1, b1), evaluate(m, a2, b2), tol) -
                             transition_probability(a1, a2, tol) *
                                 transition_probability(b1, b2, tol)),
                    label);
  }
  return {finish(a_side, tol.eq_tol, "A-side independence"),
          finish(b_side, tol.eq_tol, "B-side independence"),
          finish(product, tol.eq_tol, "joint factorization")};
}

IndependenceReport check_composite_independence(Eigen::Index dim_a, Eigen::Index dim_b,
                                                std::size_t trials, std::uint64_t seed,
                                                const ToleranceConfig& tol) {
  return check_composite_independence(BilinearComposition::canonical(dim_a, dim_b), trials, seed,
                                      tol);
}

CheckReport check_single_system_born(const BilinearComposition& m, std::size_t trials,
                                     std::uint64_t seed, const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorCode::InvalidPlan, "trials must be at least 1");
  Rng rng(seed);
  WorstCase worst;
  for (std::size_t t = 0; t < trials; ++t) {
    const ComplexVector a = random_state(m.dim_a(), rng);
    const ComplexVector psi = random_state(m.dim_a(), rng);
    const ComplexVector b = random_state(m.dim_b(), rng);
    const ComplexVector phi = random_state(m.dim_b(), rng);
    const ComplexMatrix basis_a = random_unitary(m.dim_a(), rng);
    const ComplexMatrix basis_b = random_unitary(m.dim_b(), rng);
    const ComplexVector prepared = evaluate(m, psi, phi);

    double marginal_a = 0.0;
    for (Eigen::Index j = 0; j < m.dim_b(); ++j) {
      marginal_a += transition_probability(evaluate(m, a, basis_b.col(j)), prepared, tol);
    }
    double marginal_b = 0.0;
    for (Eigen::Index i = 0; i < m.dim_a(); ++i) {
      marginal_b += transition_probability(evaluate(m, basis_a.col(i), b), prepared, tol);
    }
    const std::string label = "trial " + std::to_string(t);
    worst.observe(std::abs(marginal_a - transition_probability(a, psi, tol)), label + " (A)");
    worst.observe(std::abs(marginal_b - transition_probability(b, phi, tol)), label + " (B)");
  }
  return finish(worst, tol.eq_tol, "single-system Born rule");
}

Convention composition_convention(const BilinearComposition& m, std::uint64_t seed,
                                  const ToleranceConfig& tol) {
  const ComplexVector b = random_state(m.dim_b(), seed);
  const RayMapOracle slice = RayMapOracle::composite(m, b, FrozenSlot::B);
  LiftOptions options;
  options.tol = tol;
  options.validation_seed = seed;
  const SemilinearLift l = lift(slice, m.dim_a(), m.dim_c(), options);
  return l.antilinear ? Convention::Antilinear : Convention::Linear;
}

}  // namespace wignerlift
