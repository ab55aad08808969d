#include "wignerlift/projective.hpp"

#include <cmath>
#include <limits>

#include "wignerlift/error.hpp"

namespace wignerlift {

Ray canonicalize(const ComplexVector& v, const ToleranceConfig& tol) {
  const double norm = v.norm();
  if (norm < tol.eq_tol) throw Error(ErrorCode::ZeroVector, "cannot canonicalize a zero vector");
  ComplexVector rep = v / norm;
  for (Eigen::Index k = 0; k < rep.size(); ++k) {
    const double modulus = std::abs(rep[k]);
    if (modulus <= tol.eq_tol) continue;
    rep *= std::conj(rep[k]) / modulus;
    rep[k] = modulus;
    break;
  }
  return Ray(std::move(rep));
}

bool ray_equal(const Ray& r, const Ray& s, const ToleranceConfig& tol) {
  if (r.dim() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "rays differ in dimension");
  return 1.0 - transition_probability(r.rep(), s.rep(), tol) < tol.eq_tol;
}

RayMapOracle RayMapOracle::matrix_induced(ComplexMatrix matrix, bool conjugate_input,
                                          const ToleranceConfig& tol) {
  std::vector<ComplexVector> columns;
  columns.reserve(static_cast<std::size_t>(matrix.cols()));
  for (Eigen::Index c = 0; c < matrix.cols(); ++c) columns.emplace_back(matrix.col(c));
  if (matrix.cols() == 0 || span(columns, tol).dim() != matrix.cols()) {
    throw Error(ErrorCode::RankDeficient, "inducing matrix must have full column rank");
  }
  const auto rows = matrix.rows(), cols = matrix.cols();
  return RayMapOracle(cols, rows, MatrixInduced{std::move(matrix), conjugate_input});
}

RayMapOracle RayMapOracle::tabulated(std::vector<std::pair<Ray, Ray>> pairs,
                                     const ToleranceConfig& tol) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyInput, "empty ray table");
  const Eigen::Index domain = pairs.front().first.dim();
  const Eigen::Index codomain = pairs.front().second.dim();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (pairs[p].first.dim() != domain || pairs[p].second.dim() != codomain) {
      throw Error(ErrorCode::DimensionMismatch, "table entry " + std::to_string(p));
    }
    for (std::size_t q = 0; q < p; ++q) {
      if (ray_equal(pairs[q].first, pairs[p].first, tol)) {
        throw Error(ErrorCode::DuplicateDomainRay,
                    "entries " + std::to_string(q) + " and " + std::to_string(p));
      }
    }
  }
  return RayMapOracle(domain, codomain, Tabulated{std::move(pairs)});
}

RayMapOracle RayMapOracle::composite(BilinearComposition m, ComplexVector frozen,
                                     FrozenSlot frozen_slot) {
  const Eigen::Index frozen_dim = frozen_slot == FrozenSlot::B ? m.dim_b() : m.dim_a();
  if (frozen.size() != frozen_dim) {
    throw Error(ErrorCode::DimensionMismatch, "frozen argument does not fit its slot");
  }
  const Eigen::Index domain = frozen_slot == FrozenSlot::B ? m.dim_a() : m.dim_b();
  const Eigen::Index codomain = m.dim_c();
  return RayMapOracle(domain, codomain,
                      CompositeSlice{std::move(m), std::move(frozen), frozen_slot});
}

RayMapOracle RayMapOracle::custom(Eigen::Index domain_dim, Eigen::Index codomain_dim,
                                  std::function<ComplexVector(const ComplexVector&)> fn,
                                  std::string label) {
  if (domain_dim < 1 || codomain_dim < 1) {
    throw Error(ErrorCode::DimensionMismatch, "oracle dimensions must be positive");
  }
  return RayMapOracle(domain_dim, codomain_dim, CustomMap{std::move(fn), std::move(label)});
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Ray apply_oracle(const RayMapOracle& map, const Ray& r, const ToleranceConfig& tol) {
  if (r.dim() != map.domain_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "ray does not live in the oracle domain");
  }
  const ComplexVector image = std::visit(
      Overloaded{
          [&](const MatrixInduced& k) -> ComplexVector {
            return k.conjugate_input ? ComplexVector(k.matrix * r.rep().conjugate())
                                     : ComplexVector(k.matrix * r.rep());
          },
          [&](const Tabulated& k) -> ComplexVector {
            for (const auto& [in, out] : k.pairs) {
              if (ray_equal(in, r, tol)) return out.rep();
            }
            throw Error(ErrorCode::NotInTable, "query ray is not tabulated");
          },
          [&](const CompositeSlice& k) -> ComplexVector {
            return k.frozen_slot == FrozenSlot::B ? evaluate(k.composition, r.rep(), k.frozen)
                                                  : evaluate(k.composition, k.frozen, r.rep());
          },
          [&](const CustomMap& k) -> ComplexVector { return k.fn(r.rep()); },
      },
      map.kind());
  if (image.size() != map.codomain_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "oracle image has the wrong dimension");
  }
  return canonicalize(image, tol);
}

std::vector<std::pair<ComplexVector, ComplexVector>> structured_pairs(Eigen::Index dim) {
  std::vector<std::pair<ComplexVector, ComplexVector>> out;
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (i == j) continue;
      const ComplexVector ei = basis_vector(dim, i);
      const ComplexVector ej = basis_vector(dim, j);
      if (i < j) out.emplace_back(ei, ej);
      out.emplace_back(ei, ei + ej);
    }
  }
  return out;
}

PreservationReport measure_preservation(
    const RayMapOracle& map, const std::vector<std::pair<ComplexVector, ComplexVector>>& pairs,
    const ToleranceConfig& tol) {
  PreservationReport report;
  double worst = -1.0;
  for (const auto& [v, w] : pairs) {
    const Ray rv = canonicalize(v, tol);
    const Ray rw = canonicalize(w, tol);
    const double before = transition_probability(rv.rep(), rw.rep(), tol);
    const double after = transition_probability(apply_oracle(map, rv, tol).rep(),
                                                apply_oracle(map, rw, tol).rep(), tol);
    const double deviation = std::abs(before - after);
    ++report.samples;
    if (deviation > worst) {
      worst = deviation;
      report.worst_pair = {rv, rw};
    }
  }
  report.max_abs_deviation = std::max(worst, 0.0);
  report.pass = report.samples > 0 && report.max_abs_deviation < tol.eq_tol;
  return report;
}

std::vector<Ray> sample_domain_rays(const RayMapOracle& map, std::size_t count,
                                    std::uint64_t seed, const ToleranceConfig& tol) {
  std::vector<Ray> out;
  if (const auto* table = std::get_if<Tabulated>(&map.kind())) {
    for (const auto& entry : table->pairs) out.push_back(entry.first);
    return out;
  }
  Rng rng(seed);
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    out.push_back(canonicalize(random_state(map.domain_dim(), rng), tol));
  }
  return out;
}

PreservationReport check_probability_preservation(const RayMapOracle& map, Eigen::Index dim,
                                                  std::size_t trials, std::uint64_t seed,
                                                  const ToleranceConfig& tol) {
  if (trials < 1) throw Error(ErrorCode::InvalidPlan, "trials must be at least 1");
  if (dim != map.domain_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "dim does not match the oracle domain");
  }
  std::vector<std::pair<ComplexVector, ComplexVector>> pairs;
  if (map.is_tabulated()) {
    const auto rays = sample_domain_rays(map, 0, seed, tol);
    for (std::size_t p = 0; p < rays.size(); ++p) {
      for (std::size_t q = p + 1; q < rays.size(); ++q) pairs.emplace_back(rays[p].rep(), rays[q].rep());
    }
  } else {
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      ComplexVector v = random_state(dim, rng);
      ComplexVector w = random_state(dim, rng);
      pairs.emplace_back(std::move(v), std::move(w));
    }
    for (auto& p : structured_pairs(dim)) pairs.push_back(std::move(p));
  }
  return measure_preservation(map, pairs, tol);
}

}  // namespace wignerlift
