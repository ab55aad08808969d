#include "wignerlift/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "wignerlift/error.hpp"

namespace wignerlift {

namespace {

void require_same_dim(const ComplexVector& v, const ComplexVector& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dims " + std::to_string(v.size()) + " and " + std::to_string(w.size()));
  }
}

double squared_norm(const ComplexVector& v) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) s += std::norm(v[k]);
  return s;
}

// Subtracts the projection of `w` onto each column of `frame`, one column at a
// time (modified Gram-Schmidt), then repeats once.
void orthogonalize_against(const ComplexMatrix& frame, Eigen::Index cols, ComplexVector& w) {
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index q = 0; q < cols; ++q) {
      const ComplexVector col = frame.col(q);
      w -= inner_product(col, w) * col;
    }
  }
}

}  // namespace

void ToleranceConfig::validate() const {
  if (!(eq_tol > 0.0) || !(eq_tol < 1.0) || !(rank_tol > 0.0)) {
    throw Error(ErrorCode::InvalidTolerance,
                "eq_tol must lie in (0, 1) and rank_tol must be positive");
  }
}

Subspace::Subspace(Eigen::Index ambient_dim, ComplexMatrix frame)
    : ambient_dim_(ambient_dim), frame_(std::move(frame)) {
  if (frame_.rows() != ambient_dim_ || frame_.cols() > ambient_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "frame shape does not fit ambient dimension");
  }
}

ComplexMatrix Subspace::projector() const { return frame_ * frame_.adjoint(); }

ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index) {
  ComplexVector e = ComplexVector::Zero(dim);
  e[index] = 1.0;
  return e;
}

// Hand-rolled so that swapping the arguments produces the exact conjugate:
// the real part is a sum of commuted products and the imaginary part is an
// exactly negated difference. Requires -ffp-contract=off.
Complex inner_product(const ComplexVector& v, const ComplexVector& w) {
  require_same_dim(v, w);
  double re = 0.0;
  double im = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    const double a = v[k].real(), b = v[k].imag();
    const double c = w[k].real(), d = w[k].imag();
    re += a * c + b * d;
    im += a * d - b * c;
  }
  return {re, im};
}

double transition_probability(const ComplexVector& v, const ComplexVector& w,
                              const ToleranceConfig& tol) {
  require_same_dim(v, w);
  const double nv = squared_norm(v);
  const double nw = squared_norm(w);
  if (std::sqrt(nv) < tol.eq_tol || std::sqrt(nw) < tol.eq_tol) {
    throw Error(ErrorCode::ZeroVector, "transition probability of a zero vector");
  }
  return std::norm(inner_product(v, w)) / (nv * nw);
}

Subspace span(std::span<const ComplexVector> vectors, const ToleranceConfig& tol) {
  if (vectors.empty()) throw Error(ErrorCode::EmptyInput, "span of an empty list");
  const Eigen::Index n = vectors.front().size();
  double largest = 0.0;
  for (const auto& v : vectors) {
    require_same_dim(vectors.front(), v);
    largest = std::max(largest, v.norm());
  }

  ComplexMatrix frame(n, std::min<Eigen::Index>(n, static_cast<Eigen::Index>(vectors.size())));
  Eigen::Index rank = 0;
  const double cutoff = tol.rank_tol * largest;
  for (const auto& v : vectors) {
    if (rank == n) break;
    ComplexVector w = v;
    orthogonalize_against(frame, rank, w);
    const double residual = w.norm();
    if (largest == 0.0 || residual < cutoff) continue;
    frame.col(rank++) = w / residual;
  }
  return Subspace(n, frame.leftCols(rank));
}

bool subspace_contains(const Subspace& s, const ComplexVector& v, const ToleranceConfig& tol) {
  if (v.size() != s.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vector does not live in the ambient space");
  }
  const double norm = v.norm();
  if (norm < tol.eq_tol) throw Error(ErrorCode::ZeroVector, "membership of a zero vector");
  const ComplexVector residual = v - s.frame() * (s.frame().adjoint() * v);
  return residual.norm() / norm < tol.eq_tol;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

Complex Rng::complex_gaussian() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(mix64(master) ^ h) ^ index);
}

ComplexVector random_gaussian_vector(Eigen::Index dim, Rng& rng) {
  ComplexVector v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) v[k] = rng.complex_gaussian();
  return v;
}

ComplexVector random_state(Eigen::Index dim, Rng& rng) {
  ComplexVector v = random_gaussian_vector(dim, rng);
  // A Gaussian draw of exactly zero norm has probability zero but is not
  // impossible in floating point.
  while (v.norm() == 0.0) v = random_gaussian_vector(dim, rng);
  return v / v.norm();
}

ComplexVector random_state(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(dim, rng);
}

ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  ComplexMatrix z(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) z(r, c) = rng.complex_gaussian();
  }
  ComplexMatrix q(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    ComplexVector w = z.col(c);
    orthogonalize_against(q, c, w);
    q.col(c) = w / w.norm();
  }
  return q;
}

ComplexMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

double unitarity_residual(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double phase_aligned_deviation(const ComplexMatrix& candidate, const ComplexMatrix& reference) {
  if (candidate.rows() != reference.rows() || candidate.cols() != reference.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrices differ in shape");
  }
  Eigen::Index r = 0, c = 0;
  reference.cwiseAbs().maxCoeff(&r, &c);
  const Complex ratio = reference(r, c) / candidate(r, c);
  if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag()) || std::abs(ratio) == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  const Complex phase = ratio / std::abs(ratio);
  return (phase * candidate - reference).cwiseAbs().maxCoeff();
}

}  // namespace wignerlift
