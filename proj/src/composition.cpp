#include "wignerlift/composition.hpp"

#include <utility>

#include "wignerlift/error.hpp"

namespace wignerlift {

BilinearComposition::BilinearComposition(Eigen::Index dim_a, Eigen::Index dim_b,
                                         Eigen::Index dim_c, std::vector<Complex> coeffs)
    : dim_a_(dim_a), dim_b_(dim_b), dim_c_(dim_c), coeffs_(std::move(coeffs)) {
  if (dim_a_ < 1 || dim_b_ < 1 || dim_c_ < 1) {
    throw Error(ErrorCode::DimensionMismatch, "composition dimensions must be positive");
  }
  const auto expected = static_cast<std::size_t>(dim_a_ * dim_b_ * dim_c_);
  if (coeffs_.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(expected) + " coefficients, got " +
                    std::to_string(coeffs_.size()));
  }
}

BilinearComposition BilinearComposition::canonical(Eigen::Index dim_a, Eigen::Index dim_b) {
  const Eigen::Index dim_c = dim_a * dim_b;
  BilinearComposition m(dim_a, dim_b, dim_c,
                        std::vector<Complex>(static_cast<std::size_t>(dim_c * dim_c)));
  for (Eigen::Index i = 0; i < dim_a; ++i) {
    for (Eigen::Index j = 0; j < dim_b; ++j) m.coeff(i * dim_b + j, i, j) = 1.0;
  }
  return m;
}

BilinearComposition BilinearComposition::rotated(Eigen::Index dim_a, Eigen::Index dim_b,
                                                 const ComplexMatrix& u) {
  if (u.cols() != dim_a * dim_b) {
    throw Error(ErrorCode::DimensionMismatch, "rotation must act on the product space");
  }
  BilinearComposition m(dim_a, dim_b, u.rows(),
                        std::vector<Complex>(static_cast<std::size_t>(u.rows() * u.cols())));
  for (Eigen::Index k = 0; k < u.rows(); ++k) {
    for (Eigen::Index i = 0; i < dim_a; ++i) {
      for (Eigen::Index j = 0; j < dim_b; ++j) m.coeff(k, i, j) = u(k, i * dim_b + j);
    }
  }
  return m;
}

std::size_t BilinearComposition::offset(Eigen::Index k, Eigen::Index i, Eigen::Index j) const {
  return static_cast<std::size_t>(k * (dim_a_ * dim_b_) + i * dim_b_ + j);
}

Complex& BilinearComposition::coeff(Eigen::Index k, Eigen::Index i, Eigen::Index j) {
  return coeffs_[offset(k, i, j)];
}

const Complex& BilinearComposition::coeff(Eigen::Index k, Eigen::Index i, Eigen::Index j) const {
  return coeffs_[offset(k, i, j)];
}

ComplexMatrix BilinearComposition::as_matrix() const {
  ComplexMatrix out(dim_c_, dim_a_ * dim_b_);
  for (Eigen::Index k = 0; k < dim_c_; ++k) {
    for (Eigen::Index col = 0; col < dim_a_ * dim_b_; ++col) {
      out(k, col) = coeffs_[static_cast<std::size_t>(k * (dim_a_ * dim_b_) + col)];
    }
  }
  return out;
}

ComplexVector evaluate(const BilinearComposition& m, const ComplexVector& a,
                       const ComplexVector& b) {
  if (a.size() != m.dim_a() || b.size() != m.dim_b()) {
    throw Error(ErrorCode::DimensionMismatch, "arguments do not match composition dims");
  }
  ComplexVector out = ComplexVector::Zero(m.dim_c());
  for (Eigen::Index i = 0; i < m.dim_a(); ++i) {
    for (Eigen::Index j = 0; j < m.dim_b(); ++j) {
      const Complex w = a[i] * b[j];
      if (w == Complex{}) continue;
      for (Eigen::Index k = 0; k < m.dim_c(); ++k) out[k] += m.coeff(k, i, j) * w;
    }
  }
  return out;
}

CompositionOracle::CompositionOracle(Eigen::Index dim_a, Eigen::Index dim_b, Eigen::Index dim_c,
                                     Fn fn, std::string label)
    : dim_a(dim_a), dim_b(dim_b), dim_c(dim_c), fn(std::move(fn)), label(std::move(label)) {
  if (dim_a < 1 || dim_b < 1 || dim_c < 1) {
    throw Error(ErrorCode::DimensionMismatch, "oracle dimensions must be positive");
  }
}

CompositionOracle CompositionOracle::wrap(BilinearComposition m) {
  const auto da = m.dim_a(), db = m.dim_b(), dc = m.dim_c();
  return CompositionOracle(
      da, db, dc,
      [m = std::move(m)](const ComplexVector& a, const ComplexVector& b) { return evaluate(m, a, b); },
      "coefficients");
}

ComplexVector CompositionOracle::operator()(const ComplexVector& a, const ComplexVector& b) const {
  if (a.size() != dim_a || b.size() != dim_b) {
    throw Error(ErrorCode::DimensionMismatch, "arguments do not match oracle dims");
  }
  ComplexVector out = fn(a, b);
  if (out.size() != dim_c) {
    throw Error(ErrorCode::DimensionMismatch, "oracle returned a vector of the wrong dimension");
  }
  return out;
}

}  // namespace wignerlift
