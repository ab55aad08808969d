#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wignerlift/hilbert.hpp"

namespace wignerlift {

/// A bilinear map m: C^dim_a x C^dim_b -> C^dim_c given by coefficients,
/// m(a, b)_k = sum_{i,j} T[k][i][j] a_i b_j.
///
/// Coefficients are stored flat at k * (dim_a * dim_b) + i * dim_b + j, which
/// is also the on-disk order.
class BilinearComposition {
 public:
  BilinearComposition(Eigen::Index dim_a, Eigen::Index dim_b, Eigen::Index dim_c,
                      std::vector<Complex> coeffs);

  /// T[(i * dim_b + j)][i][j] = 1: the Kronecker product itself.
  static BilinearComposition canonical(Eigen::Index dim_a, Eigen::Index dim_b);
  /// m = U o kron, i.e. T[k][i][j] = U(k, i * dim_b + j).
  static BilinearComposition rotated(Eigen::Index dim_a, Eigen::Index dim_b, const ComplexMatrix& u);

  Eigen::Index dim_a() const noexcept { return dim_a_; }
  Eigen::Index dim_b() const noexcept { return dim_b_; }
  Eigen::Index dim_c() const noexcept { return dim_c_; }
  const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

  Complex& coeff(Eigen::Index k, Eigen::Index i, Eigen::Index j);
  const Complex& coeff(Eigen::Index k, Eigen::Index i, Eigen::Index j) const;

  /// dim_c x (dim_a * dim_b) matrix whose column i * dim_b + j is m(e_i, e_j).
  ComplexMatrix as_matrix() const;

 private:
  std::size_t offset(Eigen::Index k, Eigen::Index i, Eigen::Index j) const;

  Eigen::Index dim_a_;
  Eigen::Index dim_b_;
  Eigen::Index dim_c_;
  std::vector<Complex> coeffs_;
};

/// m(a, b) by direct contraction over (i, j).
ComplexVector evaluate(const BilinearComposition& m, const ComplexVector& a, const ComplexVector& b);

/// A composition map supplied as a black box, so bilinearity is something
/// to test rather than a property of the representation.
struct CompositionOracle {
  using Fn = std::function<ComplexVector(const ComplexVector&, const ComplexVector&)>;

  Eigen::Index dim_a;
  Eigen::Index dim_b;
  Eigen::Index dim_c;
  Fn fn;
  std::string label;

  CompositionOracle(Eigen::Index dim_a, Eigen::Index dim_b, Eigen::Index dim_c, Fn fn,
                    std::string label = {});

  static CompositionOracle wrap(BilinearComposition m);

  ComplexVector operator()(const ComplexVector& a, const ComplexVector& b) const;
};

}  // namespace wignerlift
