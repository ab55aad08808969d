#pragma once

// Reference computations written directly from the definitions, sharing no
// code path with the library routines they check.

#include <cmath>
#include <complex>
#include <vector>

#include "wignerlift/composition.hpp"
#include "wignerlift/hilbert.hpp"

namespace oracle {

using wignerlift::Complex;
using wignerlift::ComplexMatrix;
using wignerlift::ComplexVector;

inline Complex bracket(const ComplexVector& v, const ComplexVector& w) {
  Complex s = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) s += std::conj(v[k]) * w[k];
  return s;
}

inline double probability(const ComplexVector& v, const ComplexVector& w) {
  return std::norm(bracket(v, w)) / (bracket(v, v).real() * bracket(w, w).real());
}

// m(a, b)_k = sum_{i,j} T[k][i][j] a_i b_j, read straight off the flat layout.
inline ComplexVector triple_loop(const wignerlift::BilinearComposition& m, const ComplexVector& a,
                                 const ComplexVector& b) {
  const auto& t = m.coeffs();
  ComplexVector out = ComplexVector::Zero(m.dim_c());
  for (Eigen::Index k = 0; k < m.dim_c(); ++k) {
    for (Eigen::Index i = 0; i < m.dim_a(); ++i) {
      for (Eigen::Index j = 0; j < m.dim_b(); ++j) {
        out[k] += t[static_cast<std::size_t>(k * m.dim_a() * m.dim_b() + i * m.dim_b() + j)] *
                  a[i] * b[j];
      }
    }
  }
  return out;
}

// Product-state vector built with Eigen's own Kronecker layout via a matrix
// outer product, flattened row-major.
inline ComplexVector product_state(const ComplexVector& a, const ComplexVector& b) {
  const ComplexMatrix outer = a * b.transpose();
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    for (Eigen::Index j = 0; j < b.size(); ++j) out[i * b.size() + j] = outer(i, j);
  }
  return out;
}

// Entry-wise comparison after removing a global phase fixed by the first
// entry of `reference` with modulus above 1e-6.
inline double aligned_gap(const ComplexMatrix& candidate, const ComplexMatrix& reference) {
  for (Eigen::Index c = 0; c < reference.cols(); ++c) {
    for (Eigen::Index r = 0; r < reference.rows(); ++r) {
      if (std::abs(reference(r, c)) > 1e-6) {
        const Complex phase = reference(r, c) / candidate(r, c);
        return (phase / std::abs(phase) * candidate - reference).cwiseAbs().maxCoeff();
      }
    }
  }
  return INFINITY;
}

}  // namespace oracle
