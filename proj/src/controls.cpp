#include "wignerlift/controls.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace wignerlift::controls {

namespace {

constexpr Complex kI{0.0, 1.0};

using Entry = std::pair<ComplexVector, ComplexVector>;

RayMapOracle from_entries(const std::vector<Entry>& entries) {
  std::vector<std::pair<Ray, Ray>> table;
  for (const auto& [in, out] : entries) table.emplace_back(canonicalize(in), canonicalize(out));
  return RayMapOracle::tabulated(std::move(table));
}

ComplexVector e(Eigen::Index dim, Eigen::Index i) { return basis_vector(dim, i); }

}  // namespace

RayMapOracle constant_ray_map(Eigen::Index dim) {
  return RayMapOracle::custom(
      dim, dim, [dim](const ComplexVector&) { return basis_vector(dim, 0); }, "constant");
}

RayMapOracle perturbed_unitary_map(Eigen::Index dim, std::uint64_t seed, double strength) {
  Rng rng(seed);
  const ComplexMatrix u = random_unitary(dim, rng);
  ComplexMatrix noise(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) noise.col(c) = random_gaussian_vector(dim, rng);
  ComplexMatrix m = u + strength * noise;
  for (Eigen::Index c = 0; c < dim; ++c) m.col(c).normalize();
  return RayMapOracle::matrix_induced(std::move(m));
}

BilinearComposition zeroed_slice(Eigen::Index dim_a, Eigen::Index dim_b) {
  BilinearComposition m = BilinearComposition::canonical(dim_a, dim_b);
  for (Eigen::Index k = 0; k < m.dim_c(); ++k) {
    for (Eigen::Index j = 0; j < dim_b; ++j) m.coeff(k, 0, j) = 0.0;
  }
  return m;
}

BilinearComposition doubled_coefficient(Eigen::Index dim_a, Eigen::Index dim_b) {
  BilinearComposition m = BilinearComposition::canonical(dim_a, dim_b);
  m.coeff(0, 0, 0) = 2.0;
  return m;
}

BilinearComposition zero_padded(Eigen::Index dim_a, Eigen::Index dim_b, Eigen::Index dim_c) {
  BilinearComposition m(dim_a, dim_b, dim_c,
                        std::vector<Complex>(static_cast<std::size_t>(dim_a * dim_b * dim_c)));
  for (Eigen::Index i = 0; i < dim_a; ++i) {
    for (Eigen::Index j = 0; j < dim_b; ++j) m.coeff(i * dim_b + j, i, j) = 1.0;
  }
  return m;
}

CompositionOracle non_homogeneous(Eigen::Index dim_a, Eigen::Index dim_b) {
  return CompositionOracle(
      dim_a, dim_b, dim_a * dim_b,
      [](const ComplexVector& a, const ComplexVector& b) -> ComplexVector {
        return a.norm() * kron(a, b);
      },
      "norm-scaled product");
}

CompositionOracle noisy_bilinear(Eigen::Index dim_a, Eigen::Index dim_b, std::uint64_t seed,
                                 double noise) {
  auto rng = std::make_shared<Rng>(seed);
  return CompositionOracle(
      dim_a, dim_b, dim_a * dim_b,
      [rng, noise](const ComplexVector& a, const ComplexVector& b) -> ComplexVector {
        ComplexVector out = kron(a, b);
        return out + noise * random_gaussian_vector(out.size(), *rng);
      },
      "noisy product");
}

RayMapOracle one_dimensional_map() {
  return RayMapOracle::matrix_induced(ComplexMatrix::Identity(1, 1));
}

RayMapOracle inconsistent_tau_table(std::uint64_t seed) {
  const ComplexMatrix u = random_unitary(3, seed);
  const auto img = [&](const ComplexVector& x) -> ComplexVector { return u * x; };
  return from_entries({
      {e(3, 0), img(e(3, 0))},
      {e(3, 1), img(e(3, 1))},
      {e(3, 2), img(e(3, 2))},
      {e(3, 0) + e(3, 1), img(e(3, 0) + e(3, 1))},
      {e(3, 0) + e(3, 2), img(e(3, 0) + e(3, 2))},
      {e(3, 0) + kI * e(3, 1), img(e(3, 0) + kI * e(3, 1))},
      {e(3, 0) + kI * e(3, 2), img(e(3, 0) - kI * e(3, 2))},
  });
}

RayMapOracle non_unimodular_k_table(std::uint64_t seed) {
  const ComplexMatrix u = random_unitary(2, seed);
  const auto img = [&](const ComplexVector& x) -> ComplexVector { return u * x; };
  return from_entries({
      {e(2, 0), img(e(2, 0))},
      {e(2, 1), img(e(2, 1))},
      {e(2, 0) + e(2, 1), img(e(2, 0) + 2.0 * e(2, 1))},
      {e(2, 0) + kI * e(2, 1), img(e(2, 0) + kI * e(2, 1))},
  });
}

RayMapOracle unitary_table(const ComplexMatrix& u, bool conjugate) {
  const Eigen::Index n = u.cols();
  const auto img = [&](const ComplexVector& x) -> ComplexVector {
    return conjugate ? ComplexVector(u * x.conjugate()) : ComplexVector(u * x);
  };
  std::vector<Entry> entries;
  for (Eigen::Index i = 0; i < n; ++i) entries.emplace_back(e(n, i), img(e(n, i)));
  for (Eigen::Index i = 1; i < n; ++i) {
    const ComplexVector plus = e(n, 0) + e(n, i);
    const ComplexVector twist = e(n, 0) + kI * e(n, i);
    entries.emplace_back(plus, img(plus));
    entries.emplace_back(twist, img(twist));
  }
  return from_entries(entries);
}

}  // namespace wignerlift::controls
