#pragma once

#include <cstdint>

#include "wignerlift/composition.hpp"
#include "wignerlift/projective.hpp"

// Counterexample instances. Each one violates exactly one hypothesis of the
// check it is fed to.
namespace wignerlift::controls {

/// Every ray goes to ray(e_1) of C^dim.
RayMapOracle constant_ray_map(Eigen::Index dim);

/// Induced by U + 0.01 E with E complex Gaussian, columns renormalized.
RayMapOracle perturbed_unitary_map(Eigen::Index dim, std::uint64_t seed, double strength = 1e-2);

/// Canonical tensor with every coefficient T[k][0][j] zeroed.
BilinearComposition zeroed_slice(Eigen::Index dim_a, Eigen::Index dim_b);

/// Canonical tensor with T[0][0][0] = 2.
BilinearComposition doubled_coefficient(Eigen::Index dim_a, Eigen::Index dim_b);

/// Canonical tensor embedded into C^dim_c, dim_c > dim_a * dim_b.
BilinearComposition zero_padded(Eigen::Index dim_a, Eigen::Index dim_b, Eigen::Index dim_c);

/// m(a, b) = |a| (a (x) b).
CompositionOracle non_homogeneous(Eigen::Index dim_a, Eigen::Index dim_b);

/// Canonical tensor plus complex Gaussian noise of scale `noise` on every call.
CompositionOracle noisy_bilinear(Eigen::Index dim_a, Eigen::Index dim_b, std::uint64_t seed,
                                 double noise = 1e-6);

/// Identity on C^1.
RayMapOracle one_dimensional_map();

/// Table on C^3 that is linear on span(e1, e2) and antilinear on span(e1, e3).
RayMapOracle inconsistent_tau_table(std::uint64_t seed);

/// Table on C^2 whose e1 + e2 image is ray(v1 + 2 v2).
RayMapOracle non_unimodular_k_table(std::uint64_t seed);

/// Table on C^dim listing exactly the queries the lift needs, generated from
/// U (optionally composed with conjugation).
RayMapOracle unitary_table(const ComplexMatrix& u, bool conjugate);

}  // namespace wignerlift::controls
