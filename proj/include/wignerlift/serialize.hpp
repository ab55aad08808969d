#pragma once

#include "json.hpp"

#include "wignerlift/composition.hpp"
#include "wignerlift/hilbert.hpp"
#include "wignerlift/lift.hpp"
#include "wignerlift/projective.hpp"
#include "wignerlift/tensor_factor.hpp"

// JSON encodings for the file formats read and written by the CLI.
//
//   matrix       {"rows": n, "cols": m, "data": [[re, im], ...]}  row-major
//   vector       the matrix encoding with cols = 1
//   composition  {"dim_a", "dim_b", "dim_c", "data": [[re, im], ...]}
//                flattened at k * (dim_a * dim_b) + i * dim_b + j
//   ray table    {"domain_dim", "codomain_dim", "pairs": [{"in": v, "out": v}]}
//   lift         {"matrix": matrix, "antilinear": bool, "residual": real}
//   isomorphism  {"iso": matrix, "unitarity_residual", "factorization_residual"}
//
// Doubles are written in shortest round-trip form. Decoding failures throw
// Error(ParseError).

namespace wignerlift {

using Json = nlohmann::json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

/// Column-matrix object on output; a bare array of [re, im] pairs is also read.
Json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

Json composition_to_json(const BilinearComposition& m);
BilinearComposition composition_from_json(const Json& j);

/// Inputs and outputs are canonicalized on load.
RayMapOracle ray_table_from_json(const Json& j, const ToleranceConfig& tol = {});
Json ray_table_to_json(const Tabulated& table, Eigen::Index domain_dim, Eigen::Index codomain_dim);

Json lift_to_json(const SemilinearLift& l);
SemilinearLift lift_from_json(const Json& j);

Json isomorphism_to_json(const IsomorphismResult& r);

Json preservation_to_json(const PreservationReport& r);

}  // namespace wignerlift
