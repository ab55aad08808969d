#include "wignerlift/serialize.hpp"

#include <string>
#include <utility>
#include <vector>

namespace wignerlift {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

Eigen::Index positive_dim(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    parse_fail(std::string("\"") + name + "\" must be a positive integer");
  }
  return static_cast<Eigen::Index>(v.get<std::int64_t>());
}

Json encode_scalar(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Complex decode_scalar(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    parse_fail("complex entries are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> decode_data(const Json& j, std::size_t expected) {
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != expected) {
    parse_fail("\"data\" must hold " + std::to_string(expected) + " entries");
  }
  std::vector<Complex> out;
  out.reserve(expected);
  for (const auto& entry : data) out.push_back(decode_scalar(entry));
  return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(encode_scalar(m(r, c)));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Eigen::Index rows = positive_dim(j, "rows");
  const Eigen::Index cols = positive_dim(j, "cols");
  const auto data = decode_data(j, static_cast<std::size_t>(rows * cols));
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r * cols + c)];
  }
  return m;
}

Json vector_to_json(const ComplexVector& v) { return matrix_to_json(v); }

ComplexVector vector_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.empty()) parse_fail("vectors must have at least one entry");
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t k = 0; k < j.size(); ++k) v[static_cast<Eigen::Index>(k)] = decode_scalar(j[k]);
    return v;
  }
  const ComplexMatrix m = matrix_from_json(j);
  if (m.cols() != 1) parse_fail("vectors are encoded with cols = 1");
  return m.col(0);
}

Json composition_to_json(const BilinearComposition& m) {
  Json data = Json::array();
  for (const auto& c : m.coeffs()) data.push_back(encode_scalar(c));
  return Json{{"dim_a", m.dim_a()}, {"dim_b", m.dim_b()}, {"dim_c", m.dim_c()}, {"data", data}};
}

BilinearComposition composition_from_json(const Json& j) {
  const Eigen::Index da = positive_dim(j, "dim_a");
  const Eigen::Index db = positive_dim(j, "dim_b");
  const Eigen::Index dc = positive_dim(j, "dim_c");
  return BilinearComposition(da, db, dc, decode_data(j, static_cast<std::size_t>(da * db * dc)));
}

RayMapOracle ray_table_from_json(const Json& j, const ToleranceConfig& tol) {
  const Eigen::Index domain = positive_dim(j, "domain_dim");
  const Eigen::Index codomain = positive_dim(j, "codomain_dim");
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array() || pairs.empty()) parse_fail("\"pairs\" must be a non-empty array");
  std::vector<std::pair<Ray, Ray>> table;
  for (const auto& entry : pairs) {
    const ComplexVector in = vector_from_json(field(entry, "in"));
    const ComplexVector out = vector_from_json(field(entry, "out"));
    if (in.size() != domain || out.size() != codomain) {
      parse_fail("table entry does not match declared dims");
    }
    table.emplace_back(canonicalize(in, tol), canonicalize(out, tol));
  }
  return RayMapOracle::tabulated(std::move(table), tol);
}

Json ray_table_to_json(const Tabulated& table, Eigen::Index domain_dim, Eigen::Index codomain_dim) {
  Json pairs = Json::array();
  for (const auto& [in, out] : table.pairs) {
    pairs.push_back(Json{{"in", vector_to_json(in.rep())}, {"out", vector_to_json(out.rep())}});
  }
  return Json{{"domain_dim", domain_dim}, {"codomain_dim", codomain_dim}, {"pairs", pairs}};
}

Json lift_to_json(const SemilinearLift& l) {
  return Json{{"matrix", matrix_to_json(l.matrix)},
              {"antilinear", l.antilinear},
              {"residual", l.residual}};
}

SemilinearLift lift_from_json(const Json& j) {
  SemilinearLift l;
  l.matrix = matrix_from_json(field(j, "matrix"));
  const Json& anti = field(j, "antilinear");
  const Json& residual = field(j, "residual");
  if (!anti.is_boolean() || !residual.is_number()) parse_fail("malformed lift");
  l.antilinear = anti.get<bool>();
  l.residual = residual.get<double>();
  return l;
}

Json isomorphism_to_json(const IsomorphismResult& r) {
  return Json{{"iso", matrix_to_json(r.iso)},
              {"unitarity_residual", r.unitarity_residual},
              {"factorization_residual", r.factorization_residual}};
}

Json preservation_to_json(const PreservationReport& r) {
  Json out{{"samples", r.samples}, {"max_abs_deviation", r.max_abs_deviation}, {"pass", r.pass}};
  if (r.worst_pair.first.dim() > 0) {
    out["worst_pair"] = Json::array(
        {vector_to_json(r.worst_pair.first.rep()), vector_to_json(r.worst_pair.second.rep())});
  }
  return out;
}

}  // namespace wignerlift
