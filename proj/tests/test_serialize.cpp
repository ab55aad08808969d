#include "doctest.h"
#include "wignerlift/controls.hpp"
#include "wignerlift/serialize.hpp"

using namespace wignerlift;

TEST_CASE("matrix encoding is row-major [re, im] pairs") {
  ComplexMatrix m(2, 2);
  m << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  const Json j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["data"][1] == Json::array({3.0, 4.0}));
  CHECK(j["data"][2] == Json::array({5.0, 6.0}));
}

TEST_CASE("matrices and compositions survive a text round trip bit-for-bit") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix u = random_unitary(3, seed);
    CHECK(matrix_from_json(Json::parse(matrix_to_json(u).dump())) == u);
    const auto m = BilinearComposition::rotated(2, 2, random_unitary(4, seed));
    const auto back = composition_from_json(Json::parse(composition_to_json(m).dump()));
    CHECK(back.coeffs() == m.coeffs());
    CHECK(back.dim_c() == 4);
  }
}

TEST_CASE("composition data order is k * (dim_a * dim_b) + i * dim_b + j") {
  const auto m = BilinearComposition::canonical(2, 3);
  const Json j = composition_to_json(m);
  // T[4][1][1] = 1 sits at 4 * 6 + 1 * 3 + 1.
  CHECK(j["data"][4 * 6 + 1 * 3 + 1] == Json::array({1.0, 0.0}));
  CHECK(j["data"][4 * 6 + 0 * 3 + 1] == Json::array({0.0, 0.0}));
}

TEST_CASE("ray tables canonicalize on load") {
  const Json j = {
      {"domain_dim", 2},
      {"codomain_dim", 2},
      {"pairs",
       Json::array({Json{{"in", vector_to_json(Complex(0, 3) * basis_vector(2, 0))},
                         {"out", vector_to_json(Complex(0, -2) * basis_vector(2, 1))}}})},
  };
  const RayMapOracle map = ray_table_from_json(j);
  const auto& table = std::get<Tabulated>(map.kind());
  CHECK(table.pairs[0].first.rep() == basis_vector(2, 0));
  CHECK(table.pairs[0].second.rep() == basis_vector(2, 1));
}

TEST_CASE("lift encoding round trip") {
  SemilinearLift l{random_unitary(3, 4), true, 1.5e-16, "x"};
  const SemilinearLift back = lift_from_json(Json::parse(lift_to_json(l).dump()));
  CHECK(back.matrix == l.matrix);
  CHECK(back.antilinear);
  CHECK(back.residual == l.residual);
}

TEST_CASE("malformed inputs raise ParseError") {
  const auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidPlan;
  };
  CHECK(code([] { matrix_from_json(Json{{"rows", 2}, {"cols", 1}, {"data", Json::array({Json::array({1, 0})})}}); }) ==
        ErrorCode::ParseError);
  CHECK(code([] { matrix_from_json(Json{{"rows", 0}, {"cols", 1}, {"data", Json::array()}}); }) ==
        ErrorCode::ParseError);
  CHECK(code([] { matrix_from_json(Json{{"rows", 1}, {"cols", 1}, {"data", Json::array({Json::array({1})})}}); }) ==
        ErrorCode::ParseError);
  CHECK(code([] { composition_from_json(Json{{"dim_a", 2}}); }) == ErrorCode::ParseError);
  CHECK(code([] { vector_from_json(matrix_to_json(ComplexMatrix::Identity(2, 2))); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("vectors also read as bare [re, im] arrays") {
  const ComplexVector v = vector_from_json(Json::parse("[[1, 0], [0, -2]]"));
  CHECK(v.size() == 2);
  CHECK(v[1] == Complex(0.0, -2.0));
  CHECK_THROWS_AS(vector_from_json(Json::array()), Error);
  CHECK_THROWS_AS(vector_from_json(Json::parse("[[1, 0], 3]")), Error);
}
