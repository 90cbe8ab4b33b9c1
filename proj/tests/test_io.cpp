#include "doctest.h"
#include "skeinrep/io.hpp"
#include "skeinrep/mcg_rep.hpp"
#include "skeinrep/recoupling.hpp"

using namespace skeinrep;

TEST_SUITE("io") {

TEST_CASE("scalar round trip") {
  const Level L(5);
  const std::vector<CycloScalar> xs{
      CycloScalar(0),
      CycloScalar(mpq_class(-7, 3)),
      CycloScalar::eta(L),
      theta(2, 2, 2, L),
      xi(3, L) / CycloScalar(11) + CycloScalar::eta(L) * power_of_A(7, L),
  };
  for (const auto& x : xs) {
    const json j = scalar_to_json(x);
    CHECK(scalar_from_json(j) == x);
    CHECK(scalar_from_json(json::parse(j.dump())) == x);
  }
}

TEST_CASE("scalar layout") {
  const Level L(3);
  const json j = scalar_to_json(power_of_A(1, L));
  CHECK(j["r"] == 3);
  CHECK(j["base"].size() == 4);
  CHECK(j["eta"].size() == 4);
  CHECK(j["base"][1] == json::array({1, 1}));
  CHECK(scalar_to_json(CycloScalar(mpq_class(1, 2)))["r"] == 0);
}

TEST_CASE("big integers are written as strings") {
  mpz_class big("123456789012345678901234567890");
  const CycloScalar x{mpq_class(big, 7)};
  const json j = scalar_to_json(x);
  CHECK(j["base"][0][0].is_string());
  CHECK(scalar_from_json(j) == x);
}

TEST_CASE("malformed scalars are rejected") {
  CHECK_THROWS(scalar_from_json(json::parse(R"({"base": []})")));
  CHECK_THROWS(scalar_from_json(json::parse(R"({"r": 5, "base": [[1, 0]]})")));
  CHECK_THROWS(scalar_from_json(json::parse(R"({"r": 5, "base": [[1]]})")));
  CHECK_THROWS(scalar_from_json(json::parse(R"({"r": 0, "base": [[1, 1], [1, 1]]})")));
}

TEST_CASE("matrix round trip") {
  const Level L(5);
  const RepMatrix s = s_matrix(L);
  CHECK(matrix_from_json(json::parse(matrix_to_json(s).dump())) == s);
  CHECK_THROWS(matrix_from_json(json::parse("[[1], [1, 2]]")));
}

TEST_CASE("numeric renderings") {
  const Level L(3);
  CHECK(format_numeric(CycloScalar(1), 6) == "1");
  CHECK(format_numeric(power_of_A(3, L), 6) == "0+1i");
  CHECK(format_numeric(xi(1, L), 6) == "0-1i");
  const json n = numeric_to_json(CycloScalar::eta(Level(5)), 6);
  CHECK(n[0].get<double>() == doctest::Approx(0.371748));
  CHECK(n[1].get<double>() == 0.0);
}

}  // TEST_SUITE
