#include <random>

#include "doctest.h"
#include "skeinrep/cyclo.hpp"

using namespace skeinrep;

namespace {

CycloScalar random_scalar(std::mt19937_64& rng, const Level& L, bool with_eta) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  const auto base_len = CycloScalar::one(L).base_coefficients().size();
  std::vector<mpq_class> base(base_len), eta(base_len);
  for (auto& q : base) q = mpq_class(coeff(rng), den(rng));
  if (with_eta)
    for (auto& q : eta) q = mpq_class(coeff(rng), den(rng));
  for (auto& q : base) q.canonicalize();
  for (auto& q : eta) q.canonicalize();
  return CycloScalar::from_parts(L, base, eta);
}

bool near(std::complex<long double> z, long double re, long double im, long double tol = 1e-12L) {
  return std::abs(z.real() - re) < tol && std::abs(z.imag() - im) < tol;
}

}  // namespace

TEST_SUITE("exact_scalars") {

TEST_CASE("A times its inverse is one") {
  for (int r : {3, 4, 5, 6, 7, 10}) {
    const Level L(r);
    CHECK(power_of_A(1, L) * power_of_A(-1, L) == CycloScalar(1));
    CHECK(field_arith(power_of_A(1, L), power_of_A(1, L), FieldOp::Div) == CycloScalar(1));
  }
}

TEST_CASE("A^2 + A^-2 is one at r = 3") {
  const Level L(3);
  CHECK(power_of_A(2, L) + power_of_A(-2, L) == CycloScalar(1));
}

TEST_CASE("powers of A reduce modulo 4r") {
  for (int r : {3, 5, 8}) {
    const Level L(r);
    CHECK(power_of_A(0, L) == CycloScalar(1));
    CHECK(power_of_A(4 * r, L) == CycloScalar(1));
    CHECK(power_of_A(4 * r + 3, L) == power_of_A(3, L));
    CHECK(power_of_A(-1, L) == power_of_A(4 * r - 1, L));
  }
  const Level L3(3);
  CHECK(near(power_of_A(3, L3).numeric(), 0, 1));
  CHECK(power_of_A(3, L3) * power_of_A(3, L3) == CycloScalar(-1));
}

TEST_CASE("numeric embedding") {
  CHECK(near(embed_numeric(CycloScalar(1), 12), 1, 0));
  const Level L5(5);
  CHECK(near(embed_numeric(CycloScalar::eta(L5), 15), 0.371748034460184L, 0, 1e-14L));
  const Level L3(3);
  CHECK(near(embed_numeric(loop_value(L3), 12), -1, 0));
  CHECK(embed_numeric(CycloScalar(1) / CycloScalar(3), 4).real() == doctest::Approx(0.3333));
}

TEST_CASE("eta squared is -(A^2 - A^-2)^2 / 2r") {
  for (int r : {3, 4, 5, 6, 7, 9}) {
    const Level L(r);
    const CycloScalar d = power_of_A(2, L) - power_of_A(-2, L);
    const CycloScalar eta = CycloScalar::eta(L);
    CHECK(eta * eta == -(d * d) / CycloScalar(2 * r));
    CHECK_FALSE(eta.is_rational());
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int r : {3, 5, 7}) {
    const Level L(r);
    for (int k = 0; k < 20; ++k) {
      const auto x = random_scalar(rng, L, true);
      const auto y = random_scalar(rng, L, true);
      const auto z = random_scalar(rng, L, k % 2 == 0);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK(x - x == CycloScalar::zero(L));
      if (!x.is_zero()) CHECK(x * x.inverse() == CycloScalar(1));
      const auto xn = x.numeric() * y.numeric();
      const auto pn = (x * y).numeric();
      CHECK(std::abs(xn - pn) < 1e-9L);
    }
  }
}

TEST_CASE("integer powers") {
  const Level L(7);
  const auto a = power_of_A(1, L);
  CHECK(a.pow(5) == power_of_A(5, L));
  CHECK(a.pow(-3) == power_of_A(-3, L));
  CHECK(a.pow(0) == CycloScalar(1));
}

TEST_CASE("rational constants mix with every level") {
  const Level L(5);
  const CycloScalar half = mpq_class(1, 2);
  CHECK(half.level() == 0);
  CHECK((half + CycloScalar::one(L)).level() == 5);
  CHECK((half * CycloScalar(2)).rational_value() == 1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Level(2), std::invalid_argument);
  CHECK_THROWS_AS(CycloScalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(field_arith(CycloScalar(1), CycloScalar::zero(Level(5)), FieldOp::Div), DivisionByZero);
  CHECK_THROWS_AS(power_of_A(1, Level(5)) + power_of_A(1, Level(7)), LevelMismatch);
}

}  // TEST_SUITE
