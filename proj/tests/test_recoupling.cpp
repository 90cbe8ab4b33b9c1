#include <algorithm>
#include <array>
#include <cmath>

#include "doctest.h"
#include "skeinrep/engine.hpp"
#include "skeinrep/recoupling.hpp"

using namespace skeinrep;

namespace {

// Closed forms in floating point, independent of the exact code paths:
// [n] = sin(n pi / r) / sin(pi / r) and the quantum-factorial theta formula.
double qint(int n, int r) { return std::sin(n * M_PI / r) / std::sin(M_PI / r); }

double qfact(int n, int r) {
  double p = 1;
  for (int k = 1; k <= n; ++k) p *= qint(k, r);
  return p;
}

double theta_closed_form(int a, int b, int c, int r) {
  const int m = (a + b - c) / 2, n = (b + c - a) / 2, p = (a + c - b) / 2;
  const double sign = (m + n + p) % 2 ? -1 : 1;
  return sign * qfact(m + n + p + 1, r) * qfact(m, r) * qfact(n, r) * qfact(p, r) /
         (qfact(m + n, r) * qfact(n + p, r) * qfact(m + p, r));
}

}  // namespace

TEST_SUITE("recoupling_data") {

TEST_CASE("Delta") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    CHECK(delta(0, L) == CycloScalar(1));
    CHECK(delta(1, L) == -power_of_A(2, L) - power_of_A(-2, L));
    CHECK(delta(r - 1, L).is_zero());
    for (int a = 0; a <= r - 2; ++a) {
      const double expect = (a % 2 ? -1 : 1) * qint(a + 1, r);
      CHECK(delta(a, L).numeric().real() == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  CHECK(delta(3, Level(5)) == CycloScalar(-1));
}

TEST_CASE("xi") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    CHECK(xi(0, L) == CycloScalar(1));
    CHECK(xi(1, L) == -power_of_A(3, L));
  }
  const Level L3(3);
  CHECK(xi(1, L3) == -power_of_A(3, L3));
  CHECK(std::abs(xi(1, L3).numeric() - std::complex<long double>(0, -1)) < 1e-15L);
}

TEST_CASE("admissibility") {
  const Level L(5);
  CHECK(admissible(0, 0, 0, L));
  CHECK_FALSE(admissible(1, 1, 1, L));
  CHECK_FALSE(admissible(3, 3, 2, L));
  CHECK(admissible(2, 2, 2, L));
  CHECK_FALSE(admissible(0, 1, 3, L));
  CHECK_THROWS(Color(4, L));
}

TEST_CASE("theta") {
  const Level L(5);
  for (int a = 0; a <= 3; ++a) CHECK(theta(0, a, a, L) == delta(a, L));
  CHECK(theta(1, 1, 1, L).is_zero());
  // Golden value: the golden ratio 1 + A^4 + A^-4 at r = 5.
  CHECK(theta(1, 1, 2, L) == CycloScalar(1) + power_of_A(4, L) + power_of_A(-4, L));
  for (int r : {5, 7}) {
    const Level Lr(r);
    for (int a = 0; a <= r - 2; ++a)
      for (int b = 0; b <= r - 2; ++b)
        for (int c = 0; c <= r - 2; ++c) {
          if (!admissible(a, b, c, Lr)) continue;
          const auto z = theta(a, b, c, Lr).numeric();
          CHECK(static_cast<double>(z.real()) == doctest::Approx(theta_closed_form(a, b, c, r)).epsilon(1e-10));
          CHECK(std::abs(z.imag()) < 1e-12L);
        }
  }
}

TEST_CASE("tetrahedron") {
  const Level L(5);
  CHECK(tetrahedron(0, 0, 0, 0, 0, 0, L) == CycloScalar(1));
  CHECK(tetrahedron(1, 1, 1, 0, 0, 0, L).is_zero());
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        if (!admissible(a, b, c, L)) continue;
        CHECK(tetrahedron(a, b, c, b, c, 0, L) == theta(a, b, c, L));
      }
}

TEST_CASE("tetrahedral symmetry") {
  const Level L(7);
  // edges indexed by vertex pairs of K4
  const std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  auto edge_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    for (int k = 0; k < 6; ++k)
      if (pairs[k] == std::make_pair(u, v)) return k;
    return -1;
  };
  const std::array<int, 6> labels{2, 2, 2, 2, 2, 2};
  const std::array<int, 6> labels2{1, 1, 2, 2, 1, 1};
  for (const auto& lab : {labels, labels2}) {
    const auto base = tetrahedron(lab[0], lab[1], lab[2], lab[3], lab[4], lab[5], L);
    CHECK_FALSE(base.is_zero());
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      std::array<int, 6> p{};
      for (int k = 0; k < 6; ++k) p[edge_index(perm[pairs[k].first], perm[pairs[k].second])] = lab[k];
      CHECK(tetrahedron(p[0], p[1], p[2], p[3], p[4], p[5], L) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("6j symbols invert each other") {
  const Level L(5);
  const int n = L.max_color();
  int blocks = 0;
  for (int x = 0; x <= 2; ++x)
    for (int c1 = 0; c1 <= 2; ++c1)
      for (int c2 = 0; c2 <= 2; ++c2)
        for (int z = 0; z <= n; ++z) {
          for (int y = 0; y <= n; ++y)
            for (int y2 = 0; y2 <= n; ++y2) {
              if (!admissible(x, c1, y, L) || !admissible(y, c2, z, L)) continue;
              if (!admissible(x, c1, y2, L) || !admissible(y2, c2, z, L)) continue;
              CycloScalar s = CycloScalar::zero(L);
              for (int j = 0; j <= n; ++j) s += sixj(x, c1, c2, z, y, j, L) * sixj_inverse(x, c1, c2, z, j, y2, L);
              CHECK(s == CycloScalar(y == y2 ? 1 : 0));
              ++blocks;
            }
        }
  CHECK(blocks > 0);
  CHECK(sixj(1, 1, 1, 1, 1, 0, L).is_zero());
}

TEST_CASE("braiding of opposite signs cancels") {
  const Level L(7);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int j = 0; j <= 5; ++j) {
        if (!admissible(a, b, j, L)) continue;
        CHECK(braiding(a, b, j, 1, L) * braiding(b, a, j, -1, L) == CycloScalar(1));
      }
}

TEST_CASE("Omega at r = 3") {
  const Level L(3);
  const auto om = omega(L);
  REQUIRE(om.coefficients.size() == 2);
  CHECK(om.coefficients[0] == CycloScalar::eta(L));
  CHECK(om.coefficients[1] == -CycloScalar::eta(L));
}

TEST_CASE("Hopf values") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    for (int a = 0; a <= r - 2; ++a)
      for (int b = 0; b <= r - 2; ++b) {
        CHECK(hopf(a, b, L) == hopf(b, a, L));
        const double expect = ((a + b) % 2 ? -1 : 1) * qint((a + 1) * (b + 1), r);
        CHECK(static_cast<double>(hopf(a, b, L).numeric().real()) == doctest::Approx(expect).epsilon(1e-10));
      }
    for (int b = 0; b <= r - 2; ++b) CHECK(hopf(0, b, L) == delta(b, L));
  }
}

}  // TEST_SUITE
