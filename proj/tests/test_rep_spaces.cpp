#include "doctest.h"
#include "skeinrep/recoupling.hpp"
#include "skeinrep/rep_spaces.hpp"

using namespace skeinrep;

namespace {

std::vector<CycloScalar> monomial(int k) {
  std::vector<CycloScalar> p(k + 1, CycloScalar(0));
  p[k] = CycloScalar(1);
  return p;
}

CycloVector unit(Eigen::Index n, Eigen::Index i) {
  CycloVector v = CycloVector::Constant(n, CycloScalar(0));
  v(i) = CycloScalar(1);
  return v;
}

}  // namespace

TEST_SUITE("rep_spaces") {

TEST_CASE("Chebyshev reduction") {
  const Level L5(5);
  const auto one = chebyshev_reduce(monomial(0), L5);
  CHECK(one == unit(4, 0));
  const auto sq = chebyshev_reduce(monomial(2), L5);
  CHECK(sq == unit(4, 0) + unit(4, 2));

  const Level L3(3);
  CHECK(chebyshev_reduce(monomial(2), L3) == unit(2, 0));
  // alpha^4 = phi_4 + 3 phi_2 + 2 phi_0; at r = 5, phi_4 = 0
  CHECK(chebyshev_reduce(monomial(4), L5) == CycloScalar(3) * unit(4, 2) + CycloScalar(2) * unit(4, 0));
}

TEST_CASE("Chebyshev polynomials invert the reduction") {
  const Level L(7);
  for (int a = 0; a <= L.max_color(); ++a) {
    const auto p = chebyshev_polynomial(a, L);
    CHECK(chebyshev_reduce(p, L) == unit(L.num_colors(), a));
  }
}

TEST_CASE("t vectors") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    CHECK(t_vector(0, L) == unit(r - 1, 0));
    const auto t1 = t_vector(1, L);
    for (int a = 0; a <= r - 2; ++a)
      CHECK(t1(a) == CycloScalar::eta(L) * delta(a, L) * xi(a, L).inverse());
  }
}

TEST_CASE("framed Vandermonde matrix") {
  const Level L3(3);
  const RepMatrix m = framed_vandermonde_matrix(L3);
  const CycloScalar i = power_of_A(3, L3);
  RepMatrix expect(2, 2);
  expect << CycloScalar(1), CycloScalar(-1), CycloScalar(1), i;
  CHECK(m == expect);
  CHECK(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == CycloScalar(1) + i);
  for (int r : {3, 5, 7}) CHECK(rank<CycloScalar>(framed_vandermonde_matrix(Level(r))) == r - 1);
}

TEST_CASE("Hopf pairing") {
  const Level L(5);
  const RepMatrix h = hopf_matrix(L);
  CHECK(h == RepMatrix(h.transpose()));
  for (int b = 0; b <= 3; ++b) CHECK(h(0, b) == delta(b, L));
  CHECK(hopf_pairing(unit(4, 1), unit(4, 2), L) == hopf(1, 2, L));
}

TEST_CASE("standard basis dimensions") {
  CHECK(enumerate_basis(1, Level(5)).size() == 4);
  CHECK(enumerate_basis(2, Level(3)).size() == 4);
  CHECK(enumerate_basis(2, Level(5)).size() == 20);
  CHECK(enumerate_basis(3, Level(3)).size() == 8);
  for (int r = 3; r <= 10; ++r)
    for (int g = 1; g <= 3; ++g) {
      CAPTURE(r);
      CAPTURE(g);
      CHECK(static_cast<double>(enumerate_basis(g, Level(r)).size()) ==
            doctest::Approx(verlinde_dimension(g, r)).epsilon(1e-9));
    }
  CHECK(enumerate_basis(2, Level(5)).front() == Labeling{0, 0, 0});
}

TEST_CASE("unsupported genus") {
  CHECK_THROWS_AS(enumerate_basis(0, Level(5)), UnsupportedGenus);
  CHECK_THROWS_AS(standard_spine(4), UnsupportedGenus);
}

TEST_CASE("Gram matrices are diagonal and nonsingular") {
  for (auto [g, r] : {std::pair{1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {3, 3}}) {
    CAPTURE(g);
    CAPTURE(r);
    const Level L(r);
    const RepMatrix G = gram_matrix(g, L);
    CHECK(G.rows() == static_cast<Eigen::Index>(enumerate_basis(g, L).size()));
    CHECK(is_diagonal<CycloScalar>(G));
    for (Eigen::Index i = 0; i < G.rows(); ++i) CHECK_FALSE(G(i, i).is_zero());
  }
}

TEST_CASE("genus-one Gram matrices are scalar") {
  for (int r : {5, 7}) {
    const RepMatrix G = gram_matrix(1, Level(r));
    for (int a = 0; a <= r - 2; ++a) CHECK(G(a, a) == G(0, 0));
  }
}

TEST_CASE("express round trips standard vectors") {
  for (auto [g, r] : {std::pair{1, 5}, {2, 3}}) {
    const Level L(r);
    const auto basis = enumerate_basis(g, L);
    const auto n = static_cast<Eigen::Index>(basis.size());
    for (Eigen::Index v = 0; v < n; ++v) CHECK(express({g, basis[v], {}}, L) == unit(n, v));
  }
}

TEST_CASE("an encircling Omega loop with framing 0 on a cut strand projects to label 0") {
  // Omega around a single strand kills every nonzero color.
  const Level L(5);
  const auto basis = enumerate_basis(1, L);
  const FrameLayout f = frame_layout(1);
  for (std::size_t v = 0; v < basis.size(); ++v) {
    const auto e = express({1, basis[v], encircling_omega(f.ket_cut[0], 1, 0, L)}, L);
    for (Eigen::Index w = 0; w < e.size(); ++w)
      CHECK(e(w).is_zero() == !(v == 0 && w == 0));
  }
}

TEST_CASE("frame layout") {
  const FrameLayout f1 = frame_layout(1);
  CHECK(f1.width == 6);
  const FrameLayout f2 = frame_layout(2);
  CHECK(f2.width == 10);
  CHECK(f2.ket_cut == std::vector<int>{2, 5, 8});
  CHECK(f2.bra_cut == std::vector<int>{3, 6, 9});
  CHECK(f2.surgery_left == std::vector<int>{1, 0});
  const auto colors = middle_colors(2, {1, 1, 0}, {1, 1, 0});
  CHECK(colors.size() == 10);
  CHECK(colors[f2.ket_cut[0]] == 1);
}

TEST_CASE("doubled diagrams are well formed") {
  const Level L(5);
  const auto basis = enumerate_basis(2, L);
  const auto d = doubled_diagram({2, basis[3], {}}, basis[3], L);
  CHECK(validate(d, L).empty());
  CHECK(handlebody_pairing({2, basis[3], {}}, basis[3], L) == gram_matrix(2, L)(3, 3));
}

}  // TEST_SUITE
