#include "doctest.h"
#include "skeinrep/mcg_rep.hpp"
#include "skeinrep/recoupling.hpp"

using namespace skeinrep;

namespace {

CycloVector vacuum(Eigen::Index n) {
  CycloVector v = CycloVector::Constant(n, CycloScalar(0));
  v(0) = CycloScalar(1);
  return v;
}

}  // namespace

TEST_SUITE("mcg_rep") {

TEST_CASE("stored curve names") {
  CHECK(standard_curve_names(1) == std::vector<std::string>{"meridian", "longitude"});
  CHECK(standard_curve_names(2).size() == 5);
  CHECK(pants_generator_indices(2) == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(dehn_twist_matrix(CurveSpec::named("nope"), 1, Level(3)), InvalidCurve);
}

TEST_CASE("genus one: meridian is T, longitude is S T S^-1") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    const RepMatrix S = s_matrix(L);
    const RepMatrix T = t_matrix(L);
    const RepMatrix mer = dehn_twist_matrix(CurveSpec::named("meridian"), 1, L);
    const RepMatrix lon = dehn_twist_matrix(CurveSpec::named("longitude"), 1, L);
    CHECK(proportional<CycloScalar>(mer, T));
    CHECK(proportional<CycloScalar>(lon, RepMatrix(S * T * inverse<CycloScalar>(S))));
  }
}

TEST_CASE("S and T") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    const RepMatrix S = s_matrix(L);
    const RepMatrix T = t_matrix(L);
    CHECK(S == RepMatrix(S.transpose()));
    const RepMatrix S2 = S * S;
    CHECK(proportional<CycloScalar>(RepMatrix(S2 * S2), identity_matrix<CycloScalar>(S.rows())));
    const RepMatrix ST = S * T;
    CHECK(proportional<CycloScalar>(RepMatrix(ST * ST * ST), S2));
    for (int a = 0; a <= r - 2; ++a) CHECK(T(a, a) == xi(a, L));
  }
}

TEST_CASE("pants twists") {
  const Level L(3);
  for (int g : {1, 2}) {
    const auto idx = pants_generator_indices(g);
    const auto names = standard_curve_names(g);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const RepMatrix p = pants_twist_matrix(static_cast<int>(k), g, L);
      CHECK(p(0, 0) == CycloScalar(1));
      const RepMatrix m = dehn_twist_matrix(CurveSpec::named(names[idx[k]]), g, L);
      CHECK(is_diagonal<CycloScalar>(m));
      CHECK(proportional<CycloScalar>(m, p));
    }
  }
}

TEST_CASE("genus-two generators at r = 3") {
  const auto gens = generator_matrices(2, Level(3));
  REQUIRE(gens.size() == 5);
  for (const auto& m : gens) {
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 4);
  }
  for (int i : pants_generator_indices(2)) CHECK(is_diagonal<CycloScalar>(gens[i]));
  CHECK_FALSE(is_diagonal<CycloScalar>(gens[1]));
  CHECK_FALSE(is_diagonal<CycloScalar>(gens[3]));
}

TEST_CASE("twist matrices are invertible") {
  const Level L(5);
  for (const auto& m : generator_matrices(1, L)) CHECK(rank<CycloScalar>(m) == 4);
}

TEST_CASE("vacuum orbit rank") {
  CHECK(vacuum_orbit_rank(1, Level(3), 3) == 2);
  CHECK(vacuum_orbit_rank(1, Level(5), 4) == 4);
  CHECK(vacuum_orbit_rank(1, Level(5), 0) == 1);
  CHECK(vacuum_orbit_rank(2, Level(3), 6) == 4);
  const auto gens = generator_matrices(1, Level(5));
  const std::vector<RepMatrix> meridian_only{gens[0]};
  CHECK(orbit_rank(meridian_only, vacuum(4), 6) == 1);
}

TEST_CASE("pants eigenvalue tuples") {
  for (auto [g, r] : {std::pair{1, 3}, {1, 5}, {1, 7}, {2, 3}, {2, 5}}) {
    const auto rep = pants_eigentuple_check(g, Level(r));
    CHECK(rep.distinct);
    CHECK(rep.collisions.empty());
    CHECK(rep.tuples.size() == rep.labelings.size());
  }
  // at r = 6, xi_4 = A^24 = xi_0
  const auto six = pants_eigentuple_check(1, Level(6));
  CHECK_FALSE(six.distinct);
}

TEST_CASE("user curves") {
  const Level L(5);
  // the stored meridian, handed back as a bare diagram
  GraphDiagram bare = curve_insertion(CurveSpec::named("meridian"), 1, L);
  bare.framings.clear();
  bare.weights.clear();
  const RepMatrix user = dehn_twist_matrix(CurveSpec::from_diagram(bare), 1, L);
  CHECK(user == dehn_twist_matrix(CurveSpec::named("meridian"), 1, L));

  GraphDiagram two = bare;
  two.cup(0, 1).cap(0);
  CHECK_THROWS_AS(dehn_twist_matrix(CurveSpec::from_diagram(two), 1, L), InvalidCurve);

  GraphDiagram vertex;
  vertex.cup(0, 2).split(1, 2, 1, 1).merge(1, 1, 1, 2).cap(0);
  CHECK_THROWS_AS(dehn_twist_matrix(CurveSpec::from_diagram(vertex), 1, L), InvalidCurve);
}

}  // TEST_SUITE
