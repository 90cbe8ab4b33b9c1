#include <random>

#include "doctest.h"
#include "skeinrep/engine.hpp"
#include "skeinrep/random_diagrams.hpp"
#include "skeinrep/recoupling.hpp"

using namespace skeinrep;

namespace {

GraphDiagram unknot(int a, int framing) {
  GraphDiagram d;
  d.cup(0, a).cap(0);
  d.framings = {framing};
  return d;
}

GraphDiagram theta_diagram(int a, int b, int c) {
  GraphDiagram d;
  d.cup(0, a).split(1, a, b, c).merge(0, a, b, c).cap(0);
  return d;
}

GraphDiagram hopf_diagram(int a, int b) {
  GraphDiagram d;
  d.cup(0, a).cup(2, b).over(1).over(1).cap(0).cap(0);
  d.framings = {0, 0};
  return d;
}

bool has_defect(const std::vector<Defect>& ds, DefectKind k) {
  for (const auto& d : ds)
    if (d.kind == k) return true;
  return false;
}

}  // namespace

TEST_SUITE("diagram_engine") {

TEST_CASE("empty diagram") {
  const Level L(5);
  GraphDiagram d;
  CHECK(validate(d).empty());
  CHECK(eval_naive(d, L).value == CycloScalar(1));
  CHECK(eval_accel(d, L).value == CycloScalar(1));
}

TEST_CASE("validation catches typing errors") {
  const Level L(5);
  GraphDiagram mismatch;
  mismatch.cup(0, 1).cup(2, 2).cap(1).cap(0);
  mismatch.framings = {0, 0};
  CHECK(has_defect(validate(mismatch, L), DefectKind::ColorMismatch));

  GraphDiagram odd;
  odd.cup(0, 1).split(1, 1, 1, 1).merge(0, 1, 1, 1).cap(0);
  CHECK(has_defect(validate(odd, L), DefectKind::InadmissibleVertex));

  GraphDiagram open;
  open.cup(0, 1);
  open.framings = {0};
  CHECK(has_defect(validate(open, L), DefectKind::NotClosed));

  GraphDiagram range;
  range.cup(3, 1);
  CHECK(has_defect(validate(range, L), DefectKind::PositionOutOfRange));

  GraphDiagram big = unknot(4, 0);
  CHECK(has_defect(validate(big, L), DefectKind::ColorOutOfRange));

  GraphDiagram frames;
  frames.cup(0, 1).cap(0);
  CHECK(has_defect(validate(frames, L), DefectKind::FramingCountMismatch));

  // inadmissible vertices are reported but evaluate to zero
  CHECK(eval_naive(odd, L).value.is_zero());
  CHECK(eval_accel(odd, L).value.is_zero());
  CHECK_THROWS_AS(eval_accel(mismatch, L), InvalidDiagram);
}

TEST_CASE("text format round trip") {
  const std::string text =
      "R 5\n"
      "FRAMING 1 -2\n"
      "CUP 0 2\n"
      "CUP 2 1\n"
      "X+ 1\n"
      "X- 1\n"
      "CAP 2\n"
      "CAP 0\n"
      "OMEGA 1\n";
  const GraphDiagram d = parse_diagram_string(text);
  CHECK(d.r == 5);
  CHECK(d.framings == std::vector<int>{1, -2});
  CHECK(d.slices.size() == 6);
  CHECK(d.weights.count(1) == 1);
  const GraphDiagram again = parse_diagram_string(format_diagram(d));
  CHECK(again.slices == d.slices);
  CHECK(again.framings == d.framings);
  CHECK(eval_naive(again).value == eval_naive(d).value);
  CHECK_THROWS_AS(parse_diagram_string("CUP x\n"), InvalidDiagram);
  CHECK_THROWS_AS(parse_diagram_string("TWIST 0\n"), InvalidDiagram);
}

TEST_CASE("colored unknots") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    for (int a = 0; a <= r - 2; ++a) {
      CHECK(eval_naive(unknot(a, 0), L).value == delta(a, L));
      CHECK(eval_accel(unknot(a, 0), L).value == delta(a, L));
      CHECK(eval_naive(unknot(a, 1), L).value == xi(a, L) * delta(a, L));
      CHECK(eval_accel(unknot(a, -2), L).value == xi(a, L).pow(-2) * delta(a, L));
    }
  }
  const Level L5(5);
  const auto kink = -power_of_A(3, L5);
  CHECK(eval_naive(unknot(1, 1), L5).value == kink * (-power_of_A(2, L5) - power_of_A(-2, L5)));
}

TEST_CASE("theta networks agree between evaluators") {
  const Level L(5);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c) {
        if (!admissible(a, b, c, L)) continue;
        const auto d = theta_diagram(a, b, c);
        const auto v = eval_naive(d, L).value;
        CHECK(eval_accel(d, L).value == v);
        CHECK(v == theta(a, b, c, L));
      }
}

TEST_CASE("Hopf links agree between evaluators") {
  const Level L(5);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const auto v = eval_naive(hopf_diagram(a, b), L).value;
      CHECK(eval_accel(hopf_diagram(a, b), L).value == v);
      CHECK(v == hopf(a, b, L));
    }
}

TEST_CASE("projector slices are idempotent in a closure") {
  const Level L(5);
  GraphDiagram d = unknot(2, 0);
  GraphDiagram p;
  p.cup(0, 2).projector(0, 2).projector(0, 2).cap(0);
  p.framings = {0};
  CHECK(eval_naive(p, L).value == eval_naive(d, L).value);
  CHECK(eval_accel(p, L).value == delta(2, L));
}

TEST_CASE("mirror image conjugates the value") {
  const Level L(7);
  GraphDiagram d = hopf_diagram(1, 2);
  d.framings = {1, 0};
  const auto v = eval_naive(d, L).value;
  const auto m = eval_naive(reflect(d), L).value;
  CHECK(std::abs(v.numeric() - std::conj(m.numeric())) < 1e-12L);
}

TEST_CASE("disjoint union multiplies") {
  const Level L(5);
  const auto a = unknot(1, 0);
  const auto b = theta_diagram(2, 2, 2);
  CHECK(eval_accel(side_by_side(a, b), L).value == delta(1, L) * theta(2, 2, 2, L));
}

TEST_CASE("term budget") {
  const Level L(7);
  EvalOptions opt;
  opt.term_budget = 3;
  CHECK_THROWS_AS(eval_naive(hopf_diagram(4, 4), L, opt), ResourceLimit);
}

TEST_CASE("randomized corpus: accelerated equals naive") {
  // 240 diagrams over five levels; sizes kept small so the naive side is fast.
  int checked = 0;
  for (int r : {3, 4, 5, 6, 7}) {
    const Level L(r);
    std::mt19937_64 rng(1000 + r);
    RandomDiagramParams p;
    p.max_crossings = 4;
    p.max_color = 2;
    p.max_strands = 4;
    p.omega_probability = 0.15;
    for (int k = 0; k < 48; ++k) {
      const GraphDiagram d = random_closed_diagram(rng, L, p);
      REQUIRE(validate(d, L).empty());
      const auto a = eval_accel(d, L).value;
      const auto b = eval_naive(d, L).value;
      if (a != b) FAIL_CHECK(format_diagram(d));
      ++checked;
    }
  }
  CHECK(checked >= 200);
}

}  // TEST_SUITE
