#include "doctest.h"
#include "skeinrep/recoupling.hpp"
#include "skeinrep/temperley_lieb.hpp"

using namespace skeinrep;

TEST_SUITE("temperley_lieb") {

TEST_CASE("Catalan counts") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) CHECK(enumerate_tl(n).size() == static_cast<std::size_t>(catalan[n]));
}

TEST_CASE("diagram words round trip") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& d : enumerate_tl(n)) CHECK(TLDiagram::from_word(d.word()) == d);
}

TEST_CASE("identity composes to identity") {
  const Level L(5);
  const auto id = TLElement::identity(L, 3);
  CHECK(tl_compose(id, id) == id);
}

TEST_CASE("e1 e1 = delta e1") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    const auto e = TLElement::hook(L, 2, 1);
    CHECK(tl_compose(e, e) == loop_value(L) * e);
  }
  const Level L3(3);
  const auto e = TLElement::hook(L3, 2, 1);
  CHECK(tl_compose(e, e) == CycloScalar(-1) * e);
}

TEST_CASE("Temperley-Lieb relations") {
  const Level L(7);
  const int n = 4;
  for (int i = 1; i < n; ++i) {
    const auto ei = TLElement::hook(L, n, i);
    if (i + 1 < n) {
      const auto ej = TLElement::hook(L, n, i + 1);
      CHECK(tl_compose(ei, tl_compose(ej, ei)) == ei);
      CHECK(tl_compose(ej, tl_compose(ei, ej)) == ej);
    }
    if (i + 2 < n) {
      const auto ek = TLElement::hook(L, n, i + 2);
      CHECK(tl_compose(ei, ek) == tl_compose(ek, ei));
    }
  }
}

TEST_CASE("small Jones-Wenzl projectors") {
  const Level L(5);
  CHECK(jones_wenzl(0, L) == TLElement::identity(L, 0));
  CHECK(jones_wenzl(1, L) == TLElement::identity(L, 1));
  const auto expected = TLElement::identity(L, 2) - loop_value(L).inverse() * TLElement::hook(L, 2, 1);
  CHECK(jones_wenzl(2, L) == expected);
}

TEST_CASE("Jones-Wenzl contract") {
  for (int r : {3, 5, 7}) {
    const Level L(r);
    for (int a = 0; a <= r - 2; ++a) {
      CAPTURE(r);
      CAPTURE(a);
      const auto& f = jones_wenzl(a, L);
      CHECK(tl_compose(f, f) == f);
      for (int i = 1; i < a; ++i) {
        CHECK(tl_compose(TLElement::hook(L, a, i), f).is_zero());
        CHECK(tl_compose(f, TLElement::hook(L, a, i)).is_zero());
      }
      CHECK(f.coefficient(TLDiagram::identity(a)) == CycloScalar(1));
      CHECK(markov_trace(f) == delta(a, L));
    }
  }
}

TEST_CASE("the projector at r - 1 has zero trace") {
  const Level L(5);
  CHECK(markov_trace(jones_wenzl(4, L)).is_zero());
}

TEST_CASE("Markov trace basics") {
  const Level L(5);
  CHECK(markov_trace(TLElement::identity(L, 1)) == loop_value(L));
  CHECK(markov_trace(TLElement(L, 3)).is_zero());
  CHECK(markov_trace(TLElement::hook(L, 2, 1)) == loop_value(L));
}

}  // TEST_SUITE
