#pragma once

// Named recoupling scalars: Delta, xi, Omega, admissibility, theta,
// tetrahedron and 6j coefficients.  Network values come from diagram
// evaluation and are cached per level.

#include <array>
#include <stdexcept>
#include <vector>

#include "skeinrep/cyclo.hpp"

namespace skeinrep {

class ZeroTheta : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A color in 0..r-2; the range is checked at construction.
class Color {
 public:
  Color(int a, const Level& L);
  int value() const { return a_; }
  operator int() const { return a_; }  // NOLINT

 private:
  int a_;
};

struct OmegaElement {
  Level level{3};
  std::vector<CycloScalar> coefficients;  // eta * Delta(a)
};

/// Delta(a) = (-1)^a [a+1]; defined for every a >= 0 (Delta(r-1) = 0).
CycloScalar delta(int a, const Level& L);
/// xi_a = (-1)^a A^{a^2+2a}.
CycloScalar xi(int a, const Level& L);
bool admissible(int a, int b, int c, const Level& L);

/// Theta network with edges a, b, c.  Zero iff inadmissible.
CycloScalar theta(int a, int b, int c, const Level& L);

/// Tetrahedral network.  Labels are edges (e12, e13, e14, e23, e24, e34) of a
/// tetrahedron with vertices 1..4, so vertex triples are (e12,e13,e14),
/// (e12,e23,e24), (e13,e23,e34), (e14,e24,e34).
CycloScalar tetrahedron(int e12, int e13, int e14, int e23, int e24, int e34, const Level& L);

/// F-move coefficient: the fusion channel y between (x, c1) inside a block
/// with outer labels x, c1, c2, z rewritten in the channel j of (c1, c2):
///   [x]-(c1)-[y]-(c2)-[z]  =  sum_j sixj(x, c1, c2, z, y, j) * [x]-(c1 c2 -> j)-[z].
CycloScalar sixj(int x, int c1, int c2, int z, int y, int j, const Level& L);

/// Inverse F-move: channel j of (c1, c2) rewritten in the comb basis y.
CycloScalar sixj_inverse(int x, int c1, int c2, int z, int j, int y, const Level& L);

/// Braiding eigenvalue: a crossing of sign `sign` applied above the vertex
/// splitting j into (a, b) equals this scalar times the vertex splitting j
/// into (b, a).
CycloScalar braiding(int a, int b, int j, int sign, const Level& L);

OmegaElement omega(const Level& L);

/// 0-framed Hopf link colored (a, b).
CycloScalar hopf(int a, int b, const Level& L);

}  // namespace skeinrep
