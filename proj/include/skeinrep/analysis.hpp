#pragma once

// Commutants of matrix families, irreducibility verdicts and the bounded
// search for genus-one modular invariants.

#include <span>
#include <utility>
#include <vector>

#include "skeinrep/linalg.hpp"
#include "skeinrep/mcg_rep.hpp"

namespace skeinrep {

struct CommutantReport {
  int generators = 0;
  Eigen::Index dimension = 0;
  Eigen::Index commutant_dimension = 0;
  std::vector<RepMatrix> basis;
  /// basis[k] has entry 1 at coordinates[k] and 0 at every other coordinate.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> coordinates;
  bool irreducible = false;
};

/// Exact commutant {X : X M = M X for all M}.  Diagonal members of the family
/// first restrict X to the blocks of equal eigenvalues; the remaining
/// members are imposed as linear equations on those entries.
CommutantReport commutant(std::span<const RepMatrix> mats);

/// Commutant of generator_matrices(g, L).
CommutantReport irreducibility_verdict(int g, const Level& L, const EvalOptions& opt = {});

using IntMatrix = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;

/// Non-negative integer matrices Z with entries <= bound and Z(0,0) = 1 that
/// commute with S and T, found among lattice points of the commutant.
std::vector<IntMatrix> modular_invariants(const Level& L, int bound = 3);

/// Lift of an integer matrix to exact scalars.
RepMatrix to_exact(const IntMatrix& z, const Level& L);

struct CounterexampleReport {
  RepMatrix generator;
  CycloVector start;
  Eigen::Index orbit_rank = 0;
  Eigen::Index commutant_dimension = 0;
  bool irreducible = false;
};

/// diag(1, 2) acting on C^2: the orbit of (1, 1) spans, yet the action is
/// reducible.
CounterexampleReport counterexample_demo(const Level& L);

}  // namespace skeinrep
