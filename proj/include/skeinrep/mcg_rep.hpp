#pragma once

// Dehn twist action on handlebody skein spaces.  The twist along a curve on
// the boundary acts by adjoining an Omega-colored copy of the curve with
// framing -1; the result is read back in the standard basis.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skeinrep/rep_spaces.hpp"

namespace skeinrep {

class InvalidCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Either a stored curve, by name, or a user diagram acting on the middle
/// state of the doubled picture.  A user curve must be one closed component
/// without vertices or self-crossings; its Omega weights and framing are
/// supplied here.
struct CurveSpec {
  std::string name;
  std::optional<GraphDiagram> diagram;

  static CurveSpec named(std::string n) { return {std::move(n), std::nullopt}; }
  static CurveSpec from_diagram(GraphDiagram d, std::string label = "custom") {
    return {std::move(label), std::move(d)};
  }
};

/// Stored curves for genus g, in generator order.  Genus 1: meridian,
/// longitude.  Genus 2: meridian_a, handle_1, meridian_b, handle_2,
/// meridian_c (a chain; the meridians are the pants curves).  Genus 3 has
/// meridians of the cut edges and one handle curve per surgery circle.
std::vector<std::string> standard_curve_names(int g);

/// Insertion diagram (Omega weighted, framing -1) for the curve.
GraphDiagram curve_insertion(const CurveSpec& c, int g, const Level& L);

/// Exact twist matrix; column v holds the coefficients of the twisted
/// standard vector v.
RepMatrix dehn_twist_matrix(const CurveSpec& c, int g, const Level& L,
                            const EvalOptions& opt = {});

/// diag(xi of the label on `edge`).
RepMatrix pants_twist_matrix(int edge, int g, const Level& L);

/// S[a][b] = eta H(a, b).
RepMatrix s_matrix(const Level& L);
/// T = diag(xi_a).
RepMatrix t_matrix(const Level& L);

/// Projectively normalized twist matrices of the stored curves, g in {1, 2}.
std::vector<RepMatrix> generator_matrices(int g, const Level& L, const EvalOptions& opt = {});

/// Indices into generator_matrices that are pants-curve twists.
std::vector<int> pants_generator_indices(int g);

/// Rank of the span of all words of length <= depth in the generators and
/// their inverses applied to `start`.
Eigen::Index orbit_rank(std::span<const RepMatrix> generators, const CycloVector& start, int depth);

/// orbit_rank of the vacuum vector under generator_matrices(g, L).
Eigen::Index vacuum_orbit_rank(int g, const Level& L, int depth, const EvalOptions& opt = {});

struct EigentupleReport {
  int genus = 1;
  std::vector<Labeling> labelings;
  /// xi over the pants edges, per labeling.
  std::vector<std::vector<CycloScalar>> tuples;
  bool distinct = true;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

/// Pants-twist eigenvalue tuples of every basis labeling.
EigentupleReport pants_eigentuple_check(int g, const Level& L);

}  // namespace skeinrep
