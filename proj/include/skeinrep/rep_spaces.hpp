#pragma once

// Reduced skein spaces of the solid torus and of genus-g handlebodies.
//
// Solid torus vectors are coefficient vectors over phi_0..phi_{r-2}.
// Handlebody vectors are coefficient vectors over the admissible labelings
// of a fixed planar spine, in lexicographic order of the edge labels.
//
// Handlebody pairings are computed on a doubled picture: the ket spine v and
// the bra spine w are drawn interleaved (v always over w), and one
// Omega-weighted, 0-framed surgery circle per handle hooks the strands of the
// first k cut edges.  Between the surgery circles the picture sits in a fixed
// "middle state" of colored strands on which extra skein (curves, arcs,
// vertices) can be inserted; see docs/handlebody_frames.md for the layout.

#include <span>
#include <string>
#include <vector>

#include "skeinrep/diagram.hpp"
#include "skeinrep/engine.hpp"
#include "skeinrep/linalg.hpp"

namespace skeinrep {

class UnsupportedGenus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularGram : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMaxGenus = 3;

using RTVector = CycloVector;

// ---------------------------------------------------------------------------
// Solid torus.

/// Rewrites a polynomial in the core alpha (coefficient of alpha^k at index
/// k) in the phi basis, reduced by phi_{r-1} = 0 and
/// phi_{r-1+j} = -phi_{r-1-j}.
RTVector chebyshev_reduce(std::span<const CycloScalar> poly, const Level& L);

/// Coefficients of the Chebyshev polynomial phi_a in alpha.
std::vector<CycloScalar> chebyshev_polynomial(int a, const Level& L);

/// b parallel (-1)-framed Omega copies of the core.
RTVector t_vector(int b, const Level& L);

/// M[b][a] = xi_a^b Delta(a), b, a in 0..r-2.
RepMatrix framed_vandermonde_matrix(const Level& L);

/// Bilinear extension of the 0-framed Hopf link values H(a, b).
CycloScalar hopf_pairing(const RTVector& x, const RTVector& y, const Level& L);

/// H(a, b) for all colors.
RepMatrix hopf_matrix(const Level& L);

// ---------------------------------------------------------------------------
// Handlebodies.

struct SpineVertex {
  std::array<int, 3> edges;
};

/// One slice of the spine opening, in terms of edge indices.
struct SpineStep {
  SliceKind kind;  // Cup or Split
  int pos = 0;
  int edge = 0;               // Cup edge, Split input
  int left = 0, right = 0;    // Split outputs
};

struct Spine {
  int genus = 1;
  std::vector<std::string> edge_names;
  std::vector<SpineVertex> vertices;
  /// Lower half of the spine; ends in the cut, whose strands carry
  /// `cut_edges` from left to right (genus + 1 strands).
  std::vector<SpineStep> opening;
  std::vector<int> cut_edges;
  /// Edge used by the upper half in place of each edge (identity on cut
  /// edges).
  std::vector<int> closing_edge;

  int num_edges() const { return static_cast<int>(edge_names.size()); }
};

/// Genus 1: one loop edge.  Genus 2: theta graph (a, b, c) with a the left
/// arc, b the middle and c the right arc.  Genus 3: ladder with edges
/// (a, b, c, d, e, f), c and f the rungs of the d/e bigon.
const Spine& standard_spine(int g);

using Labeling = std::vector<int>;

std::vector<Labeling> enumerate_basis(int g, const Level& L);
bool admissible_labeling(const Spine& s, const Labeling& lab, const Level& L);
std::string format_labeling(const Spine& s, const Labeling& lab);

/// Positions of named strands in the middle state of the doubled picture.
struct FrameLayout {
  int genus = 1;
  int width = 0;                  // number of strands
  std::vector<int> ket_cut;       // ket strand of cut edge j
  std::vector<int> bra_cut;
  std::vector<int> surgery_left;  // k = 1..genus at index k-1
  std::vector<int> surgery_right;
};

FrameLayout frame_layout(int g);

/// Colors of the middle state.  Surgery strands carry color 0 (their cups
/// are weighted).
std::vector<int> middle_colors(int g, const Labeling& ket, const Labeling& bra);

/// A skein element of the handlebody: a standard labeling with an optional
/// insertion acting on the middle state.  The insertion's framings and
/// weights are indexed by its own link components in order of first cup.
struct HandlebodySkein {
  int genus = 1;
  Labeling base;
  GraphDiagram insertion;
};

/// The closed doubled diagram pairing `ket` against the standard bra.
GraphDiagram doubled_diagram(const HandlebodySkein& ket, const Labeling& bra, const Level& L);

/// Pairing value of the doubled diagram.
CycloScalar handlebody_pairing(const HandlebodySkein& ket, const Labeling& bra, const Level& L,
                               const EvalOptions& opt = {});

/// G[v][w] over enumerate_basis(g, L); cached per (g, r) for the default
/// options.
RepMatrix gram_matrix(int g, const Level& L, const EvalOptions& opt = {});

/// Coefficients of a handlebody skein element in the standard basis.
CycloVector express(const HandlebodySkein& d, const Level& L, const EvalOptions& opt = {});

/// Insertion: an Omega-weighted loop encircling middle strands
/// [first, first + width) with the given framing.
GraphDiagram encircling_omega(int first, int width, int framing, const Level& L);

/// Number of admissible labelings predicted by the Verlinde formula,
/// evaluated in floating point.
double verlinde_dimension(int g, int r);

}  // namespace skeinrep
