#pragma once

// Colored framed link and trivalent graph diagrams in S^3, written as slice
// words acting on a running list of colored strands (left to right).
//
// Text format, one slice per line ('#' starts a comment):
//   R r                   level header
//   FRAMING f1 ... fk     one integer per link component, ordered by first CUP
//   ID                    identity slice
//   CUP i [a]             new adjacent pair at positions i, i+1 (color a, default 1)
//   CAP i                 close positions i, i+1 (colors must agree)
//   X+ i / X- i           swap positions i, i+1; X+ takes strand i over
//   V i a b c             split strand i (color a) into b, c
//   M i b c a             merge strands i, i+1 (colors b, c) into a
//   PROJ i a              Jones-Wenzl projector on strand i of color a
//   OMEGA k               link component k carries the Omega weights

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinrep/cyclo.hpp"

namespace skeinrep {

class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SliceKind { Identity, Cup, Cap, Cross, Split, Merge, Projector };

struct Slice {
  SliceKind kind = SliceKind::Identity;
  int pos = 0;
  int sign = 1;       // Cross
  int a = 0;          // Cup color, Split input, Merge output, Projector color
  int b = 0, c = 0;   // Split outputs, Merge inputs

  static Slice identity() { return {}; }
  static Slice cup(int i, int a) { return {SliceKind::Cup, i, 1, a}; }
  static Slice cap(int i) { return {SliceKind::Cap, i}; }
  static Slice cross(int i, int sign) { return {SliceKind::Cross, i, sign}; }
  static Slice split(int i, int a, int b, int c) { return {SliceKind::Split, i, 1, a, b, c}; }
  static Slice merge(int i, int b, int c, int a) { return {SliceKind::Merge, i, 1, a, b, c}; }
  static Slice projector(int i, int a) { return {SliceKind::Projector, i, 1, a}; }

  friend bool operator==(const Slice&, const Slice&) = default;
};

struct GraphDiagram {
  int r = 0;  // 0 when no header was given
  std::vector<Slice> slices;
  std::vector<int> framings;
  /// Link component -> weight per color; such a component is summed over
  /// colors and the colors written on its cups are ignored.
  std::map<int, std::vector<CycloScalar>> weights;

  GraphDiagram& add(const Slice& s) {
    slices.push_back(s);
    return *this;
  }
  GraphDiagram& cup(int i, int a = 1) { return add(Slice::cup(i, a)); }
  GraphDiagram& cap(int i) { return add(Slice::cap(i)); }
  GraphDiagram& over(int i) { return add(Slice::cross(i, 1)); }
  GraphDiagram& under(int i) { return add(Slice::cross(i, -1)); }
  GraphDiagram& split(int i, int a, int b, int c) { return add(Slice::split(i, a, b, c)); }
  GraphDiagram& merge(int i, int b, int c, int a) { return add(Slice::merge(i, b, c, a)); }
  GraphDiagram& projector(int i, int a) { return add(Slice::projector(i, a)); }
};

enum class DefectKind {
  PositionOutOfRange,
  ColorMismatch,
  ColorOutOfRange,
  InadmissibleVertex,
  NotClosed,
  FramingCountMismatch,
  BadWeight
};

struct Defect {
  DefectKind kind;
  int slice;  // -1 for whole-diagram defects
  std::string message;
};

std::string to_string(DefectKind k);

/// Closed components of the underlying curve system.  Link components are
/// those without vertices, numbered in order of their first cup.
struct ComponentInfo {
  int link_components = 0;
  int graph_components = 0;
  /// Per slice: link component created by that cup, or -1.
  std::vector<int> cup_component;
  /// Per slice: true for the first cup of a link component.
  std::vector<bool> first_cup;
};

/// Requires the strand positions in the word to be in range.
ComponentInfo analyze_components(const GraphDiagram& d);

/// Empty iff the diagram is well typed.  `L` (or the header) bounds colors.
std::vector<Defect> validate(const GraphDiagram& d);
std::vector<Defect> validate(const GraphDiagram& d, const Level& L);

GraphDiagram parse_diagram(std::istream& in);
GraphDiagram parse_diagram_string(const std::string& text);
GraphDiagram read_diagram_file(const std::string& path);
/// Writes the canonical text form; non-Omega weights cannot be written.
std::string format_diagram(const GraphDiagram& d);

/// Mirror image top-to-bottom: reverses the word, swaps cups/caps,
/// splits/merges and crossing signs, and negates framings.
GraphDiagram reflect(const GraphDiagram& d);

/// Disjoint union drawn side by side (a to the left of b).
GraphDiagram side_by_side(const GraphDiagram& a, const GraphDiagram& b);

}  // namespace skeinrep
