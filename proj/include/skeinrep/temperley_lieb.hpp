#pragma once

// Temperley-Lieb algebras TL_n over CycloScalar and the Jones-Wenzl
// idempotents.  A diagram on n strands is a noncrossing perfect matching of
// 2n boundary points: bottom i is point i, top i is point n + i.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skeinrep/cyclo.hpp"

namespace skeinrep {

class StrandMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DegenerateDenominator : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class TLDiagram {
 public:
  static TLDiagram identity(int n);
  /// Hook generator e_i, 1 <= i <= n-1: caps bottom i-1,i and cups top i-1,i.
  static TLDiagram hook(int n, int i);
  /// Parses the balanced-parenthesis word (boundary read bottom left-to-right,
  /// then top right-to-left).
  static TLDiagram from_word(const std::string& word);
  static TLDiagram from_partner(int n, std::vector<std::uint8_t> partner);

  int strands() const { return n_; }
  const std::vector<std::uint8_t>& partner() const { return partner_; }
  std::string word() const;

  /// Stacks `top` above `bottom`; returns the diagram and the closed loops formed.
  static std::pair<TLDiagram, int> compose(const TLDiagram& top, const TLDiagram& bottom);

  auto operator<=>(const TLDiagram&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> partner_;
};

/// All Catalan(n) diagrams on n strands, ordered by word.
std::vector<TLDiagram> enumerate_tl(int n);

class TLElement {
 public:
  TLElement(const Level& L, int n) : level_(L), n_(n) {}
  static TLElement identity(const Level& L, int n);
  static TLElement hook(const Level& L, int n, int i);
  static TLElement basis(const Level& L, const TLDiagram& d, CycloScalar c);

  int strands() const { return n_; }
  const Level& level() const { return level_; }
  const std::map<TLDiagram, CycloScalar>& terms() const { return terms_; }
  CycloScalar coefficient(const TLDiagram& d) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const TLDiagram& d, const CycloScalar& c);
  TLElement& operator+=(const TLElement& o);
  TLElement& operator-=(const TLElement& o);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const CycloScalar& c, const TLElement& x);
  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Level level_;
  int n_;
  std::map<TLDiagram, CycloScalar> terms_;
};

/// x stacked above y (apply y first); each closed loop contributes delta.
TLElement tl_compose(const TLElement& x, const TLElement& y);

/// f^(a), 0 <= a <= r-1, by the Wenzl recursion; memoised per (a, r).
const TLElement& jones_wenzl(int a, const Level& L);

/// Trace closure in S^3, each loop contributing delta.
CycloScalar markov_trace(const TLElement& x);

}  // namespace skeinrep
