#pragma once

// Kauffman bracket evaluation of closed diagrams.
//
// eval_naive expands every colored edge into Jones-Wenzl projectors and every
// crossing into its two smoothings; it is the reference evaluator.
// eval_accel keeps strands colored and tracks a fusion-tree basis, using F-move
// and braiding coefficients that are themselves obtained from eval_naive.

#include <cstdint>
#include <stdexcept>

#include "skeinrep/cyclo.hpp"
#include "skeinrep/diagram.hpp"

namespace skeinrep {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised internally when a rewrite does not apply; callers fall back.
class RewriteStuck : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::int64_t kDefaultTermBudget = 10'000'000;

struct EvalOptions {
  std::int64_t term_budget = kDefaultTermBudget;
  /// eval_accel only: disable the loop rewrites (meridian absorption and
  /// encircling blocks) and run the plain fusion-tree sweep.
  bool rewrites = true;
};

struct EvalStats {
  std::int64_t crossings_resolved = 0;
  std::int64_t loops_removed = 0;
  std::int64_t recoupling_moves = 0;
  std::int64_t peak_terms = 0;
};

struct EvalResult {
  CycloScalar value;
  EvalStats stats;
};

EvalResult eval_naive(const GraphDiagram& d, const Level& L, const EvalOptions& opt = {});
EvalResult eval_accel(const GraphDiagram& d, const Level& L, const EvalOptions& opt = {});

/// Uses the diagram's own level header.
EvalResult eval_naive(const GraphDiagram& d);
EvalResult eval_accel(const GraphDiagram& d);

}  // namespace skeinrep
