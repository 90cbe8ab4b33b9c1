#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "engine_internal.hpp"
#include "skeinrep/engine.hpp"
#include "skeinrep/recoupling.hpp"
#include "skeinrep/temperley_lieb.hpp"

namespace skeinrep {

namespace {

using Matching = std::vector<std::uint8_t>;

struct MatchingHash {
  std::size_t operator()(const Matching& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

using State = std::unordered_map<Matching, CycloScalar, MatchingHash>;

// Planar tangle: bottom points 0..in-1, top points in..in+out-1, left to right.
struct Tangle {
  int in = 0, out = 0;
  std::vector<std::pair<Matching, CycloScalar>> terms;
};

class NaiveEvaluator {
 public:
  NaiveEvaluator(const Level& L, const EvalOptions& opt, EvalStats& stats)
      : L_(L), opt_(opt), stats_(stats), delta_(loop_value(L)) {
    state_.emplace(Matching{}, CycloScalar::one(L));
  }

  void apply(int p, const Tangle& t) {
    State next;
    const int kin = t.in, kout = t.out;
    std::vector<char> vis(kin);
    for (const auto& [m, c] : state_) {
      const int M = static_cast<int>(m.size());
      const int M2 = M - kin + kout;
      auto outside = [&](int q) { return q < p || q >= p + kin; };
      auto map_old = [&](int q) { return q < p ? q : q - kin + kout; };
      for (const auto& [tp, tc] : t.terms) {
        std::fill(vis.begin(), vis.end(), 0);
        Matching res(M2);
        auto through = [&](int j) -> int {
          for (;;) {
            vis[j] = 1;
            const int u = tp[j];
            if (u >= kin) return p + (u - kin);
            vis[u] = 1;
            const int q = m[p + u];
            if (outside(q)) return map_old(q);
            j = q - p;
          }
        };
        for (int q = 0; q < M; ++q) {
          if (!outside(q)) continue;
          const int q2 = m[q];
          res[map_old(q)] = static_cast<std::uint8_t>(outside(q2) ? map_old(q2) : through(q2 - p));
        }
        for (int s = 0; s < kout; ++s) {
          const int u = tp[kin + s];
          int dest;
          if (u >= kin) {
            dest = p + (u - kin);
          } else {
            vis[u] = 1;
            const int q = m[p + u];
            dest = outside(q) ? map_old(q) : through(q - p);
          }
          res[p + s] = static_cast<std::uint8_t>(dest);
        }
        int loops = 0;
        for (int j = 0; j < kin; ++j) {
          if (vis[j]) continue;
          ++loops;
          int cur = j;
          do {
            vis[cur] = 1;
            const int u = tp[cur];
            vis[u] = 1;
            cur = m[p + u] - p;
          } while (!vis[cur]);
        }
        stats_.loops_removed += loops;
        CycloScalar v = c * tc;
        if (loops) v *= delta_pow(loops);
        auto [it, fresh] = next.try_emplace(std::move(res), v);
        if (!fresh) {
          it->second += v;
        }
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second.is_zero())
        it = next.erase(it);
      else
        ++it;
    }
    state_ = std::move(next);
    stats_.peak_terms = std::max<std::int64_t>(stats_.peak_terms, state_.size());
    if (static_cast<std::int64_t>(state_.size()) > opt_.term_budget)
      throw ResourceLimit("naive evaluation exceeded term budget of " +
                          std::to_string(opt_.term_budget));
  }

  CycloScalar result() const {
    auto it = state_.find(Matching{});
    return it == state_.end() ? CycloScalar::zero(L_) : it->second;
  }
  bool is_zero() const { return state_.empty(); }

 private:
  CycloScalar delta_pow(int k) {
    while (static_cast<int>(dpow_.size()) <= k)
      dpow_.push_back(dpow_.empty() ? CycloScalar::one(L_) : dpow_.back() * delta_);
    return dpow_[k];
  }

  Level L_;
  const EvalOptions& opt_;
  EvalStats& stats_;
  CycloScalar delta_;
  std::vector<CycloScalar> dpow_;
  State state_;
};

Tangle projector_tangle(int a, const Level& L) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Tangle> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({L.r(), a});
  if (fresh) {
    const TLElement& f = jones_wenzl(a, L);
    it->second.in = it->second.out = a;
    for (const auto& [d, c] : f.terms()) it->second.terms.emplace_back(d.partner(), c);
  }
  return it->second;
}

Tangle cup_tangle(int a) {
  Tangle t{0, 2 * a, {}};
  Matching m(2 * a);
  for (int s = 0; s < 2 * a; ++s) m[s] = static_cast<std::uint8_t>(2 * a - 1 - s);
  t.terms.emplace_back(std::move(m), CycloScalar(1));
  return t;
}

Tangle cap_tangle(int a) {
  Tangle t{2 * a, 0, {}};
  Matching m(2 * a);
  for (int s = 0; s < 2 * a; ++s) m[s] = static_cast<std::uint8_t>(2 * a - 1 - s);
  t.terms.emplace_back(std::move(m), CycloScalar(1));
  return t;
}

Tangle crossing_tangle(int sign, const Level& L) {
  Tangle t{2, 2, {}};
  const CycloScalar a = CycloScalar::a_power(L, sign);
  const CycloScalar ainv = CycloScalar::a_power(L, -sign);
  t.terms.emplace_back(Matching{2, 3, 0, 1}, a);
  t.terms.emplace_back(Matching{1, 0, 3, 2}, ainv);
  return t;
}

Tangle split_tangle(int a, int b, int c) {
  const int x = (a + b - c) / 2, z = (b + c - a) / 2, y = (a + c - b) / 2;
  Tangle t{a, b + c, {}};
  Matching m(a + b + c);
  auto link = [&](int u, int v) {
    m[u] = static_cast<std::uint8_t>(v);
    m[v] = static_cast<std::uint8_t>(u);
  };
  for (int s = 0; s < x; ++s) link(s, a + s);
  for (int s = 0; s < z; ++s) link(a + b - 1 - s, a + b + s);
  for (int s = 0; s < y; ++s) link(x + s, a + b + z + s);
  t.terms.emplace_back(std::move(m), CycloScalar(1));
  return t;
}

Tangle merge_tangle(int b, int c, int a) {
  const int x = (a + b - c) / 2, z = (b + c - a) / 2, y = (a + c - b) / 2;
  Tangle t{b + c, a, {}};
  Matching m(a + b + c);
  auto link = [&](int u, int v) {
    m[u] = static_cast<std::uint8_t>(v);
    m[v] = static_cast<std::uint8_t>(u);
  };
  for (int s = 0; s < x; ++s) link(s, b + c + s);
  for (int s = 0; s < z; ++s) link(b - 1 - s, b + s);
  for (int s = 0; s < y; ++s) link(b + z + s, b + c + x + s);
  t.terms.emplace_back(std::move(m), CycloScalar(1));
  return t;
}

bool triad_ok(int a, int b, int c) {
  return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
}

// Evaluates a diagram whose weighted components have been given colors.
CycloScalar eval_colored(const GraphDiagram& d, const Level& L, const EvalOptions& opt,
                         EvalStats& stats) {
  for (const auto& s : d.slices)
    if ((s.kind == SliceKind::Split || s.kind == SliceKind::Merge) && !triad_ok(s.a, s.b, s.c))
      return CycloScalar::zero(L);

  NaiveEvaluator ev(L, opt, stats);
  std::vector<int> colors;
  auto offset = [&](int pos) {
    int o = 0;
    for (int k = 0; k < pos; ++k) o += colors[k];
    return o;
  };
  const Tangle cross_pos = crossing_tangle(1, L);
  const Tangle cross_neg = crossing_tangle(-1, L);
  for (const auto& s : d.slices) {
    if (ev.is_zero()) break;
    switch (s.kind) {
      case SliceKind::Identity: break;
      case SliceKind::Cup: {
        const int p = offset(s.pos);
        ev.apply(p, cup_tangle(s.a));
        if (s.a > 1) ev.apply(p, projector_tangle(s.a, L));
        colors.insert(colors.begin() + s.pos, {s.a, s.a});
        break;
      }
      case SliceKind::Cap: {
        const int p = offset(s.pos);
        ev.apply(p, cap_tangle(colors[s.pos]));
        colors.erase(colors.begin() + s.pos, colors.begin() + s.pos + 2);
        break;
      }
      case SliceKind::Cross: {
        const int p = offset(s.pos);
        const int a = colors[s.pos], b = colors[s.pos + 1];
        const Tangle& t = s.sign > 0 ? cross_pos : cross_neg;
        for (int u = a - 1; u >= 0; --u) {
          for (int v = 0; v < b; ++v) {
            ev.apply(p + u + v, t);
            ++stats.crossings_resolved;
          }
        }
        std::swap(colors[s.pos], colors[s.pos + 1]);
        break;
      }
      case SliceKind::Split: {
        const int p = offset(s.pos);
        ev.apply(p, split_tangle(s.a, s.b, s.c));
        if (s.b > 1) ev.apply(p, projector_tangle(s.b, L));
        if (s.c > 1) ev.apply(p + s.b, projector_tangle(s.c, L));
        colors[s.pos] = s.c;
        colors.insert(colors.begin() + s.pos, s.b);
        break;
      }
      case SliceKind::Merge: {
        const int p = offset(s.pos);
        ev.apply(p, merge_tangle(s.b, s.c, s.a));
        if (s.a > 1) ev.apply(p, projector_tangle(s.a, L));
        colors[s.pos] = s.a;
        colors.erase(colors.begin() + s.pos + 1);
        break;
      }
      case SliceKind::Projector:
        if (s.a > 1) ev.apply(offset(s.pos), projector_tangle(s.a, L));
        break;
    }
  }
  return ev.result();
}

}  // namespace

void check_evaluable(const GraphDiagram& d, const Level& L) {
  if (d.r >= 3 && d.r != L.r())
    throw LevelMismatch("diagram header level " + std::to_string(d.r) + " differs from " +
                        std::to_string(L.r()));
  for (const auto& df : validate(d, L)) {
    if (df.kind == DefectKind::InadmissibleVertex) continue;
    throw InvalidDiagram(to_string(df.kind) +
                         (df.slice >= 0 ? " at slice " + std::to_string(df.slice) : "") + ": " +
                         df.message);
  }
}

EvalResult eval_naive(const GraphDiagram& d, const Level& L, const EvalOptions& opt) {
  check_evaluable(d, L);
  const ComponentInfo info = analyze_components(d);
  EvalResult res{CycloScalar::zero(L), {}};

  std::vector<int> weighted;
  for (const auto& [k, w] : d.weights) weighted.push_back(k);
  std::vector<int> link_color(info.link_components, 0);
  for (std::size_t k = 0; k < d.slices.size(); ++k)
    if (info.first_cup[k]) link_color[info.cup_component[k]] = d.slices[k].a;

  std::vector<int> choice(weighted.size(), 0);
  GraphDiagram colored = d;
  colored.weights.clear();
  for (;;) {
    CycloScalar w = CycloScalar::one(L);
    for (std::size_t t = 0; t < weighted.size(); ++t) {
      w *= d.weights.at(weighted[t])[choice[t]];
      link_color[weighted[t]] = choice[t];
    }
    if (!w.is_zero()) {
      for (std::size_t k = 0; k < d.slices.size(); ++k)
        if (info.cup_component[k] >= 0) colored.slices[k].a = link_color[info.cup_component[k]];
      for (int k = 0; k < info.link_components; ++k)
        if (d.framings[k] != 0) w *= xi(link_color[k], L).pow(d.framings[k]);
      res.value += w * eval_colored(colored, L, opt, res.stats);
    }
    std::size_t t = 0;
    while (t < choice.size() && ++choice[t] == L.num_colors()) choice[t++] = 0;
    if (t == choice.size()) break;
  }
  return res;
}

EvalResult eval_naive(const GraphDiagram& d) {
  if (d.r < 3) throw InvalidDiagram("diagram has no level header");
  return eval_naive(d, Level(d.r));
}

}  // namespace skeinrep
