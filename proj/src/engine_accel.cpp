#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>

#include "engine_internal.hpp"
#include "skeinrep/engine.hpp"
#include "skeinrep/recoupling.hpp"

namespace skeinrep {

namespace {

// ---------------------------------------------------------------------------
// Rewriting of loops that encircle a block of strands.

struct WSlice {
  Slice s;
  int comp = -1;  // link component of a cup; -1 otherwise
  bool encircle = false;
  int width = 0;
  std::vector<CycloScalar> factor;  // per channel color, for encircle
};

struct Strand {
  int comp;   // link component or -1 for graph edges
  int color;  // -1 for weighted strands
};

struct Rewriter {
  Level L;
  std::vector<WSlice> word;
  std::map<int, std::vector<CycloScalar>> weights;  // framing already folded in
  std::map<int, int> link_color;                    // unweighted link components
  CycloScalar global;
  std::int64_t moves = 0;

  static bool touches(const WSlice& w, int L, int R) {
    const Slice& s = w.s;
    auto hit = [&](int q) { return q == L || q == R; };
    if (w.encircle) return (L >= s.pos && L < s.pos + w.width) || (R >= s.pos && R < s.pos + w.width);
    switch (s.kind) {
      case SliceKind::Cup:
      case SliceKind::Identity: return false;
      case SliceKind::Split:
      case SliceKind::Projector: return hit(s.pos);
      default: return hit(s.pos) || hit(s.pos + 1);
    }
  }

  static void shift(const WSlice& w, int& q) {
    const Slice& s = w.s;
    if (w.encircle) return;
    switch (s.kind) {
      case SliceKind::Cup:
        if (s.pos <= q) q += 2;
        break;
      case SliceKind::Cap:
        if (s.pos + 1 < q) q -= 2;
        break;
      case SliceKind::Split:
        if (s.pos < q) q += 1;
        break;
      case SliceKind::Merge:
        if (s.pos + 1 < q) q -= 1;
        break;
      default: break;
    }
  }

  std::vector<Strand> strands_before(std::size_t upto) const {
    std::vector<Strand> st;
    for (std::size_t k = 0; k < upto; ++k) {
      const WSlice& w = word[k];
      const Slice& s = w.s;
      if (w.encircle) continue;
      switch (s.kind) {
        case SliceKind::Cup: {
          const int col = weights.count(w.comp) ? -1 : s.a;
          st.insert(st.begin() + s.pos, {Strand{w.comp, col}, Strand{w.comp, col}});
          break;
        }
        case SliceKind::Cap: st.erase(st.begin() + s.pos, st.begin() + s.pos + 2); break;
        case SliceKind::Cross: std::swap(st[s.pos], st[s.pos + 1]); break;
        case SliceKind::Split:
          st[s.pos] = {-1, s.c};
          st.insert(st.begin() + s.pos, Strand{-1, s.b});
          break;
        case SliceKind::Merge:
          st[s.pos] = {-1, s.a};
          st.erase(st.begin() + s.pos + 1);
          break;
        default: break;
      }
    }
    return st;
  }

  std::vector<CycloScalar> encircle_factor(const std::vector<CycloScalar>& w) const {
    std::vector<CycloScalar> e;
    for (int J = 0; J <= L.max_color(); ++J) {
      CycloScalar v = CycloScalar::zero(L);
      for (int c = 0; c <= L.max_color(); ++c)
        if (!w[c].is_zero()) v += w[c] * hopf(c, J, L);
      e.push_back(v / delta(J, L));
    }
    return e;
  }

  std::vector<CycloScalar> loop_weights(int comp, int color) const {
    if (auto it = weights.find(comp); it != weights.end()) return it->second;
    std::vector<CycloScalar> w(L.num_colors(), CycloScalar::zero(L));
    w[color] = CycloScalar::one(L);
    return w;
  }

  // Attempts to remove the loop born at word[k0].  Returns true on success.
  bool try_rectangle(std::size_t k0) {
    const WSlice& cw = word[k0];
    if (cw.encircle || cw.s.kind != SliceKind::Cup || cw.comp < 0) return false;
    const int comp = cw.comp;
    const std::size_t n = word.size();
    int L0 = cw.s.pos, R = L0 + 1;
    std::size_t k = k0 + 1;
    int sigma = 0, out_width = 0;
    auto is_cross = [&](std::size_t q, int pos) {
      return q < n && !word[q].encircle && word[q].s.kind == SliceKind::Cross &&
             word[q].s.pos == pos && (sigma == 0 || word[q].s.sign == sigma);
    };
    const std::size_t out_begin = k;
    while (is_cross(k, R)) {
      sigma = word[k].s.sign;
      ++R, ++out_width, ++k;
    }
    const std::size_t out_end = k;
    int Lc = L0;
    std::vector<std::pair<int, int>> lr(n, {-1, -1});  // L, R before each idle slice
    while (k < n && !touches(word[k], Lc, R)) {
      lr[k] = {Lc, R};
      shift(word[k], Lc);
      shift(word[k], R);
      ++k;
    }
    const std::size_t back_begin = k;
    const int back_L = Lc;
    int back_width = 0;
    while (is_cross(k, R - 1) && R - 1 > Lc) {
      sigma = word[k].s.sign;
      --R, ++back_width, ++k;
    }
    if (R != Lc + 1 || k >= n || word[k].encircle || word[k].s.kind != SliceKind::Cap ||
        word[k].s.pos != Lc)
      return false;
    const std::size_t cap_at = k;

    const std::vector<CycloScalar> e = encircle_factor(loop_weights(comp, cw.s.a));
    // Placement: the over-passing run slides onto the under-passing one.
    const bool at_back = sigma >= 0;
    const int width = at_back ? back_width : out_width;
    const int block_pos = at_back ? back_L : L0;
    const std::size_t place = at_back ? back_begin : out_begin;  // in the old word
    std::optional<WSlice> enc;
    if (width == 0) {
      global *= e[0];
    } else if (width == 1) {
      const auto st = strands_before(place);
      // strands_before still contains the loop legs.
      const Strand b = st[at_back ? back_L + 1 : L0 + 2];
      if (b.color < 0) {
        auto& w = weights.at(b.comp);
        for (int J = 0; J <= L.max_color(); ++J) w[J] *= e[J];
      } else {
        global *= e[b.color];
      }
    } else {
      WSlice w;
      w.encircle = true;
      w.s.pos = block_pos;
      w.width = width;
      w.factor = e;
      enc = std::move(w);
    }

    std::vector<WSlice> out;
    out.reserve(n);
    for (std::size_t q = 0; q < k0; ++q) out.push_back(word[q]);
    if (enc && !at_back) out.push_back(*enc);
    for (std::size_t q = out_end; q < back_begin; ++q) {
      WSlice w = word[q];
      const auto [lq, rq] = lr[q];
      w.s.pos = w.s.pos - (w.s.pos > lq ? 1 : 0) - (w.s.pos > rq ? 1 : 0);
      out.push_back(std::move(w));
    }
    if (enc && at_back) out.push_back(*enc);
    for (std::size_t q = cap_at + 1; q < n; ++q) out.push_back(word[q]);
    word = std::move(out);
    weights.erase(comp);
    link_color.erase(comp);
    ++moves;
    return true;
  }

  void run() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < word.size(); ++k) {
        if (try_rectangle(k)) {
          changed = true;
          break;
        }
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Fusion-tree sweep.

enum class Op { Cup, Cap, Cross, Split, Merge, Encircle };

struct AOp {
  Op op;
  int pos = 0;
  int sign = 1;
  int a = 0, b = 0, c = 0;
  int slot = -1;         // Cup/Cap of a weighted component
  bool branch = false;   // first cup of a weighted component
  bool release = false;  // last cap of a weighted component
  int width = 0;
  std::vector<CycloScalar> factor;  // Encircle factor, or branch weights
};

using Key = std::vector<std::int8_t>;  // [colors | labels | slots]

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : k) h = (h ^ static_cast<std::uint8_t>(v)) * 1099511628211ull;
    return h;
  }
};

using AState = std::unordered_map<Key, CycloScalar, KeyHash>;

class Sweep {
 public:
  Sweep(const Level& L, const EvalOptions& opt, EvalStats& stats, int slots)
      : L_(L), opt_(opt), stats_(stats), slots_(slots) {
    Key k(1 + slots, -1);
    k[0] = 0;  // no strands; labels {0}
    state_.emplace(std::move(k), CycloScalar::one(L));
  }

  void apply(const AOp& op) {
    AState next;
    for (const auto& [key, coeff] : state_) step(op, key, coeff, next);
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    state_ = std::move(next);
    if (op.op == Op::Cup) n_ += 2;
    if (op.op == Op::Cap) n_ -= 2;
    if (op.op == Op::Split) n_ += 1;
    if (op.op == Op::Merge) n_ -= 1;
    stats_.peak_terms = std::max<std::int64_t>(stats_.peak_terms, state_.size());
    if (static_cast<std::int64_t>(state_.size()) > opt_.term_budget)
      throw ResourceLimit("accelerated evaluation exceeded term budget of " +
                          std::to_string(opt_.term_budget));
  }

  CycloScalar result() const {
    CycloScalar v = CycloScalar::zero(L_);
    for (const auto& [k, c] : state_) v += c;
    return v;
  }

 private:
  int color(const Key& k, int i) const { return k[i]; }
  int label(const Key& k, int t) const { return k[n_ + t]; }
  int slot(const Key& k, int s) const { return k[2 * n_ + 1 + s]; }

  // Builds a key for a new strand count from pieces.
  Key make(const std::vector<int>& colors, const std::vector<int>& labels, const Key& old) const {
    Key k;
    k.reserve(colors.size() + labels.size() + slots_);
    for (int c : colors) k.push_back(static_cast<std::int8_t>(c));
    for (int x : labels) k.push_back(static_cast<std::int8_t>(x));
    for (int s = 0; s < slots_; ++s) k.push_back(old[2 * n_ + 1 + s]);
    return k;
  }

  void unpack(const Key& k, std::vector<int>& colors, std::vector<int>& labels) const {
    colors.assign(k.begin(), k.begin() + n_);
    labels.assign(k.begin() + n_, k.begin() + 2 * n_ + 1);
  }

  const CycloScalar& F(int x, int c1, int c2, int z, int y, int j) {
    return coeff(fcache_, x, c1, c2, z, y, j, false);
  }
  const CycloScalar& G(int x, int c1, int c2, int z, int j, int y) {
    return coeff(gcache_, x, c1, c2, z, j, y, true);
  }

  const CycloScalar& coeff(std::unordered_map<std::uint64_t, CycloScalar>& cache, int x, int c1,
                           int c2, int z, int p, int q, bool inverse) {
    const std::uint64_t key = (std::uint64_t(x) << 40) | (std::uint64_t(c1) << 32) |
                              (std::uint64_t(c2) << 24) | (std::uint64_t(z) << 16) |
                              (std::uint64_t(p) << 8) | std::uint64_t(q);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CycloScalar v = inverse ? sixj_inverse(x, c1, c2, z, p, q, L_) : sixj(x, c1, c2, z, p, q, L_);
    return cache.emplace(key, std::move(v)).first->second;
  }

  template <class Fn>
  void channels(int x, int c1, int c2, int z, int y, Fn&& fn) {
    for (int j = std::abs(c1 - c2); j <= std::min(c1 + c2, L_.max_color()); j += 2) {
      if (!admissible(x, j, z, L_)) continue;
      const CycloScalar& f = F(x, c1, c2, z, y, j);
      if (!f.is_zero()) fn(j, f);
    }
    ++stats_.recoupling_moves;
  }

  template <class Fn>
  void combs(int x, int c1, int c2, int z, int j, Fn&& fn) {
    for (int y = std::abs(x - c1); y <= std::min(x + c1, L_.max_color()); y += 2) {
      if (!admissible(y, c2, z, L_)) continue;
      const CycloScalar& g = G(x, c1, c2, z, j, y);
      if (!g.is_zero()) fn(y, g);
    }
    ++stats_.recoupling_moves;
  }

  void add(AState& next, Key k, const CycloScalar& v) {
    auto [it, fresh] = next.try_emplace(std::move(k), v);
    if (!fresh) it->second += v;
  }

  void step(const AOp& op, const Key& key, const CycloScalar& coeff, AState& next) {
    std::vector<int> col, lab;
    unpack(key, col, lab);
    const int i = op.pos;
    switch (op.op) {
      case Op::Cup: {
        if (op.branch) {
          for (int c = 0; c <= L_.max_color(); ++c) {
            if (op.factor[c].is_zero()) continue;
            Key k2 = key;
            k2[2 * n_ + 1 + op.slot] = static_cast<std::int8_t>(c);
            cup(op, k2, c, coeff * op.factor[c], next);
          }
        } else {
          cup(op, key, op.slot >= 0 ? slot(key, op.slot) : op.a, coeff, next);
        }
        break;
      }
      case Op::Cap: {
        const int c = col[i];
        const int x = lab[i], y = lab[i + 1], z = lab[i + 2];
        if (x != z) break;
        const CycloScalar& f = F(x, c, c, z, y, 0);
        ++stats_.recoupling_moves;
        if (f.is_zero()) break;
        col.erase(col.begin() + i, col.begin() + i + 2);
        lab.erase(lab.begin() + i + 1, lab.begin() + i + 3);
        Key k2 = make(col, lab, key);
        if (op.release) k2[col.size() + lab.size() + op.slot] = -1;
        ++stats_.loops_removed;
        add(next, std::move(k2), coeff * f * delta(c, L_));
        break;
      }
      case Op::Cross: {
        const int c1 = col[i], c2 = col[i + 1];
        const int x = lab[i], y = lab[i + 1], z = lab[i + 2];
        std::swap(col[i], col[i + 1]);
        ++stats_.crossings_resolved;
        channels(x, c1, c2, z, y, [&](int j, const CycloScalar& f) {
          const CycloScalar lam = coeff * f * braiding(c1, c2, j, op.sign, L_);
          combs(x, c2, c1, z, j, [&](int y2, const CycloScalar& g) {
            lab[i + 1] = y2;
            add(next, make(col, lab, key), lam * g);
          });
        });
        break;
      }
      case Op::Split: {
        const int x = lab[i], z = lab[i + 1];
        col[i] = op.c;
        col.insert(col.begin() + i, op.b);
        lab.insert(lab.begin() + i + 1, 0);
        combs(x, op.b, op.c, z, op.a, [&](int y, const CycloScalar& g) {
          lab[i + 1] = y;
          add(next, make(col, lab, key), coeff * g);
        });
        break;
      }
      case Op::Merge: {
        const int x = lab[i], y = lab[i + 1], z = lab[i + 2];
        if (!admissible(x, op.a, z, L_)) break;
        const CycloScalar& f = F(x, op.b, op.c, z, y, op.a);
        ++stats_.recoupling_moves;
        if (f.is_zero()) break;
        col[i] = op.a;
        col.erase(col.begin() + i + 1);
        lab.erase(lab.begin() + i + 1);
        add(next, make(col, lab, key),
            coeff * f * theta(op.b, op.c, op.a, L_) / delta(op.a, L_));
        break;
      }
      case Op::Encircle: encircle(op, key, col, lab, coeff, next); break;
    }
  }

  void cup(const AOp& op, const Key& key, int c, const CycloScalar& coeff, AState& next) {
    std::vector<int> col, lab;
    unpack(key, col, lab);
    const int i = op.pos;
    const int x = lab[i];
    col.insert(col.begin() + i, {c, c});
    lab.insert(lab.begin() + i + 1, {0, x});
    combs(x, c, c, x, 0, [&](int y, const CycloScalar& g) {
      lab[i + 1] = y;
      Key k2;
      k2.reserve(col.size() + lab.size() + slots_);
      for (int v : col) k2.push_back(static_cast<std::int8_t>(v));
      for (int v : lab) k2.push_back(static_cast<std::int8_t>(v));
      for (int s = 0; s < slots_; ++s) k2.push_back(key[2 * n_ + 1 + s]);
      add(next, std::move(k2), coeff * g);
    });
  }

  void encircle(const AOp& op, const Key& key, std::vector<int>& col, std::vector<int>& lab,
                const CycloScalar& coeff, AState& next) {
    const int p = op.pos, w = op.width;
    const int x = lab[p];
    // Fuse strands p..p+w-1 into a single channel, keeping the intermediate
    // channels js[0..w-1]; js[0] is the first strand's color.
    struct Path {
      std::vector<int> js;
      CycloScalar c;
    };
    std::vector<Path> paths{{{col[p]}, coeff}};
    for (int m = 1; m < w; ++m) {
      std::vector<Path> nxt;
      for (const auto& path : paths) {
        channels(x, path.js.back(), col[p + m], lab[p + m + 1], lab[p + m],
                 [&](int j, const CycloScalar& f) {
                   Path q = path;
                   q.js.push_back(j);
                   q.c *= f;
                   nxt.push_back(std::move(q));
                 });
      }
      paths = std::move(nxt);
    }
    for (auto& path : paths) {
      const CycloScalar& e = op.factor[path.js.back()];
      if (e.is_zero()) continue;
      path.c *= e;
      // Unfuse from the outermost channel inwards.
      struct Partial {
        std::vector<int> ys;  // new labels x_{p+m}, filled from the right
        int top;              // current outer label
        CycloScalar c;
      };
      std::vector<Partial> parts{{std::vector<int>(w + 1, 0), lab[p + w], path.c}};
      parts[0].ys[w] = lab[p + w];
      parts[0].ys[0] = x;
      for (int m = w - 1; m >= 1; --m) {
        std::vector<Partial> nxt;
        for (const auto& pt : parts) {
          combs(x, path.js[m - 1], col[p + m], pt.top, path.js[m],
                [&](int y, const CycloScalar& g) {
                  Partial q = pt;
                  q.ys[m] = y;
                  q.top = y;
                  q.c *= g;
                  nxt.push_back(std::move(q));
                });
        }
        parts = std::move(nxt);
      }
      for (const auto& pt : parts) {
        for (int m = 1; m < w; ++m) lab[p + m] = pt.ys[m];
        add(next, make(col, lab, key), pt.c);
      }
    }
  }

  Level L_;
  const EvalOptions& opt_;
  EvalStats& stats_;
  int slots_;
  int n_ = 0;
  AState state_;
  std::unordered_map<std::uint64_t, CycloScalar> fcache_, gcache_;
};

}  // namespace

EvalResult eval_accel(const GraphDiagram& d, const Level& L, const EvalOptions& opt) {
  check_evaluable(d, L);
  for (const auto& s : d.slices)
    if ((s.kind == SliceKind::Split || s.kind == SliceKind::Merge) && !admissible(s.a, s.b, s.c, L))
      return {CycloScalar::zero(L), {}};
  const ComponentInfo info = analyze_components(d);
  EvalResult res{CycloScalar::zero(L), {}};

  Rewriter rw{L, {}, {}, {}, CycloScalar::one(L)};
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    if (d.slices[k].kind == SliceKind::Projector || d.slices[k].kind == SliceKind::Identity)
      continue;
    WSlice w;
    w.s = d.slices[k];
    w.comp = info.cup_component[k];
    rw.word.push_back(std::move(w));
  }
  for (int c = 0; c < info.link_components; ++c) {
    const int f = d.framings[c];
    if (auto it = d.weights.find(c); it != d.weights.end()) {
      std::vector<CycloScalar> w = it->second;
      for (int a = 0; a <= L.max_color(); ++a)
        if (f != 0 && !w[a].is_zero()) w[a] *= xi(a, L).pow(f);
      rw.weights[c] = std::move(w);
    }
  }
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    const int c = info.cup_component[k];
    if (info.first_cup[k] && !d.weights.count(c)) {
      rw.link_color[c] = d.slices[k].a;
      if (d.framings[c] != 0) rw.global *= xi(d.slices[k].a, L).pow(d.framings[c]);
    }
  }
  if (opt.rewrites) rw.run();
  res.stats.recoupling_moves += rw.moves;
  if (rw.global.is_zero()) return res;

  // Slot assignment for the weighted components that survived.
  std::map<int, int> slot_of;
  for (const auto& [c, w] : rw.weights) slot_of.emplace(c, static_cast<int>(slot_of.size()));
  std::vector<AOp> prog;
  {
    std::vector<int> comp_at;  // per strand: component or -1
    std::map<int, int> alive;
    std::map<int, bool> seen;
    for (const auto& w : rw.word) {
      const Slice& s = w.s;
      AOp op;
      op.op = Op::Cup;
      op.pos = s.pos;
      if (w.encircle) {
        op.op = Op::Encircle;
        op.width = w.width;
        op.factor = w.factor;
        prog.push_back(std::move(op));
        continue;
      }
      switch (s.kind) {
        case SliceKind::Cup: {
          op.op = Op::Cup;
          op.a = s.a;
          if (auto it = slot_of.find(w.comp); it != slot_of.end()) {
            op.slot = it->second;
            if (!seen[w.comp]) {
              seen[w.comp] = true;
              op.branch = true;
              op.factor = rw.weights.at(w.comp);
            }
          }
          comp_at.insert(comp_at.begin() + s.pos, {w.comp, w.comp});
          alive[w.comp] += 2;
          break;
        }
        case SliceKind::Cap: {
          op.op = Op::Cap;
          const int c = comp_at[s.pos];
          comp_at.erase(comp_at.begin() + s.pos, comp_at.begin() + s.pos + 2);
          if (c >= 0 && (alive[c] -= 2) == 0 && slot_of.count(c)) {
            op.release = true;
            op.slot = slot_of.at(c);
          }
          break;
        }
        case SliceKind::Cross:
          op.op = Op::Cross;
          op.sign = s.sign;
          std::swap(comp_at[s.pos], comp_at[s.pos + 1]);
          break;
        case SliceKind::Split:
          op.op = Op::Split;
          op.a = s.a, op.b = s.b, op.c = s.c;
          comp_at.insert(comp_at.begin() + s.pos, -1);
          break;
        case SliceKind::Merge:
          op.op = Op::Merge;
          op.a = s.a, op.b = s.b, op.c = s.c;
          comp_at.erase(comp_at.begin() + s.pos + 1);
          break;
        default: continue;
      }
      prog.push_back(std::move(op));
    }
  }

  Sweep sweep(L, opt, res.stats, static_cast<int>(slot_of.size()));
  for (const auto& op : prog) sweep.apply(op);
  res.value = rw.global * sweep.result();
  return res;
}

EvalResult eval_accel(const GraphDiagram& d) {
  if (d.r < 3) throw InvalidDiagram("diagram has no level header");
  return eval_accel(d, Level(d.r));
}

}  // namespace skeinrep
