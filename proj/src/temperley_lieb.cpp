#include "skeinrep/temperley_lieb.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "skeinrep/recoupling.hpp"

namespace skeinrep {

namespace {

int circular_position(int n, int p) { return p < n ? p : 3 * n - 1 - p; }
int point_at(int n, int pos) { return pos < n ? pos : 3 * n - 1 - pos; }

// Right-pads a diagram on n-1 strands with a vertical strand.
TLDiagram extend_right(const TLDiagram& d) {
  const int m = d.strands();
  const int n = m + 1;
  std::vector<std::uint8_t> p(2 * n);
  auto map = [&](int q) { return q < m ? q : q - m + n; };
  for (int q = 0; q < 2 * m; ++q) p[map(q)] = static_cast<std::uint8_t>(map(d.partner()[q]));
  p[n - 1] = static_cast<std::uint8_t>(2 * n - 1);
  p[2 * n - 1] = static_cast<std::uint8_t>(n - 1);
  return TLDiagram::from_partner(n, std::move(p));
}

TLElement extend_right(const TLElement& x) {
  TLElement out(x.level(), x.strands() + 1);
  for (const auto& [d, c] : x.terms()) out.add_term(extend_right(d), c);
  return out;
}

}  // namespace

TLDiagram TLDiagram::identity(int n) {
  std::vector<std::uint8_t> p(2 * n);
  for (int i = 0; i < n; ++i) {
    p[i] = static_cast<std::uint8_t>(n + i);
    p[n + i] = static_cast<std::uint8_t>(i);
  }
  return from_partner(n, std::move(p));
}

TLDiagram TLDiagram::hook(int n, int i) {
  if (i < 1 || i > n - 1) throw OutOfRange("hook index out of range");
  TLDiagram d = identity(n);
  auto& p = d.partner_;
  p[i - 1] = static_cast<std::uint8_t>(i);
  p[i] = static_cast<std::uint8_t>(i - 1);
  p[n + i - 1] = static_cast<std::uint8_t>(n + i);
  p[n + i] = static_cast<std::uint8_t>(n + i - 1);
  return d;
}

TLDiagram TLDiagram::from_partner(int n, std::vector<std::uint8_t> partner) {
  if (static_cast<int>(partner.size()) != 2 * n)
    throw std::invalid_argument("partner array must have 2n entries");
  TLDiagram d;
  d.n_ = n;
  d.partner_ = std::move(partner);
  return d;
}

TLDiagram TLDiagram::from_word(const std::string& word) {
  if (word.size() % 2 != 0) throw std::invalid_argument("odd-length TL word");
  const int n = static_cast<int>(word.size()) / 2;
  std::vector<std::uint8_t> p(2 * n);
  std::vector<int> stack;
  for (int pos = 0; pos < 2 * n; ++pos) {
    if (word[pos] == '(') {
      stack.push_back(pos);
    } else if (word[pos] == ')') {
      if (stack.empty()) throw std::invalid_argument("unbalanced TL word");
      const int a = point_at(n, stack.back());
      const int b = point_at(n, pos);
      stack.pop_back();
      p[a] = static_cast<std::uint8_t>(b);
      p[b] = static_cast<std::uint8_t>(a);
    } else {
      throw std::invalid_argument("TL word must contain only parentheses");
    }
  }
  if (!stack.empty()) throw std::invalid_argument("unbalanced TL word");
  return from_partner(n, std::move(p));
}

std::string TLDiagram::word() const {
  std::string w(2 * n_, '(');
  for (int pos = 0; pos < 2 * n_; ++pos) {
    const int q = point_at(n_, pos);
    if (circular_position(n_, partner_[q]) < pos) w[pos] = ')';
  }
  return w;
}

std::pair<TLDiagram, int> TLDiagram::compose(const TLDiagram& top, const TLDiagram& bottom) {
  if (top.n_ != bottom.n_) throw StrandMismatch("composing TL diagrams of different sizes");
  const int n = top.n_;
  std::vector<std::uint8_t> out(2 * n);
  std::vector<char> mid_seen(n, 0);
  // Walk from an outer point until another outer point is reached.
  auto walk = [&](bool in_bottom, int point) -> int {
    for (;;) {
      if (in_bottom) {
        const int q = bottom.partner_[point];
        if (q < n) return q;
        mid_seen[q - n] = 1;
        in_bottom = false;
        point = q - n;
      } else {
        const int q = top.partner_[point];
        if (q >= n) return q;
        mid_seen[q] = 1;
        in_bottom = true;
        point = n + q;
      }
    }
  };
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<std::uint8_t>(walk(true, i));
    out[n + i] = static_cast<std::uint8_t>(walk(false, n + i));
  }
  // Unvisited middle points lie on closed loops.
  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (mid_seen[m]) continue;
    ++loops;
    int cur = m;  // middle point m = top of `bottom` / bottom of `top`
    do {
      mid_seen[cur] = 1;
      const int up = top.partner_[cur];      // bottom of top -> another middle point
      mid_seen[up] = 1;
      cur = bottom.partner_[n + up] - n;     // back down through `bottom`
    } while (!mid_seen[cur]);
  }
  return {from_partner(n, std::move(out)), loops};
}

std::vector<TLDiagram> enumerate_tl(int n) {
  std::vector<TLDiagram> out;
  std::string w;
  auto rec = [&](auto&& self, int open, int close) -> void {
    if (static_cast<int>(w.size()) == 2 * n) {
      out.push_back(TLDiagram::from_word(w));
      return;
    }
    if (open < n) {
      w.push_back('(');
      self(self, open + 1, close);
      w.pop_back();
    }
    if (close < open) {
      w.push_back(')');
      self(self, open, close + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

TLElement TLElement::identity(const Level& L, int n) {
  return basis(L, TLDiagram::identity(n), CycloScalar::one(L));
}

TLElement TLElement::hook(const Level& L, int n, int i) {
  return basis(L, TLDiagram::hook(n, i), CycloScalar::one(L));
}

TLElement TLElement::basis(const Level& L, const TLDiagram& d, CycloScalar c) {
  TLElement x(L, d.strands());
  x.add_term(d, c);
  return x;
}

CycloScalar TLElement::coefficient(const TLDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? CycloScalar::zero(level_) : it->second;
}

void TLElement::add_term(const TLDiagram& d, const CycloScalar& c) {
  if (d.strands() != n_) throw StrandMismatch("diagram strand count differs from element");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(d, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (o.n_ != n_) throw StrandMismatch("adding TL elements of different sizes");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& o) {
  if (o.n_ != n_) throw StrandMismatch("subtracting TL elements of different sizes");
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

TLElement operator*(const CycloScalar& c, const TLElement& x) {
  TLElement out(x.level_, x.n_);
  if (c.is_zero()) return out;
  for (const auto& [d, v] : x.terms_) out.add_term(d, c * v);
  return out;
}

std::string TLElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*" << (d.word().empty() ? "[]" : d.word());
  }
  return os.str();
}

TLElement tl_compose(const TLElement& x, const TLElement& y) {
  if (x.strands() != y.strands()) throw StrandMismatch("tl_compose: strand counts differ");
  const Level& L = x.level();
  const CycloScalar delta = loop_value(L);
  std::vector<CycloScalar> delta_pow{CycloScalar::one(L)};
  TLElement out(L, x.strands());
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      auto [d, loops] = TLDiagram::compose(dx, dy);
      while (static_cast<int>(delta_pow.size()) <= loops) delta_pow.push_back(delta_pow.back() * delta);
      out.add_term(d, cx * cy * delta_pow[loops]);
    }
  }
  return out;
}

const TLElement& jones_wenzl(int a, const Level& L) {
  if (a < 0 || a > L.r() - 1)
    throw OutOfRange("jones_wenzl: color " + std::to_string(a) + " outside 0.." +
                     std::to_string(L.r() - 1));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<TLElement>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({L.r(), a}); it != cache.end()) return *it->second;
  }
  TLElement f = TLElement::identity(L, a);
  if (a >= 2) {
    const TLElement prev = extend_right(jones_wenzl(a - 1, L));
    const CycloScalar den = delta(a - 1, L);
    if (den.is_zero()) throw DegenerateDenominator("vanishing quantum dimension in JW recursion");
    const CycloScalar ratio = delta(a - 2, L) / den;
    const TLElement hooked = tl_compose(prev, tl_compose(TLElement::hook(L, a, a - 1), prev));
    f = prev - ratio * hooked;
  }
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({L.r(), a}, std::make_unique<TLElement>(std::move(f)));
  return *it->second;
}

CycloScalar markov_trace(const TLElement& x) {
  const Level& L = x.level();
  const int n = x.strands();
  const CycloScalar delta_v = loop_value(L);
  CycloScalar total = CycloScalar::zero(L);
  for (const auto& [d, c] : x.terms()) {
    std::vector<char> seen(2 * n, 0);
    int loops = 0;
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[s]) continue;
      ++loops;
      int cur = s;
      while (!seen[cur]) {
        seen[cur] = 1;
        const int q = d.partner()[cur];
        seen[q] = 1;
        cur = q < n ? q + n : q - n;  // closure strand
      }
    }
    total += c * delta_v.pow(loops);
  }
  return total;
}

}  // namespace skeinrep
