#include "skeinrep/recoupling.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "skeinrep/diagram.hpp"
#include "skeinrep/engine.hpp"

namespace skeinrep {

namespace {

// Read-mostly memo keyed by (r, labels).  Values are computed outside the
// lock; a racing duplicate computation is harmless.
template <class Key>
class Memo {
 public:
  template <class F>
  CycloScalar get(const Key& k, F&& compute) {
    {
      std::shared_lock lock(mu_);
      if (auto it = table_.find(k); it != table_.end()) return it->second;
    }
    CycloScalar v = compute();
    std::unique_lock lock(mu_);
    return table_.try_emplace(k, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, CycloScalar> table_;
};

using Tet = std::array<int, 6>;

// Edge (i,j) of the tetrahedron, i<j, in label order e12,e13,e14,e23,e24,e34.
int edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return idx[i][j];
}

Tet canonical_tet(const Tet& t) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Tet best = t;
  do {
    Tet cand;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) cand[edge_index(i, j)] = t[edge_index(perm[i], perm[j])];
    best = std::min(best, cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

Color::Color(int a, const Level& L) : a_(a) {
  if (a < 0 || a > L.max_color())
    throw std::out_of_range("color " + std::to_string(a) + " outside 0.." +
                            std::to_string(L.max_color()));
}

CycloScalar delta(int a, const Level& L) {
  if (a < 0) throw std::out_of_range("negative color");
  // (-1)^a (A^{2(a+1)} - A^{-2(a+1)}) / (A^2 - A^{-2}) = (-1)^a sum_k A^{2a-4k}
  CycloScalar s = CycloScalar::zero(L);
  for (int k = 0; k <= a; ++k) s += CycloScalar::a_power(L, 2 * a - 4 * k);
  return a % 2 ? -s : s;
}

CycloScalar xi(int a, const Level& L) {
  CycloScalar v = CycloScalar::a_power(L, static_cast<long>(a) * a + 2L * a);
  return a % 2 ? -v : v;
}

bool admissible(int a, int b, int c, const Level& L) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2) return false;
  if (c < std::abs(a - b) || c > a + b) return false;
  return a + b + c <= 2 * L.max_color();
}

CycloScalar theta(int a, int b, int c, const Level& L) {
  if (!admissible(a, b, c, L)) return CycloScalar::zero(L);
  static Memo<std::array<int, 4>> memo;
  std::array<int, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  return memo.get({L.r(), s[0], s[1], s[2]}, [&] {
    GraphDiagram d;
    d.cup(0, s[0]).split(0, s[0], s[1], s[2]).merge(0, s[1], s[2], s[0]).cap(0);
    return eval_naive(d, L).value;
  });
}

CycloScalar tetrahedron(int e12, int e13, int e14, int e23, int e24, int e34, const Level& L) {
  if (!admissible(e12, e13, e14, L) || !admissible(e12, e23, e24, L) ||
      !admissible(e13, e23, e34, L) || !admissible(e14, e24, e34, L))
    return CycloScalar::zero(L);
  static Memo<std::array<int, 7>> memo;
  const Tet t = canonical_tet({e12, e13, e14, e23, e24, e34});
  return memo.get({L.r(), t[0], t[1], t[2], t[3], t[4], t[5]}, [&] {
    // Vertices: 1 = split z -> (y, c2), 2 = split y -> (x, c1),
    // 3 = merge (c1, c2) -> j, 4 = merge (x, j) -> z.
    const int y = t[0], c2 = t[1], z = t[2], c1 = t[3], x = t[4], j = t[5];
    GraphDiagram d;
    d.cup(0, z).split(0, z, y, c2).split(0, y, x, c1).merge(1, c1, c2, j).merge(0, x, j, z).cap(0);
    return eval_naive(d, L).value;
  });
}

CycloScalar sixj(int x, int c1, int c2, int z, int y, int j, const Level& L) {
  if (!admissible(x, c1, y, L) || !admissible(y, c2, z, L) || !admissible(c1, c2, j, L) ||
      !admissible(x, j, z, L))
    return CycloScalar::zero(L);
  const CycloScalar t1 = theta(c1, c2, j, L);
  const CycloScalar t2 = theta(x, j, z, L);
  if (t1.is_zero() || t2.is_zero()) throw ZeroTheta("vanishing theta in F-move");
  return tetrahedron(y, c2, z, c1, x, j, L) * delta(j, L) / (t1 * t2);
}

CycloScalar sixj_inverse(int x, int c1, int c2, int z, int j, int y, const Level& L) {
  if (!admissible(x, c1, y, L) || !admissible(y, c2, z, L) || !admissible(c1, c2, j, L) ||
      !admissible(x, j, z, L))
    return CycloScalar::zero(L);
  const CycloScalar t1 = theta(x, c1, y, L);
  const CycloScalar t2 = theta(y, c2, z, L);
  if (t1.is_zero() || t2.is_zero()) throw ZeroTheta("vanishing theta in F-move");
  return tetrahedron(y, c2, z, c1, x, j, L) * delta(y, L) / (t1 * t2);
}

CycloScalar braiding(int a, int b, int j, int sign, const Level& L) {
  if (!admissible(a, b, j, L)) return CycloScalar::zero(L);
  static Memo<std::array<int, 5>> memo;
  return memo.get({L.r(), a, b, j, sign > 0 ? 1 : -1}, [&] {
    GraphDiagram d;
    d.cup(0, j).split(0, j, a, b).add(Slice::cross(0, sign)).merge(0, b, a, j).cap(0);
    return eval_naive(d, L).value / theta(a, b, j, L);
  });
}

OmegaElement omega(const Level& L) {
  OmegaElement om{L, {}};
  const CycloScalar eta = CycloScalar::eta(L);
  for (int a = 0; a <= L.max_color(); ++a) om.coefficients.push_back(eta * delta(a, L));
  return om;
}

CycloScalar hopf(int a, int b, const Level& L) {
  static Memo<std::array<int, 3>> memo;
  if (a > b) std::swap(a, b);
  return memo.get({L.r(), a, b}, [&] {
    GraphDiagram d;
    d.cup(0, a).cup(2, b).over(1).over(1).cap(2).cap(0);
    d.framings = {0, 0};
    EvalOptions opt;
    opt.rewrites = false;
    return eval_accel(d, L, opt).value;
  });
}

}  // namespace skeinrep
