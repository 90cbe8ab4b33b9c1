#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "parallel.hpp"
#include "skeinrep/recoupling.hpp"
#include "skeinrep/rep_spaces.hpp"

namespace skeinrep {

namespace {

Spine make_spine(int g) {
  Spine s;
  s.genus = g;
  switch (g) {
    case 1:
      s.edge_names = {"a"};
      s.opening = {{SliceKind::Cup, 0, 0}};
      s.cut_edges = {0, 0};
      s.closing_edge = {0};
      break;
    case 2:
      s.edge_names = {"a", "b", "c"};
      s.vertices = {{{0, 1, 2}}, {{0, 1, 2}}};
      s.opening = {{SliceKind::Cup, 0, 0}, {SliceKind::Split, 1, 0, 1, 2}};
      s.cut_edges = {0, 1, 2};
      s.closing_edge = {0, 1, 2};
      break;
    case 3:
      s.edge_names = {"a", "b", "c", "d", "e", "f"};
      s.vertices = {{{0, 1, 2}}, {{2, 3, 4}}, {{3, 4, 5}}, {{1, 5, 0}}};
      s.opening = {{SliceKind::Cup, 0, 0},
                   {SliceKind::Split, 1, 0, 1, 2},
                   {SliceKind::Split, 2, 2, 3, 4}};
      s.cut_edges = {0, 1, 3, 4};
      s.closing_edge = {0, 1, 5, 3, 4, 5};
      break;
    default:
      throw UnsupportedGenus("genus " + std::to_string(g) + " is not supported (1.." +
                             std::to_string(kMaxGenus) + ")");
  }
  return s;
}

void check_genus(int g) {
  if (g < 1 || g > kMaxGenus)
    throw UnsupportedGenus("genus " + std::to_string(g) + " is not supported (1.." +
                           std::to_string(kMaxGenus) + ")");
}

void append_opening(GraphDiagram& d, const Spine& s, const Labeling& lab) {
  for (const auto& st : s.opening) {
    if (st.kind == SliceKind::Cup)
      d.cup(st.pos, lab[st.edge]);
    else
      d.split(st.pos, lab[st.edge], lab[st.left], lab[st.right]);
  }
}

void append_closing(GraphDiagram& d, const Spine& s, const Labeling& lab) {
  const auto& m = s.closing_edge;
  for (auto it = s.opening.rbegin(); it != s.opening.rend(); ++it) {
    if (it->kind == SliceKind::Cup)
      d.cap(it->pos);
    else
      d.merge(it->pos, lab[m[it->left]], lab[m[it->right]], lab[m[it->edge]]);
  }
}

}  // namespace

const Spine& standard_spine(int g) {
  check_genus(g);
  static const std::vector<Spine> spines = [] {
    std::vector<Spine> v;
    for (int k = 1; k <= kMaxGenus; ++k) v.push_back(make_spine(k));
    return v;
  }();
  return spines[g - 1];
}

bool admissible_labeling(const Spine& s, const Labeling& lab, const Level& L) {
  if (static_cast<int>(lab.size()) != s.num_edges()) return false;
  for (int c : lab)
    if (c < 0 || c > L.max_color()) return false;
  for (const auto& v : s.vertices)
    if (!admissible(lab[v.edges[0]], lab[v.edges[1]], lab[v.edges[2]], L)) return false;
  return true;
}

std::vector<Labeling> enumerate_basis(int g, const Level& L) {
  const Spine& s = standard_spine(g);
  const int n = s.num_edges();
  std::vector<Labeling> out;
  Labeling lab(n, 0);
  while (true) {
    if (admissible_labeling(s, lab, L)) out.push_back(lab);
    int k = n - 1;
    while (k >= 0 && lab[k] == L.max_color()) lab[k--] = 0;
    if (k < 0) break;
    ++lab[k];
  }
  return out;
}

std::string format_labeling(const Spine& s, const Labeling& lab) {
  std::string out;
  for (int e = 0; e < s.num_edges(); ++e) {
    if (e) out += ' ';
    out += s.edge_names[e] + "=" + std::to_string(lab[e]);
  }
  return out;
}

FrameLayout frame_layout(int g) {
  check_genus(g);
  FrameLayout f;
  f.genus = g;
  f.width = 4 * g + 2;
  for (int k = 1; k <= g; ++k) f.surgery_left.push_back(g - k);
  for (int j = 0; j <= g; ++j) {
    f.ket_cut.push_back(g + 3 * j);
    f.bra_cut.push_back(g + 3 * j + 1);
    if (j < g) f.surgery_right.push_back(g + 3 * j + 2);
  }
  return f;
}

std::vector<int> middle_colors(int g, const Labeling& ket, const Labeling& bra) {
  const Spine& s = standard_spine(g);
  const FrameLayout f = frame_layout(g);
  std::vector<int> colors(f.width, 0);
  for (int j = 0; j <= g; ++j) {
    colors[f.ket_cut[j]] = ket[s.cut_edges[j]];
    colors[f.bra_cut[j]] = bra[s.cut_edges[j]];
  }
  return colors;
}

GraphDiagram encircling_omega(int first, int width, int framing, const Level& L) {
  if (first < 0 || width < 0) throw std::out_of_range("encircling_omega: bad block");
  GraphDiagram d;
  d.r = L.r();
  d.cup(first, 0);
  for (int t = 1; t <= width; ++t) d.over(first + t);
  for (int t = width; t >= 1; --t) d.over(first + t);
  d.cap(first);
  d.framings = {framing};
  d.weights[0] = omega(L).coefficients;
  return d;
}

GraphDiagram doubled_diagram(const HandlebodySkein& ket, const Labeling& bra, const Level& L) {
  const int g = ket.genus;
  const Spine& s = standard_spine(g);
  if (!admissible_labeling(s, ket.base, L))
    throw std::invalid_argument("doubled_diagram: ket labeling is not admissible");
  if (!admissible_labeling(s, bra, L))
    throw std::invalid_argument("doubled_diagram: bra labeling is not admissible");

  GraphDiagram d;
  d.r = L.r();
  append_opening(d, s, bra);
  append_opening(d, s, ket.base);

  // [v0..vg, w0..wg] -> [v0 w0 v1 w1 ..], ket strands passing over.
  std::vector<int> interleave;
  for (int j = 0; j <= g; ++j)
    for (int p = g + j; p >= 2 * j + 1; --p) interleave.push_back(p);
  for (int p : interleave) d.over(p);

  // Surgery circles, outermost first.  U_k hooks the first 2k strands.
  std::vector<std::size_t> surgery_cups;
  std::vector<std::vector<int>> hooks(g + 1);
  for (int k = g; k >= 1; --k) {
    const int at = g - k;
    surgery_cups.push_back(d.slices.size());
    d.cup(at, 0);
    for (int t = 0; t < 2 * k; ++t) {
      d.over(at + 1 + t);
      hooks[k].push_back(at + 1 + t);
    }
  }

  const std::size_t insert_begin = d.slices.size();
  for (const auto& sl : ket.insertion.slices) d.add(sl);
  const std::size_t insert_end = d.slices.size();

  for (int k = 1; k <= g; ++k) {
    for (auto it = hooks[k].rbegin(); it != hooks[k].rend(); ++it) d.over(*it);
    d.cap(g - k);
  }
  for (auto it = interleave.rbegin(); it != interleave.rend(); ++it) d.under(*it);
  append_closing(d, s, ket.base);
  append_closing(d, s, bra);

  const ComponentInfo info = analyze_components(d);
  d.framings.assign(info.link_components, 0);
  const auto om = omega(L).coefficients;
  for (std::size_t k : surgery_cups) d.weights[info.cup_component[k]] = om;
  int local = 0;
  for (std::size_t k = insert_begin; k < insert_end; ++k) {
    if (!info.first_cup[k] || info.cup_component[k] < 0) continue;
    const int comp = info.cup_component[k];
    if (local < static_cast<int>(ket.insertion.framings.size()))
      d.framings[comp] = ket.insertion.framings[local];
    if (auto it = ket.insertion.weights.find(local); it != ket.insertion.weights.end())
      d.weights[comp] = it->second;
    ++local;
  }
  if (local < static_cast<int>(ket.insertion.framings.size()) ||
      (!ket.insertion.weights.empty() && ket.insertion.weights.rbegin()->first >= local))
    throw InvalidDiagram("insertion framings or weights name missing link components");
  return d;
}

CycloScalar handlebody_pairing(const HandlebodySkein& ket, const Labeling& bra, const Level& L,
                               const EvalOptions& opt) {
  return eval_accel(doubled_diagram(ket, bra, L), L, opt).value;
}

RepMatrix gram_matrix(int g, const Level& L, const EvalOptions& opt) {
  check_genus(g);
  static std::mutex mu;
  static std::map<std::pair<int, int>, RepMatrix> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find({g, L.r()}); it != cache.end()) return it->second;
  }
  const auto basis = enumerate_basis(g, L);
  const auto n = static_cast<Eigen::Index>(basis.size());
  RepMatrix G(n, n);
  detail::parallel_for(static_cast<std::size_t>(n * n), [&](std::size_t idx) {
    const auto v = static_cast<Eigen::Index>(idx) / n, w = static_cast<Eigen::Index>(idx) % n;
    G(v, w) = handlebody_pairing({g, basis[v], {}}, basis[w], L, opt);
  });
  std::lock_guard lock(mu);
  return cache.try_emplace({g, L.r()}, std::move(G)).first->second;
}

CycloVector express(const HandlebodySkein& d, const Level& L, const EvalOptions& opt) {
  const auto basis = enumerate_basis(d.genus, L);
  const auto n = static_cast<Eigen::Index>(basis.size());
  const RepMatrix G = gram_matrix(d.genus, L, opt);
  CycloVector rhs(n);
  detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t w) {
    rhs(static_cast<Eigen::Index>(w)) = handlebody_pairing(d, basis[w], L, opt);
  });
  if (is_diagonal(G)) {
    CycloVector c(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (G(i, i).is_zero()) throw SingularGram("express: Gram matrix has a zero diagonal entry");
      c(i) = rhs(i).is_zero() ? CycloScalar::zero(L) : rhs(i) / G(i, i);
    }
    return c;
  }
  try {
    return solve<CycloScalar>(G.transpose(), rhs);
  } catch (const SingularMatrix& e) {
    throw SingularGram(std::string("express: ") + e.what());
  }
}

double verlinde_dimension(int g, int r) {
  double sum = 0;
  for (int a = 0; a <= r - 2; ++a) {
    const double s0a = std::sqrt(2.0 / r) * std::sin(std::numbers::pi * (a + 1) / r);
    sum += std::pow(s0a, 2 - 2 * g);
  }
  return sum;
}

}  // namespace skeinrep
