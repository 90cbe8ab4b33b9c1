#include "skeinrep/mcg_rep.hpp"

#include <numeric>

#include "parallel.hpp"
#include "skeinrep/recoupling.hpp"

namespace skeinrep {

namespace {

struct NamedCurve {
  std::string name;
  int first;
  int width;
};

std::vector<NamedCurve> named_curves(int g) {
  const FrameLayout f = frame_layout(g);
  const Spine& s = standard_spine(g);
  std::vector<NamedCurve> out;
  if (g == 1) {
    out.push_back({"meridian", f.ket_cut[0], 1});
    out.push_back({"longitude", f.surgery_right[0], 1});
    return out;
  }
  // Chain order: meridian of cut edge j, then the handle curve of U_{j+1}.
  for (int j = 0; j <= g; ++j) {
    out.push_back({"meridian_" + s.edge_names[s.cut_edges[j]], f.ket_cut[j], 1});
    if (j < g) out.push_back({"handle_" + std::to_string(j + 1), f.surgery_right[j], 1});
  }
  return out;
}

// One closed component, no vertices, no self-crossings, caps only on curve
// strands.
void check_simple_curve(const GraphDiagram& d, int width) {
  std::vector<int> owner(width, -1);  // -1: middle strand
  std::vector<int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : d.slices) {
    const int n = static_cast<int>(owner.size());
    switch (s.kind) {
      case SliceKind::Identity:
        break;
      case SliceKind::Cup: {
        if (s.pos < 0 || s.pos > n) throw InvalidCurve("curve cup out of range");
        const int id = static_cast<int>(parent.size());
        parent.push_back(id);
        owner.insert(owner.begin() + s.pos, {id, id});
        break;
      }
      case SliceKind::Cap: {
        if (s.pos < 0 || s.pos + 1 >= n) throw InvalidCurve("curve cap out of range");
        const int x = owner[s.pos], y = owner[s.pos + 1];
        if (x < 0 || y < 0) throw InvalidCurve("curve caps a strand of the handlebody skein");
        parent[find(x)] = find(y);
        owner.erase(owner.begin() + s.pos, owner.begin() + s.pos + 2);
        break;
      }
      case SliceKind::Cross:
        if (s.pos < 0 || s.pos + 1 >= n) throw InvalidCurve("curve crossing out of range");
        if (owner[s.pos] >= 0 && owner[s.pos + 1] >= 0)
          throw InvalidCurve("curve crosses itself");
        std::swap(owner[s.pos], owner[s.pos + 1]);
        break;
      default:
        throw InvalidCurve("curve diagrams may not contain vertices or projectors");
    }
  }
  if (static_cast<int>(owner.size()) != width)
    throw InvalidCurve("curve is not closed");
  for (int x : owner)
    if (x >= 0) throw InvalidCurve("curve is not closed");
  int roots = 0;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) roots += find(i) == i;
  if (roots != 1) throw InvalidCurve("curve must have exactly one component");
}

}  // namespace

std::vector<std::string> standard_curve_names(int g) {
  std::vector<std::string> out;
  for (const auto& c : named_curves(g)) out.push_back(c.name);
  return out;
}

GraphDiagram curve_insertion(const CurveSpec& c, int g, const Level& L) {
  if (!c.diagram) {
    for (const auto& nc : named_curves(g))
      if (nc.name == c.name) return encircling_omega(nc.first, nc.width, -1, L);
    throw InvalidCurve("unknown curve '" + c.name + "' for genus " + std::to_string(g));
  }
  check_simple_curve(*c.diagram, frame_layout(g).width);
  GraphDiagram d;
  d.r = L.r();
  d.slices = c.diagram->slices;
  d.framings = {-1};
  d.weights[0] = omega(L).coefficients;
  return d;
}

RepMatrix dehn_twist_matrix(const CurveSpec& c, int g, const Level& L, const EvalOptions& opt) {
  const GraphDiagram ins = curve_insertion(c, g, L);
  const auto basis = enumerate_basis(g, L);
  const auto n = static_cast<Eigen::Index>(basis.size());
  gram_matrix(g, L, opt);
  RepMatrix m(n, n);
  detail::parallel_for(static_cast<std::size_t>(n), [&](std::size_t v) {
    m.col(static_cast<Eigen::Index>(v)) = express({g, basis[v], ins}, L, opt);
  });
  return m;
}

RepMatrix pants_twist_matrix(int edge, int g, const Level& L) {
  const Spine& s = standard_spine(g);
  if (edge < 0 || edge >= s.num_edges())
    throw std::out_of_range("pants_twist_matrix: no edge " + std::to_string(edge));
  const auto basis = enumerate_basis(g, L);
  const auto n = static_cast<Eigen::Index>(basis.size());
  RepMatrix m = RepMatrix::Constant(n, n, CycloScalar::zero(L));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = xi(basis[i][edge], L);
  return m;
}

RepMatrix s_matrix(const Level& L) { return hopf_matrix(L) * CycloScalar::eta(L); }

RepMatrix t_matrix(const Level& L) {
  const int n = L.num_colors();
  RepMatrix t = RepMatrix::Constant(n, n, CycloScalar::zero(L));
  for (int a = 0; a < n; ++a) t(a, a) = xi(a, L);
  return t;
}

std::vector<RepMatrix> generator_matrices(int g, const Level& L, const EvalOptions& opt) {
  if (g != 1 && g != 2)
    throw UnsupportedGenus("generator matrices are stored for genus 1 and 2 only");
  std::vector<RepMatrix> out;
  for (const auto& name : standard_curve_names(g))
    out.push_back(normalize_projective(dehn_twist_matrix(CurveSpec::named(name), g, L, opt)));
  return out;
}

std::vector<int> pants_generator_indices(int g) {
  if (g == 1) return {0};
  if (g == 2) return {0, 2, 4};
  throw UnsupportedGenus("generator matrices are stored for genus 1 and 2 only");
}

Eigen::Index orbit_rank(std::span<const RepMatrix> generators, const CycloVector& start,
                        int depth) {
  if (depth < 0) throw std::invalid_argument("orbit_rank: depth must be non-negative");
  std::vector<RepMatrix> moves;
  for (const auto& m : generators) {
    if (m.rows() != start.size() || m.cols() != start.size())
      throw DimensionMismatch("orbit_rank: generator size does not match the vector");
    moves.push_back(m);
    moves.push_back(inverse<CycloScalar>(m));
  }
  EchelonBasis<CycloScalar> span(start.size());
  std::vector<CycloVector> frontier;
  if (span.insert(start)) frontier.push_back(start);
  // span(words of length <= k+1) = span_k + sum_M M span_k, and only the
  // vectors added at step k can contribute new directions.
  for (int k = 0; k < depth && !frontier.empty() && span.rank() < start.size(); ++k) {
    std::vector<CycloVector> next;
    for (const auto& v : frontier)
      for (const auto& m : moves) {
        CycloVector w = m * v;
        if (span.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return span.rank();
}

Eigen::Index vacuum_orbit_rank(int g, const Level& L, int depth, const EvalOptions& opt) {
  const auto gens = generator_matrices(g, L, opt);
  const auto n = gens.front().rows();
  CycloVector v0 = CycloVector::Constant(n, CycloScalar::zero(L));
  v0(0) = CycloScalar::one(L);  // the all-zero labeling comes first
  return orbit_rank(gens, v0, depth);
}

EigentupleReport pants_eigentuple_check(int g, const Level& L) {
  const Spine& s = standard_spine(g);
  EigentupleReport rep;
  rep.genus = g;
  rep.labelings = enumerate_basis(g, L);
  for (const auto& lab : rep.labelings) {
    std::vector<CycloScalar> t;
    for (int e = 0; e < s.num_edges(); ++e) t.push_back(xi(lab[e], L));
    rep.tuples.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < rep.tuples.size(); ++i)
    for (std::size_t j = i + 1; j < rep.tuples.size(); ++j)
      if (rep.tuples[i] == rep.tuples[j]) rep.collisions.emplace_back(i, j);
  rep.distinct = rep.collisions.empty();
  return rep;
}

}  // namespace skeinrep
