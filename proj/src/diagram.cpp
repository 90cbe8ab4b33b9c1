#include "skeinrep/diagram.hpp"

#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "skeinrep/recoupling.hpp"

namespace skeinrep {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

bool position_ok(const Slice& s, int n) {
  switch (s.kind) {
    case SliceKind::Identity: return true;
    case SliceKind::Cup: return s.pos >= 0 && s.pos <= n;
    case SliceKind::Cap:
    case SliceKind::Cross:
    case SliceKind::Merge: return s.pos >= 0 && s.pos + 1 < n;
    case SliceKind::Split:
    case SliceKind::Projector: return s.pos >= 0 && s.pos < n;
  }
  return false;
}

int width_change(SliceKind k) {
  switch (k) {
    case SliceKind::Cup: return 2;
    case SliceKind::Cap: return -2;
    case SliceKind::Split: return 1;
    case SliceKind::Merge: return -1;
    default: return 0;
  }
}

}  // namespace

std::string to_string(DefectKind k) {
  switch (k) {
    case DefectKind::PositionOutOfRange: return "PositionOutOfRange";
    case DefectKind::ColorMismatch: return "ColorMismatch";
    case DefectKind::ColorOutOfRange: return "ColorOutOfRange";
    case DefectKind::InadmissibleVertex: return "InadmissibleVertex";
    case DefectKind::NotClosed: return "NotClosed";
    case DefectKind::FramingCountMismatch: return "FramingCountMismatch";
    case DefectKind::BadWeight: return "BadWeight";
  }
  return "Unknown";
}

ComponentInfo analyze_components(const GraphDiagram& d) {
  UnionFind uf;
  std::vector<int> segs;
  std::vector<int> cup_seg(d.slices.size(), -1);
  std::vector<int> vertex_segs;
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    const Slice& s = d.slices[k];
    if (!position_ok(s, static_cast<int>(segs.size())))
      throw InvalidDiagram("slice " + std::to_string(k) + ": position out of range");
    switch (s.kind) {
      case SliceKind::Cup: {
        const int x = uf.make();
        cup_seg[k] = x;
        segs.insert(segs.begin() + s.pos, {x, x});
        break;
      }
      case SliceKind::Cap:
        uf.unite(segs[s.pos], segs[s.pos + 1]);
        segs.erase(segs.begin() + s.pos, segs.begin() + s.pos + 2);
        break;
      case SliceKind::Cross: std::swap(segs[s.pos], segs[s.pos + 1]); break;
      case SliceKind::Split: {
        const int x = segs[s.pos];
        vertex_segs.push_back(x);
        segs.insert(segs.begin() + s.pos, x);
        break;
      }
      case SliceKind::Merge:
        uf.unite(segs[s.pos], segs[s.pos + 1]);
        vertex_segs.push_back(segs[s.pos]);
        segs.erase(segs.begin() + s.pos + 1);
        break;
      default: break;
    }
  }
  if (!segs.empty()) throw InvalidDiagram("diagram is not closed");
  std::vector<char> is_graph(uf.parent.size(), 0);
  for (int x : vertex_segs) is_graph[uf.find(x)] = 1;

  ComponentInfo info;
  info.cup_component.assign(d.slices.size(), -1);
  info.first_cup.assign(d.slices.size(), false);
  std::map<int, int> link_index;
  std::vector<char> graph_seen(uf.parent.size(), 0);
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    if (cup_seg[k] < 0) continue;
    const int root = uf.find(cup_seg[k]);
    if (is_graph[root]) {
      if (!graph_seen[root]) {
        graph_seen[root] = 1;
        ++info.graph_components;
      }
      continue;
    }
    auto [it, fresh] = link_index.try_emplace(root, info.link_components);
    if (fresh) {
      ++info.link_components;
      info.first_cup[k] = true;
    }
    info.cup_component[k] = it->second;
  }
  for (std::size_t x = 0; x < uf.parent.size(); ++x) {
    const int root = uf.find(static_cast<int>(x));
    if (is_graph[root] && !graph_seen[root]) {
      graph_seen[root] = 1;
      ++info.graph_components;
    }
  }
  return info;
}

std::vector<Defect> validate(const GraphDiagram& d) {
  if (d.r >= 3) return validate(d, Level(d.r));
  std::vector<Defect> out;
  // Without a level only the structural checks apply; use a level wide
  // enough that no color is out of range.
  int max_color = 0;
  for (const auto& s : d.slices) max_color = std::max({max_color, s.a, s.b, s.c});
  auto defects = validate(d, Level(max_color + 2 < 3 ? 3 : max_color + 2));
  for (auto& df : defects)
    if (df.kind != DefectKind::ColorOutOfRange && df.kind != DefectKind::BadWeight)
      out.push_back(std::move(df));
  return out;
}

std::vector<Defect> validate(const GraphDiagram& d, const Level& L) {
  std::vector<Defect> out;
  auto report = [&](DefectKind k, int slice, std::string msg) {
    out.push_back({k, slice, std::move(msg)});
  };
  // First pass: positions only, so component analysis is safe to run.
  {
    int n = 0;
    for (std::size_t k = 0; k < d.slices.size(); ++k) {
      if (!position_ok(d.slices[k], n)) {
        report(DefectKind::PositionOutOfRange, static_cast<int>(k),
               "position " + std::to_string(d.slices[k].pos) + " with " + std::to_string(n) +
                   " strands");
        return out;
      }
      n += width_change(d.slices[k].kind);
    }
    if (n != 0) {
      report(DefectKind::NotClosed, -1, std::to_string(n) + " strands left open");
      return out;
    }
  }
  const ComponentInfo info = analyze_components(d);

  if (static_cast<int>(d.framings.size()) != info.link_components)
    report(DefectKind::FramingCountMismatch, -1,
           std::to_string(d.framings.size()) + " framings for " +
               std::to_string(info.link_components) + " link components");
  for (const auto& [k, w] : d.weights) {
    if (k < 0 || k >= info.link_components)
      report(DefectKind::BadWeight, -1, "weight on missing link component " + std::to_string(k));
    else if (static_cast<int>(w.size()) != L.num_colors())
      report(DefectKind::BadWeight, -1, "weight vector length differs from r-1");
  }

  // Strand colors; -1 marks a weighted strand.
  std::vector<int> colors;
  // Weighted strands are tracked by component so caps can be checked.
  std::vector<int> comp;
  auto in_range = [&](int a) { return a >= 0 && a <= L.max_color(); };
  for (std::size_t k = 0; k < d.slices.size(); ++k) {
    const Slice& s = d.slices[k];
    const int ks = static_cast<int>(k);
    switch (s.kind) {
      case SliceKind::Identity: break;
      case SliceKind::Cup: {
        const int c = info.cup_component[k];
        const bool weighted = c >= 0 && d.weights.count(c);
        if (!weighted && !in_range(s.a))
          report(DefectKind::ColorOutOfRange, ks, "cup color " + std::to_string(s.a));
        const int col = weighted ? -1 : s.a;
        colors.insert(colors.begin() + s.pos, {col, col});
        comp.insert(comp.begin() + s.pos, {c, c});
        break;
      }
      case SliceKind::Cap:
        if (colors[s.pos] != colors[s.pos + 1])
          report(DefectKind::ColorMismatch, ks, "cap joins colors " + std::to_string(colors[s.pos]) +
                                                    " and " + std::to_string(colors[s.pos + 1]));
        colors.erase(colors.begin() + s.pos, colors.begin() + s.pos + 2);
        comp.erase(comp.begin() + s.pos, comp.begin() + s.pos + 2);
        break;
      case SliceKind::Cross:
        std::swap(colors[s.pos], colors[s.pos + 1]);
        std::swap(comp[s.pos], comp[s.pos + 1]);
        break;
      case SliceKind::Split:
        if (!in_range(s.a) || !in_range(s.b) || !in_range(s.c))
          report(DefectKind::ColorOutOfRange, ks, "vertex color out of range");
        if (colors[s.pos] != s.a)
          report(DefectKind::ColorMismatch, ks, "split input has color " +
                                                    std::to_string(colors[s.pos]));
        if (!admissible(s.a, s.b, s.c, L))
          report(DefectKind::InadmissibleVertex, ks, "inadmissible triple");
        colors[s.pos] = s.c;
        colors.insert(colors.begin() + s.pos, s.b);
        comp.insert(comp.begin() + s.pos, -1);
        break;
      case SliceKind::Merge:
        if (!in_range(s.a) || !in_range(s.b) || !in_range(s.c))
          report(DefectKind::ColorOutOfRange, ks, "vertex color out of range");
        if (colors[s.pos] != s.b || colors[s.pos + 1] != s.c)
          report(DefectKind::ColorMismatch, ks, "merge inputs do not match");
        if (!admissible(s.a, s.b, s.c, L))
          report(DefectKind::InadmissibleVertex, ks, "inadmissible triple");
        colors[s.pos] = s.a;
        colors.erase(colors.begin() + s.pos + 1);
        comp.erase(comp.begin() + s.pos + 1);
        break;
      case SliceKind::Projector:
        if (!in_range(s.a)) report(DefectKind::ColorOutOfRange, ks, "projector color");
        if (colors[s.pos] != s.a)
          report(DefectKind::ColorMismatch, ks, "projector color differs from strand");
        break;
    }
  }
  return out;
}

GraphDiagram parse_diagram(std::istream& in) {
  GraphDiagram d;
  std::vector<int> omega_components;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    auto fail = [&](const std::string& why) -> InvalidDiagram {
      return InvalidDiagram("line " + std::to_string(lineno) + ": " + why);
    };
    auto need = [&](int& v) {
      if (!(ls >> v)) throw fail("expected integer after " + op);
    };
    int i = 0, a = 0, b = 0, c = 0;
    if (op == "R") {
      need(d.r);
      if (d.r < 3) throw fail("level must be >= 3");
    } else if (op == "FRAMING") {
      int f;
      while (ls >> f) d.framings.push_back(f);
      if (!ls.eof()) throw fail("bad framing list");
    } else if (op == "ID") {
      d.add(Slice::identity());
    } else if (op == "CUP") {
      need(i);
      a = 1;
      if (!(ls >> a)) {
        if (!ls.eof()) throw fail("bad cup color");
        a = 1;
      }
      d.cup(i, a);
    } else if (op == "CAP") {
      need(i);
      d.cap(i);
    } else if (op == "X+" || op == "X-") {
      need(i);
      d.add(Slice::cross(i, op == "X+" ? 1 : -1));
    } else if (op == "V") {
      need(i), need(a), need(b), need(c);
      d.split(i, a, b, c);
    } else if (op == "M") {
      need(i), need(b), need(c), need(a);
      d.merge(i, b, c, a);
    } else if (op == "PROJ") {
      need(i), need(a);
      d.projector(i, a);
    } else if (op == "OMEGA") {
      need(i);
      omega_components.push_back(i);
    } else {
      throw fail("unknown slice '" + op + "'");
    }
    std::string extra;
    if (ls.clear(), ls >> extra) throw fail("trailing tokens");
  }
  if (!omega_components.empty()) {
    if (d.r < 3) throw InvalidDiagram("OMEGA requires an R header");
    const OmegaElement om = omega(Level(d.r));
    for (int k : omega_components) d.weights[k] = om.coefficients;
  }
  return d;
}

GraphDiagram parse_diagram_string(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

GraphDiagram read_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDiagram("cannot open diagram file " + path);
  return parse_diagram(in);
}

std::string format_diagram(const GraphDiagram& d) {
  std::ostringstream os;
  if (d.r >= 3) os << "R " << d.r << "\n";
  if (!d.framings.empty()) {
    os << "FRAMING";
    for (int f : d.framings) os << " " << f;
    os << "\n";
  }
  std::optional<OmegaElement> om;
  for (const auto& [k, w] : d.weights) {
    if (d.r < 3) throw std::invalid_argument("weighted diagram without a level");
    if (!om) om = omega(Level(d.r));
    if (w != om->coefficients) throw std::invalid_argument("only Omega weights can be written");
    os << "OMEGA " << k << "\n";
  }
  for (const auto& s : d.slices) {
    switch (s.kind) {
      case SliceKind::Identity: os << "ID\n"; break;
      case SliceKind::Cup: os << "CUP " << s.pos << " " << s.a << "\n"; break;
      case SliceKind::Cap: os << "CAP " << s.pos << "\n"; break;
      case SliceKind::Cross: os << (s.sign > 0 ? "X+ " : "X- ") << s.pos << "\n"; break;
      case SliceKind::Split:
        os << "V " << s.pos << " " << s.a << " " << s.b << " " << s.c << "\n";
        break;
      case SliceKind::Merge:
        os << "M " << s.pos << " " << s.b << " " << s.c << " " << s.a << "\n";
        break;
      case SliceKind::Projector: os << "PROJ " << s.pos << " " << s.a << "\n"; break;
    }
  }
  return os.str();
}

GraphDiagram reflect(const GraphDiagram& d) {
  GraphDiagram out;
  out.r = d.r;
  // Link components are renumbered by first cup in the reflected word.
  const ComponentInfo info = analyze_components(d);
  // Cap colors are recovered by replaying the strand colors.
  std::vector<std::vector<int>> colors_before;
  {
    std::vector<int> cols;
    for (std::size_t k = 0; k < d.slices.size(); ++k) {
      colors_before.push_back(cols);
      const Slice& s = d.slices[k];
      switch (s.kind) {
        case SliceKind::Cup: cols.insert(cols.begin() + s.pos, {s.a, s.a}); break;
        case SliceKind::Cap: cols.erase(cols.begin() + s.pos, cols.begin() + s.pos + 2); break;
        case SliceKind::Cross: std::swap(cols[s.pos], cols[s.pos + 1]); break;
        case SliceKind::Split:
          cols[s.pos] = s.c;
          cols.insert(cols.begin() + s.pos, s.b);
          break;
        case SliceKind::Merge:
          cols[s.pos] = s.a;
          cols.erase(cols.begin() + s.pos + 1);
          break;
        default: break;
      }
    }
  }
  for (std::size_t k = d.slices.size(); k-- > 0;) {
    const Slice& s = d.slices[k];
    switch (s.kind) {
      case SliceKind::Cup: out.cap(s.pos); break;
      case SliceKind::Cap: out.cup(s.pos, colors_before[k][s.pos]); break;
      case SliceKind::Cross: out.add(Slice::cross(s.pos, -s.sign)); break;
      case SliceKind::Split: out.merge(s.pos, s.b, s.c, s.a); break;
      case SliceKind::Merge: out.split(s.pos, s.a, s.b, s.c); break;
      default: out.add(s); break;
    }
  }
  const ComponentInfo rinfo = analyze_components(out);
  // Map each component to its new index via a shared cup/cap slice.
  std::vector<int> new_index(info.link_components, -1);
  {
    // Trace segment identity: component of a cap in the reflected word equals
    // the component of the matching cup in d (same arc).
    UnionFind uf;
    std::vector<int> segs;
    std::vector<int> cap_seg(d.slices.size(), -1);
    std::vector<int> cup_seg(d.slices.size(), -1);
    for (std::size_t k = 0; k < d.slices.size(); ++k) {
      const Slice& s = d.slices[k];
      switch (s.kind) {
        case SliceKind::Cup: {
          const int x = uf.make();
          cup_seg[k] = x;
          segs.insert(segs.begin() + s.pos, {x, x});
          break;
        }
        case SliceKind::Cap:
          uf.unite(segs[s.pos], segs[s.pos + 1]);
          cap_seg[k] = segs[s.pos];
          segs.erase(segs.begin() + s.pos, segs.begin() + s.pos + 2);
          break;
        case SliceKind::Cross: std::swap(segs[s.pos], segs[s.pos + 1]); break;
        case SliceKind::Split: segs.insert(segs.begin() + s.pos, segs[s.pos]); break;
        case SliceKind::Merge:
          uf.unite(segs[s.pos], segs[s.pos + 1]);
          segs.erase(segs.begin() + s.pos + 1);
          break;
        default: break;
      }
    }
    std::map<int, int> root_to_old;
    for (std::size_t k = 0; k < d.slices.size(); ++k)
      if (info.cup_component[k] >= 0) root_to_old[uf.find(cup_seg[k])] = info.cup_component[k];
    const std::size_t n = d.slices.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (cap_seg[k] < 0) continue;
      const std::size_t rk = n - 1 - k;  // the cup this cap became
      auto it = root_to_old.find(uf.find(cap_seg[k]));
      if (it != root_to_old.end() && rinfo.cup_component[rk] >= 0)
        new_index[it->second] = rinfo.cup_component[rk];
    }
  }
  out.framings.assign(rinfo.link_components, 0);
  for (int k = 0; k < info.link_components; ++k) {
    if (new_index[k] < 0) continue;
    if (k < static_cast<int>(d.framings.size())) out.framings[new_index[k]] = -d.framings[k];
    if (auto it = d.weights.find(k); it != d.weights.end()) out.weights[new_index[k]] = it->second;
  }
  return out;
}

GraphDiagram side_by_side(const GraphDiagram& a, const GraphDiagram& b) {
  if (a.r && b.r && a.r != b.r) throw LevelMismatch("side_by_side: different levels");
  GraphDiagram out = a;
  if (!out.r) out.r = b.r;
  const int offset = analyze_components(a).link_components;
  out.slices.insert(out.slices.end(), b.slices.begin(), b.slices.end());
  out.framings.resize(offset, 0);
  out.framings.insert(out.framings.end(), b.framings.begin(), b.framings.end());
  for (const auto& [k, w] : b.weights) out.weights[k + offset] = w;
  return out;
}

}  // namespace skeinrep
