#pragma once

// Random closed diagrams for cross-checking the evaluators.  A random
// open word W is followed by random crossings and Omega loops, then closed
// by the mirror image of W.

#include <random>
#include <set>
#include <vector>

#include "skeinrep/diagram.hpp"
#include "skeinrep/recoupling.hpp"

namespace skeinrep {

struct RandomDiagramParams {
  int max_crossings = 6;
  int max_color = 3;
  int max_strands = 5;
  int steps = 6;
  int middle_steps = 3;
  double omega_probability = 0.0;
};

inline GraphDiagram random_closed_diagram(std::mt19937_64& rng, const Level& L,
                                         const RandomDiagramParams& p = {}) {
  const int cmax = std::min(p.max_color, L.max_color());
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GraphDiagram d;
  d.r = L.r();
  std::vector<int> colors;
  std::vector<std::vector<int>> colors_before;
  int crossings = 0;

  auto push = [&](const Slice& s) {
    colors_before.push_back(colors);
    d.add(s);
    switch (s.kind) {
      case SliceKind::Cup: colors.insert(colors.begin() + s.pos, {s.a, s.a}); break;
      case SliceKind::Cap: colors.erase(colors.begin() + s.pos, colors.begin() + s.pos + 2); break;
      case SliceKind::Cross: std::swap(colors[s.pos], colors[s.pos + 1]); ++crossings; break;
      case SliceKind::Split:
        colors[s.pos] = s.c;
        colors.insert(colors.begin() + s.pos, s.b);
        break;
      case SliceKind::Merge:
        colors[s.pos] = s.a;
        colors.erase(colors.begin() + s.pos + 1);
        break;
      default: break;
    }
  };

  for (int step = 0; step < p.steps; ++step) {
    const int n = static_cast<int>(colors.size());
    const int kind = n < 2 ? 0 : uni(0, 4);
    if (kind == 0) {
      if (n + 2 > p.max_strands) continue;
      push(Slice::cup(uni(0, n), uni(0, cmax)));
    } else if (kind == 1) {
      if (crossings >= p.max_crossings / 2) continue;
      push(Slice::cross(uni(0, n - 2), uni(0, 1) ? 1 : -1));
    } else if (kind == 2) {
      if (n + 1 > p.max_strands) continue;
      const int pos = uni(0, n - 1);
      const int a = colors[pos];
      std::vector<std::pair<int, int>> opts;
      for (int b = 0; b <= cmax; ++b)
        for (int c = 0; c <= cmax; ++c)
          if (admissible(a, b, c, L)) opts.emplace_back(b, c);
      if (opts.empty()) continue;
      const auto [b, c] = opts[uni(0, static_cast<int>(opts.size()) - 1)];
      push(Slice::split(pos, a, b, c));
    } else if (kind == 3) {
      const int pos = uni(0, n - 2);
      std::vector<int> opts;
      for (int a = 0; a <= cmax; ++a)
        if (admissible(colors[pos], colors[pos + 1], a, L)) opts.push_back(a);
      if (opts.empty()) continue;
      push(Slice::merge(pos, colors[pos], colors[pos + 1], opts[uni(0, int(opts.size()) - 1)]));
    } else {
      const int pos = uni(0, n - 2);
      if (colors[pos] == colors[pos + 1]) push(Slice::cap(pos));
    }
  }
  const std::size_t half = d.slices.size();
  const auto half_colors = colors_before;

  std::set<std::size_t> omega_cups;
  for (int step = 0; step < p.middle_steps; ++step) {
    const int n = static_cast<int>(colors.size());
    const bool want_omega =
        std::uniform_real_distribution<double>(0, 1)(rng) < p.omega_probability;
    if (want_omega) {
      const int pos = uni(0, n);
      const int w = n - pos == 0 ? 0 : uni(1, std::min(2, n - pos));
      if (crossings + 2 * w > p.max_crossings) continue;
      const int sign = uni(0, 1) ? 1 : -1;
      omega_cups.insert(d.slices.size());
      push(Slice::cup(pos, 0));
      for (int t = 0; t < w; ++t) push(Slice::cross(pos + 1 + t, sign));
      for (int t = w - 1; t >= 0; --t) push(Slice::cross(pos + 1 + t, sign));
      push(Slice::cap(pos));
    } else if (n >= 2 && crossings < p.max_crossings) {
      // Equal colors may swap once; otherwise cross twice so the colors
      // return to the order the mirror half expects.
      const int pos = uni(0, n - 2);
      push(Slice::cross(pos, uni(0, 1) ? 1 : -1));
      if (colors[pos] != colors[pos + 1] || uni(0, 1)) push(Slice::cross(pos, uni(0, 1) ? 1 : -1));
    }
  }

  for (std::size_t k = half; k-- > 0;) {
    const Slice s = d.slices[k];
    switch (s.kind) {
      case SliceKind::Cup: push(Slice::cap(s.pos)); break;
      case SliceKind::Cap: push(Slice::cup(s.pos, half_colors[k][s.pos])); break;
      case SliceKind::Cross: push(Slice::cross(s.pos, -s.sign)); break;
      case SliceKind::Split: push(Slice::merge(s.pos, s.b, s.c, s.a)); break;
      case SliceKind::Merge: push(Slice::split(s.pos, s.a, s.b, s.c)); break;
      default: break;
    }
  }

  const ComponentInfo info = analyze_components(d);
  d.framings.resize(info.link_components);
  for (auto& f : d.framings) f = uni(-1, 1);
  const OmegaElement om = omega(L);
  for (std::size_t k : omega_cups) d.weights[info.cup_component[k]] = om.coefficients;
  return d;
}

}  // namespace skeinrep
