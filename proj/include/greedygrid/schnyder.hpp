#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greedygrid/drawing.hpp"
#include "greedygrid/nested.hpp"
#include "greedygrid/verify.hpp"

namespace greedygrid {

// Coloring + orientation of the internal edges of a triangulation with outer
// triangle (root[0], root[1], root[2]): arc (tail, head) -> color 1..3, where
// color i arcs form the tree toward root[i-1].
struct SchnyderWood {
  std::array<int, 3> roots{};
  std::map<std::pair<int, int>, int> arc;

  int color_of(int u, int v) const {  // 0 if (u,v) is not an arc
    auto it = arc.find({u, v});
    return it == arc.end() ? 0 : it->second;
  }
};

// Properties (1) and (2): each internal vertex has one outgoing edge per
// color, in clockwise order e1,e2,e3, with incoming color-i edges confined to
// the clockwise sector (e_{i+1}, e_{i-1}); each root a_i sees only incoming
// color-i internal edges. Every internal edge must carry exactly one arc.
inline VerifierReport check_wood(const PlaneGraph& g, const SchnyderWood& w) {
  const int n = g.n;
  std::vector<char> is_root(n, 0);
  for (int r : w.roots) {
    if (r < 0 || r >= n) return VerifierReport::fail("root id out of range");
    is_root[r] = 1;
  }

  for (const auto& [uv, c] : w.arc) {
    const auto [u, v] = uv;
    if (c < 1 || c > 3) return VerifierReport::fail("bad color on arc");
    if (!g.has_edge(u, v)) return VerifierReport::fail("arc on a non-edge");
    if (is_root[u] && is_root[v]) return VerifierReport::fail("outer edge colored");
    if (w.arc.count({v, u})) return VerifierReport::fail("edge oriented both ways");
  }
  for (auto [u, v] : g.edges())
    if (!(is_root[u] && is_root[v]) && !w.arc.count({u, v}) && !w.arc.count({v, u}))
      return VerifierReport::fail("uncolored internal edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");

  for (int v = 0; v < n; ++v) {
    const auto& rot = g.rotation[v];
    if (is_root[v]) {
      const int want = 1 + static_cast<int>(std::find(w.roots.begin(), w.roots.end(), v) -
                                            w.roots.begin());
      for (int u : rot) {
        if (is_root[u]) continue;
        if (w.color_of(v, u) != 0 || w.color_of(u, v) != want)
          return VerifierReport::fail("root " + std::to_string(v) +
                                      " violates the incoming-color rule");
      }
      continue;
    }
    const int deg = static_cast<int>(rot.size());
    std::array<int, 4> out_pos{-1, -1, -1, -1};
    for (int i = 0; i < deg; ++i) {
      const int c = w.color_of(v, rot[i]);
      if (c == 0) continue;
      if (out_pos[c] != -1)
        return VerifierReport::fail("vertex " + std::to_string(v) +
                                    " has two outgoing color-" + std::to_string(c) + " edges");
      out_pos[c] = i;
    }
    for (int c = 1; c <= 3; ++c)
      if (out_pos[c] == -1)
        return VerifierReport::fail("vertex " + std::to_string(v) +
                                    " misses outgoing color " + std::to_string(c));

    // walk clockwise from e1; sector (e1,e2) holds incoming 3s, (e2,e3)
    // incoming 1s, (e3,e1) incoming 2s
    int sector = 3;  // incoming color expected until the next outgoing edge
    for (int s = 1; s < deg; ++s) {
      const int i = (out_pos[1] + s) % deg;
      if (i == out_pos[2]) {
        if (sector != 3)
          return VerifierReport::fail("outgoing edges out of clockwise order at vertex " +
                                      std::to_string(v));
        sector = 1;
        continue;
      }
      if (i == out_pos[3]) {
        if (sector != 1)
          return VerifierReport::fail("outgoing edges out of clockwise order at vertex " +
                                      std::to_string(v));
        sector = 2;
        continue;
      }
      const int cin = w.color_of(rot[i], v);
      if (cin != sector)
        return VerifierReport::fail("incoming edge in wrong sector at vertex " +
                                    std::to_string(v));
    }
  }
  return VerifierReport::ok();
}

// The unique Schnyder wood of the nested-triangle 3-tree, in closed form:
// level-k edges toward a_k/b_k and the six upward edges per level gap.
inline SchnyderWood wood_of_nested(const NestedTriangulation& g) {
  const int m = g.m;
  if (m < 2) throw std::invalid_argument("wood needs m >= 2");
  using detail::nested_id;
  SchnyderWood w;
  w.roots = {nested_id('a', m), nested_id('b', m), nested_id('c', m)};
  auto put = [&](char rt, int lt, char rh, int lh, int c) {
    w.arc[{nested_id(rt, lt), nested_id(rh, lh)}] = c;
  };
  for (int k = 1; k < m; ++k) {
    put('b', k, 'a', k, 1);
    put('c', k, 'a', k, 1);
    put('c', k, 'b', k, 2);
    put('a', k, 'a', k + 1, 1);
    put('a', k, 'b', k + 1, 2);
    put('b', k, 'b', k + 1, 2);
    put('a', k, 'c', k + 1, 3);
    put('b', k, 'c', k + 1, 3);
    put('c', k, 'c', k + 1, 3);
  }
  return w;
}

struct AlphaReport {
  bool conforms = true;
  double minimal_alpha = 0.0;  // twice the worst angular deviation, radians
  std::vector<std::pair<std::pair<int, int>, double>> offenders;  // arc -> deviation
};

// Directions of the three color axes: up, lower-right, lower-left.
inline double schnyder_axis(int color) {
  static const double pi = std::acos(-1.0);
  switch (color) {
    case 1: return pi / 2;
    case 2: return 11 * pi / 6;
    default: return 7 * pi / 6;
  }
}

// Checks that every internal vertex's outgoing arc of color i points within
// alpha/2 of that color's axis. Angular comparisons in doubles with a 1e-9
// slack; minimal_alpha is scale- and translation-invariant.
inline AlphaReport check_alpha(const Drawing& d, const SchnyderWood& w, double alpha) {
  static const double pi = std::acos(-1.0);
  if (!(alpha > 0 && alpha <= pi / 3 + 1e-12))
    throw std::invalid_argument("alpha must be in (0, pi/3]");
  const auto rep = check_wood(d.graph, w);
  if (!rep.verdict) throw std::invalid_argument("invalid wood: " + rep.witness);

  AlphaReport out;
  constexpr double tol = 1e-9;
  for (const auto& [uv, c] : w.arc) {
    const auto [u, v] = uv;
    const double dx = to_double(d.coords[v].x - d.coords[u].x);
    const double dy = to_double(d.coords[v].y - d.coords[u].y);
    double dev = std::atan2(dy, dx) - schnyder_axis(c);
    while (dev > pi) dev -= 2 * pi;
    while (dev < -pi) dev += 2 * pi;
    dev = std::abs(dev);
    out.minimal_alpha = std::max(out.minimal_alpha, 2 * dev);
    if (dev > alpha / 2 + tol) {
      out.conforms = false;
      out.offenders.push_back({uv, dev});
    }
  }
  return out;
}

// Per-level area amplification constant from the closed form.
inline double k_epsilon(double eps) {
  static const double pi = std::acos(-1.0);
  if (!(eps > 0 && eps < pi / 3)) throw std::invalid_argument("eps must be in (0, pi/3)");
  return 1.0 + 2.0 * std::sin(eps) / std::sin(2 * pi / 3 - eps);
}

struct AreaAudit {
  double k_eps = 0.0;
  std::vector<double> area2;        // doubled triangle areas, levels 1..m-1
  std::vector<double> ratios;       // ratios[i] = area2 of level i+2 over level i+1
  std::vector<bool> level_verdict;  // ratio >= k_eps per level
  bool compound_ok = false;         // area2[m-2] >= k_eps^(m-2) * area2[0]
  bool verdict = false;
};

// Checks the per-level instance of the exponential-area bound on a concrete
// (pi/3 - eps)-conforming drawing of the nested family: each nested triangle
// at least k_eps times the area of the previous one, compounding from level 1.
inline AreaAudit audit_area(const Drawing& d, const NestedTriangulation& g, double eps) {
  static const double pi = std::acos(-1.0);
  const auto w = wood_of_nested(g);
  const auto ar = check_alpha(d, w, pi / 3 - eps);
  if (!ar.conforms)
    throw std::invalid_argument("drawing does not conform to the alpha-Schnyder premise");

  AreaAudit out;
  out.k_eps = k_epsilon(eps);
  for (int k = 1; k <= g.m - 1; ++k) {
    const std::vector<Point> tri = {d.coords[detail::nested_id('a', k)],
                                    d.coords[detail::nested_id('b', k)],
                                    d.coords[detail::nested_id('c', k)]};
    out.area2.push_back(std::abs(to_double(polygon_area2(tri))));
  }
  out.verdict = true;
  for (std::size_t i = 1; i < out.area2.size(); ++i) {
    const double r = out.area2[i] / out.area2[i - 1];
    out.ratios.push_back(r);
    const bool ok = r >= out.k_eps * (1 - 1e-9);
    out.level_verdict.push_back(ok);
    out.verdict = out.verdict && ok;
  }
  out.compound_ok = out.area2.empty() || out.area2.back() >=
                                             std::pow(out.k_eps, g.m - 2) * out.area2.front() *
                                                 (1 - 1e-9);
  out.verdict = out.verdict && out.compound_ok;
  return out;
}

// Concentric nested witness conforming at the given alpha: similar triangles
// scaled by a common factor per level, the c corner pulled toward the center
// so the horizontal level edge c->b tilts into the lower-right wedge. All
// free angles are placed at a quarter of alpha, leaving half the admissible
// deviation as margin; the scale factor doubles until the validator agrees.
inline Drawing witness_drawing(int m, double alpha) {
  static const double pi = std::acos(-1.0);
  if (m < 2) throw std::invalid_argument("witness needs m >= 2");
  if (!(alpha > 0 && alpha < pi / 3))
    throw std::invalid_argument("alpha must be in (0, pi/3)");

  const NestedTriangulation g = gen_nested(m);
  const double t0 = alpha / 4;
  const double a = (std::sqrt(3.0) / 2) / std::tan(t0) - 0.5;
  const double gg = std::sqrt(3.0) * std::tan(pi / 6 - t0);
  const double rc = (1 - gg) / (1 + gg);
  double s = 1.0;
  s = std::max(s, 2 * a / (std::sqrt(3.0) * std::tan(pi / 6 + t0) - 1));
  s = std::max(s, 2 * a / (rc * (std::sqrt(3.0) * std::tan(pi / 6 + t0) - 1)));
  s = std::max(s, (1 + gg) / ((1 - gg) * rc));
  s *= 1.05;

  const auto w = wood_of_nested(g);
  for (int attempt = 0; attempt < 60; ++attempt, s *= 2) {
    std::vector<Point> coords(3 * m);
    double scale = 1.0;
    for (int k = 1; k <= m; ++k, scale *= s) {
      coords[detail::nested_id('a', k)] =
          Point{Rational(0), rational_from_double(scale * a)};
      coords[detail::nested_id('b', k)] =
          Point{rational_from_double(scale * std::sqrt(3.0) / 2),
                rational_from_double(-scale / 2)};
      coords[detail::nested_id('c', k)] =
          Point{rational_from_double(-scale * rc * std::sqrt(3.0) / 2),
                rational_from_double(-scale * rc / 2)};
    }
    Drawing d{g.underlying, coords};
    const auto rep = check_alpha(d, w, alpha);
    if (rep.conforms && rep.minimal_alpha <= alpha - alpha / 10) return d;
  }
  throw std::invalid_argument("no scale factor conforms at the requested alpha");
}

}  // namespace greedygrid
