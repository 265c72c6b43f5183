#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "greedygrid/drawing.hpp"

namespace greedygrid {

struct VerifierReport {
  bool verdict = true;
  std::string witness;  // empty iff verdict; human-readable counterexample

  static VerifierReport ok() { return {}; }
  static VerifierReport fail(std::string w) { return {false, std::move(w)}; }
};

namespace detail {

// Small dynamic bitset over vertex ids.
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void or_with(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
};

template <class P>
VerifierReport planar_impl(const PlaneGraph& g, const std::vector<P>& pts) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (pts[u] == pts[v])
        return VerifierReport::fail("coincident vertices " + std::to_string(u) + " and " +
                                    std::to_string(v));
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto [a, b] = es[i];
    for (int w = 0; w < g.n; ++w) {
      if (w == a || w == b) continue;
      if (geo::on_segment(pts[a], pts[b], pts[w]))
        return VerifierReport::fail("vertex " + std::to_string(w) + " lies on edge (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [c, d] = es[j];
      if (geo::segments_cross(pts[a], pts[b], pts[c], pts[d]))
        return VerifierReport::fail("edges (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") and (" + std::to_string(c) + "," + std::to_string(d) +
                                    ") cross");
    }
  }
  return VerifierReport::ok();
}

template <class P>
VerifierReport convex_impl(const PlaneGraph& g, const std::vector<P>& pts) {
  const auto fs = faces(g);
  for (const auto& f : fs) {
    const std::size_t k = f.size();
    if (k < 3) return VerifierReport::fail("degenerate face of length " + std::to_string(k));
    std::vector<P> poly;
    poly.reserve(k);
    for (int v : f) poly.push_back(pts[v]);
    const int face_sign = geo::sgn(geo::polygon_area2(poly));
    if (face_sign == 0) return VerifierReport::fail("zero-area face");
    for (std::size_t i = 0; i < k; ++i) {
      const int turn = geo::orient(poly[i], poly[(i + 1) % k], poly[(i + 2) % k]);
      // A turn against the face's own orientation is a reflex corner.
      if (turn != 0 && turn != face_sign)
        return VerifierReport::fail("reflex corner at vertex " +
                                    std::to_string(f[(i + 1) % k]));
    }
  }
  return VerifierReport::ok();
}

template <class P>
std::vector<Bits> angle_monotone_pairs_impl(const PlaneGraph& g, const std::vector<P>& pts) {
  const int n = g.n;
  const auto es = g.edges();

  std::vector<P> lows;
  lows.reserve(2 * es.size());
  for (auto [u, v] : es) {
    lows.push_back(geo::sub(pts[v], pts[u]));
    lows.push_back(geo::sub(pts[u], pts[v]));
  }

  std::vector<Bits> pairs(n, Bits(n));
  std::vector<int> order(n);
  for (const P& low : lows) {
    // Every direction in the closed wedge has positive projection on the
    // bisector, so sorting by that projection topologically orders the
    // admissible-edge DAG.
    const P bis{static_cast<decltype(low.x)>(low.x - low.y),
                static_cast<decltype(low.x)>(low.x + low.y)};
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return geo::dot(pts[a], bis) > geo::dot(pts[b], bis); });

    std::vector<Bits> reach(n, Bits(n));
    for (int u : order) {
      reach[u].set(u);
      for (int v : g.rotation[u])
        if (geo::in_wedge(geo::sub(pts[v], pts[u]), low)) reach[u].or_with(reach[v]);
      pairs[u].or_with(reach[u]);
    }
  }
  return pairs;
}

template <class P>
VerifierReport angle_monotone_impl(const PlaneGraph& g, const std::vector<P>& pts) {
  if (g.n <= 1) return VerifierReport::ok();
  const auto pairs = angle_monotone_pairs_impl(g, pts);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (!pairs[u].test(v))
        return VerifierReport::fail("no angle-monotone path from " + std::to_string(u) +
                                    " to " + std::to_string(v));
  return VerifierReport::ok();
}

template <class P>
VerifierReport greedy_impl(const PlaneGraph& g, const std::vector<P>& pts) {
  for (int v = 0; v < g.n; ++v)
    for (int u = 0; u < g.n; ++u) {
      if (u == v) continue;
      const auto du = geo::dist2(pts[u], pts[v]);
      bool closer = false;
      for (int w : g.rotation[u])
        if (geo::dist2(pts[w], pts[v]) < du) {
          closer = true;
          break;
        }
      if (!closer)
        return VerifierReport::fail("vertex " + std::to_string(u) +
                                    " has no neighbor closer to " + std::to_string(v));
    }
  return VerifierReport::ok();
}

// Dispatch to the machine-integer fast path when the coordinates allow it.
template <class Fn>
VerifierReport with_coords(const Drawing& d, Fn fn) {
  if (auto ic = int_coords(d)) return fn(d.graph, *ic);
  return fn(d.graph, d.coords);
}

}  // namespace detail

// No two edges share a point other than a common endpoint, and no vertex lies
// on a non-incident edge. Exact.
inline VerifierReport check_planar(const Drawing& d) {
  return detail::with_coords(
      d, [](const PlaneGraph& g, const auto& pts) { return detail::planar_impl(g, pts); });
}

// Every facial polygon (outer walk included) turns consistently with its own
// orientation; straight (pi) corners are allowed. Assumes d is planar.
inline VerifierReport check_convex(const Drawing& d) {
  return detail::with_coords(
      d, [](const PlaneGraph& g, const auto& pts) { return detail::convex_impl(g, pts); });
}

// Every ordered pair admits a path whose edge directions fit in a closed
// quarter-turn wedge. Candidate wedges are those whose low boundary is an edge
// direction of the drawing (both orientations): rotating any witness wedge
// clockwise until a path edge hits the boundary keeps the path admissible.
inline VerifierReport check_angle_monotone(const Drawing& d) {
  return detail::with_coords(d, [](const PlaneGraph& g, const auto& pts) {
    return detail::angle_monotone_impl(g, pts);
  });
}

// Per-pair version of the same decision: m[u][v] iff some candidate wedge
// admits a monotone u -> v path.
inline std::vector<std::vector<bool>> angle_monotone_matrix(const Drawing& d) {
  const int n = d.graph.n;
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, true));
  const auto fill = [&](const PlaneGraph& g, const auto& pts) {
    const auto pairs = detail::angle_monotone_pairs_impl(g, pts);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) m[u][v] = pairs[u].test(v);
    return VerifierReport::ok();
  };
  if (n > 1) detail::with_coords(d, fill);
  return m;
}

// Local greedy condition: toward every destination, every other vertex has a
// strictly closer neighbor (exact squared distances). Equivalent to the
// existence of a distance-decreasing path for every ordered pair.
inline VerifierReport check_greedy(const Drawing& d) {
  return detail::with_coords(
      d, [](const PlaneGraph& g, const auto& pts) { return detail::greedy_impl(g, pts); });
}

// Integer coordinates fitting a W x H grid (column/row counts as spans + 1).
inline VerifierReport check_grid(const Drawing& d, long long W, long long H) {
  for (std::size_t v = 0; v < d.coords.size(); ++v)
    if (!is_integer(d.coords[v].x) || !is_integer(d.coords[v].y))
      return VerifierReport::fail("non-integer coordinate at vertex " + std::to_string(v));
  if (d.width() > W)
    return VerifierReport::fail("width " + to_string(d.width()) + " exceeds " +
                                std::to_string(W));
  if (d.height() > H)
    return VerifierReport::fail("height " + to_string(d.height()) + " exceeds " +
                                std::to_string(H));
  return VerifierReport::ok();
}

// Brute-force reference: enumerate simple u-v paths, accept iff some path's
// direction set fits in a closed quarter-turn wedge. Small graphs only.
inline bool oracle_angle_monotone(const Drawing& d, int u, int v) {
  if (d.graph.n > 12) throw std::invalid_argument("oracle limited to n <= 12");
  if (u == v) return true;
  const auto& g = d.graph;
  const auto& pts = d.coords;

  std::vector<Point> dirs;
  auto fits = [&]() {
    for (const Point& low : dirs) {
      bool all = true;
      for (const Point& e : dirs)
        if (!geo::in_wedge(e, low)) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return dirs.empty();
  };

  std::vector<char> on_path(g.n, 0);
  on_path[u] = 1;
  auto dfs = [&](auto&& self, int at) -> bool {
    if (at == v) return true;
    for (int w : g.rotation[at]) {
      if (on_path[w]) continue;
      dirs.push_back(geo::sub(pts[w], pts[at]));
      on_path[w] = 1;
      const bool ok = fits() && self(self, w);
      on_path[w] = 0;
      dirs.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return dfs(dfs, u);
}

}  // namespace greedygrid
