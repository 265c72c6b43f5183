#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "greedygrid/cao.hpp"
#include "greedygrid/drawing.hpp"
#include "greedygrid/halin.hpp"

namespace greedygrid {

// Planar angle-monotone drawing of the Cao-Strelzoff-Sun graph on the
// (2i+3) x (2i+3) grid, x_0 at the origin.
inline Drawing draw_cao(const CaoGraph& g) {
  if (g.index < 1 || g.underlying.n != 3 * g.index + 4)
    throw std::invalid_argument("not a Cao graph");
  const auto ly = detail::cao_layout(g.index, g.plus);
  return Drawing{g.underlying, ly.coords};
}

// Convex variant: shift the last bottom-right path endpoint and the three
// outermost vertices so every reflex corner of the outer walk disappears.
inline Drawing draw_cao_convex(const CaoGraph& g) {
  if (g.index < 1 || g.underlying.n != 3 * g.index + 4)
    throw std::invalid_argument("not a Cao graph");
  auto ly = detail::cao_layout(g.index, g.plus);
  auto shift = [&](int v, int dx, int dy) {
    ly.coords[v].x += dx;
    ly.coords[v].y += dy;
  };
  shift(ly.path_downright[ly.path_downright.size() - 2], 1, -1);
  shift(ly.path_up.back(), -1, 0);
  shift(ly.path_downleft.back(), 1, 0);
  shift(ly.path_downright.back(), 1, 0);
  return Drawing{g.underlying, ly.coords};
}

namespace detail {

// Recursive tree layout: leaves of each subtree at (x0,0),(x0+2,0),...; the
// subtree root at (x0 + l - 1, l - 1) for l leaves. Returns the leaf count.
inline int layout_tree(const OrderedTree& t, int v, long long x0,
                       std::map<int, Point>& out) {
  if (t.is_leaf(v)) {
    out[v] = Point{Rational(x0), Rational(0)};
    return 1;
  }
  const auto& cs = t.children.at(v);
  if (cs.size() < 2)
    throw std::invalid_argument("internal tree vertex with < 2 children");
  int l = 0;
  for (int c : cs) l += layout_tree(t, c, x0 + 2 * l, out);
  out[v] = Point{Rational(x0 + l - 1), Rational(l - 1)};
  return l;
}

}  // namespace detail

// Lemma-style drawing of G[T]: the induced subgraph on an ordered subtree,
// leaves on the x-axis, leftmost/rightmost paths at slopes 5pi/4 and 7pi/4.
// host supplies the leaf-to-leaf edges. host_ids, if given, receives the
// host id of each local vertex.
inline Drawing draw_halin_tree(const OrderedTree& t, const PlaneGraph& host,
                               std::vector<int>* host_ids = nullptr) {
  std::map<int, Point> pos;
  detail::layout_tree(t, t.root, 0, pos);

  std::vector<int> verts = t.vertices();
  std::sort(verts.begin(), verts.end());
  std::map<int, int> local;
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edge_list;
  for (auto [u, v] : host.edges())
    if (local.count(u) && local.count(v)) edge_list.emplace_back(local[u], local[v]);

  std::vector<Point> coords(verts.size());
  for (int v : verts) coords[local[v]] = pos[v];
  if (host_ids) *host_ids = verts;
  return Drawing{plane_graph_from_drawing(static_cast<int>(verts.size()), edge_list, coords),
                 coords};
}

// Convex angle-monotone wheel layout on a 3 x (n-1) grid: rim corners lifted
// to y = 2, hub centered between.
inline Drawing draw_wheel(const HalinGraph& h) {
  const int n = h.underlying.n;
  const int k = static_cast<int>(h.leaf_cycle.size());
  if (k != n - 1) throw std::invalid_argument("not a wheel");
  int hub = -1;
  std::vector<char> on_rim(n, 0);
  for (int v : h.leaf_cycle) on_rim[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!on_rim[v]) hub = v;

  std::vector<Point> coords(n);
  for (int j = 0; j < k; ++j) {
    long long x, y;
    if (j == 0) {
      x = 0, y = 2;
    } else if (j == k - 1) {
      x = k - 1, y = 2;
    } else {
      x = j, y = 0;
    }
    coords[h.leaf_cycle[j]] = Point{Rational(x), Rational(y)};
  }
  coords[hub] = Point{Rational((k - 1) / 2), Rational(1)};
  return Drawing{h.underlying, coords};
}

// Theorem-style Halin assembly: draw G[T], draw G[S] rotated by pi above it
// with xi one unit above rho, close with the two leaf-cycle edges.
inline Drawing draw_halin(const HalinGraph& h) {
  int internal_count = 0;
  {
    std::vector<int> deg(h.underlying.n, 0);
    for (auto [u, v] : h.tree_edges) {
      ++deg[u];
      ++deg[v];
    }
    for (int v = 0; v < h.underlying.n; ++v)
      if (deg[v] >= 2) ++internal_count;
  }
  if (internal_count <= 1) return draw_wheel(h);

  HalinSplit sp = halin_split(h);

  // The two closing edges must run rightmost-T to first-S and last-S to
  // leftmost-T; mirror the star if the embedding handed us the other chirality.
  {
    const auto tl = sp.tree.leaves();
    const auto& sl = sp.star.children.at(sp.xi);
    const bool right_ok = h.underlying.has_edge(tl.back(), sl.front());
    const bool left_ok = h.underlying.has_edge(tl.front(), sl.back());
    if (!(right_ok && left_ok)) {
      auto& cs = sp.star.children.at(sp.xi);
      std::reverse(cs.begin(), cs.end());
      if (!h.underlying.has_edge(tl.back(), cs.front()) ||
          !h.underlying.has_edge(tl.front(), cs.back()))
        throw std::invalid_argument("leaf cycle inconsistent with split");
    }
  }

  std::map<int, Point> pos;
  detail::layout_tree(sp.tree, sp.rho, 0, pos);
  std::map<int, Point> spos;
  detail::layout_tree(sp.star, sp.xi, 0, spos);

  const Point rho_p = pos[sp.rho];
  const Point xi_p = spos[sp.xi];
  // rotate by pi, then translate xi to rho + (0,1)
  const Rational tx = rho_p.x + xi_p.x;
  const Rational ty = rho_p.y + 1 + xi_p.y;
  for (auto& [v, p] : spos) pos[v] = Point{tx - p.x, ty - p.y};

  std::vector<Point> coords(h.underlying.n);
  for (auto& [v, p] : pos) coords[v] = p;
  return Drawing{h.underlying, coords};
}

}  // namespace greedygrid
