#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "greedygrid/plane_graph.hpp"

namespace greedygrid {

// Plane 3-tree of nested triangles on 3m vertices. Vertex ids: level k has
// a_k, b_k, c_k at ids 3(k-1), 3(k-1)+1, 3(k-1)+2.
struct NestedTriangulation {
  int m = 0;
  PlaneGraph underlying;
  std::vector<std::string> labels;  // "a1", "b2", ...
};

namespace detail {

inline int nested_id(char role, int level) {
  return 3 * (level - 1) + (role == 'a' ? 0 : role == 'b' ? 1 : 2);
}

// Canonical layout: triangle k scaled by 3^k, apex up. Exponential nesting
// keeps every inter-level edge inside its annulus.
inline std::vector<Point> nested_coords(int m) {
  std::vector<Point> coords(3 * m);
  BigInt s = 1;
  for (int k = 1; k <= m; ++k) {
    s *= 3;
    coords[nested_id('a', k)] = Point{Rational(0), Rational(s)};
    coords[nested_id('b', k)] = Point{Rational(s), Rational(-s)};
    coords[nested_id('c', k)] = Point{Rational(-s), Rational(-s)};
  }
  return coords;
}

inline std::vector<std::pair<int, int>> nested_edges(int m) {
  std::vector<std::pair<int, int>> es;
  for (int k = 1; k <= m; ++k) {
    es.emplace_back(nested_id('a', k), nested_id('b', k));
    es.emplace_back(nested_id('b', k), nested_id('c', k));
    es.emplace_back(nested_id('c', k), nested_id('a', k));
    if (k > 1) {
      es.emplace_back(nested_id('a', k), nested_id('a', k - 1));
      es.emplace_back(nested_id('b', k), nested_id('a', k - 1));
      es.emplace_back(nested_id('b', k), nested_id('b', k - 1));
      es.emplace_back(nested_id('c', k), nested_id('a', k - 1));
      es.emplace_back(nested_id('c', k), nested_id('b', k - 1));
      es.emplace_back(nested_id('c', k), nested_id('c', k - 1));
    }
  }
  return es;
}

}  // namespace detail

inline NestedTriangulation gen_nested(int m) {
  if (m < 1) throw std::invalid_argument("nested level must be >= 1");
  NestedTriangulation g;
  g.m = m;
  g.underlying = plane_graph_from_drawing(3 * m, detail::nested_edges(m),
                                          detail::nested_coords(m));
  g.labels.resize(3 * m);
  for (int k = 1; k <= m; ++k)
    for (char r : {'a', 'b', 'c'})
      g.labels[detail::nested_id(r, k)] = std::string(1, r) + std::to_string(k);
  return g;
}

// F_n on n = 6m-2 vertices: K_4 with a copy of G_m glued into each of two
// internal faces, outer triangles identified with the face triangles. For
// m = 1 both copies collapse onto the faces and the result is K_4 itself.
inline PlaneGraph gen_glued(int m) {
  if (m < 1) throw std::invalid_argument("glued level must be >= 1");
  const int n = 6 * m - 2;
  std::vector<Point> coords(n);
  std::vector<std::pair<int, int>> edge_list;

  // K_4: 0,1,2 outer, 3 inside.
  coords[0] = Point{Rational(0), Rational(12)};
  coords[1] = Point{Rational(12), Rational(-12)};
  coords[2] = Point{Rational(-12), Rational(-12)};
  coords[3] = Point{Rational(0), Rational(-4)};
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) edge_list.emplace_back(u, v);

  const auto inner_coords = detail::nested_coords(m);
  const auto inner_edges = detail::nested_edges(m);
  const Point src_a = inner_coords[detail::nested_id('a', m)];
  const Point src_b = inner_coords[detail::nested_id('b', m)];
  const Point src_c = inner_coords[detail::nested_id('c', m)];

  // Glue one copy per face, orientation-preserving affine map of the outer
  // triangle onto the face triangle.
  const int faces_abc[2][3] = {{0, 1, 3}, {1, 2, 3}};
  for (int copy = 0; copy < 2; ++copy) {
    const int base = 4 + copy * 3 * (m - 1);
    const Point dst_a = coords[faces_abc[copy][0]];
    const Point dst_b = coords[faces_abc[copy][1]];
    const Point dst_c = coords[faces_abc[copy][2]];
    const Point u = geo::sub(src_b, src_a), v = geo::sub(src_c, src_a);
    const Point U = geo::sub(dst_b, dst_a), V = geo::sub(dst_c, dst_a);
    const Rational det = geo::cross(u, v);
    auto map = [&](const Point& p) {
      const Point d = geo::sub(p, src_a);
      const Rational s = geo::cross(d, v) / det;  // coordinate along u
      const Rational t = geo::cross(u, d) / det;  // coordinate along v
      return Point{dst_a.x + s * U.x + t * V.x, dst_a.y + s * U.y + t * V.y};
    };
    auto global_id = [&](int local) {
      if (local >= 3 * (m - 1)) {  // outermost triple -> K_4 vertices
        const int r = local - 3 * (m - 1);
        return faces_abc[copy][r];
      }
      return base + local;
    };
    for (int local = 0; local < 3 * (m - 1); ++local)
      coords[base + local] = map(inner_coords[local]);
    for (auto [a, b] : inner_edges) {
      const int ga = global_id(a), gb = global_id(b);
      if (ga < 4 && gb < 4) continue;  // identified outer-triangle edge
      edge_list.emplace_back(ga, gb);
    }
  }
  return plane_graph_from_drawing(n, edge_list, coords);
}

}  // namespace greedygrid
