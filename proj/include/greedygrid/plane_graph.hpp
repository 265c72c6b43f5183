#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greedygrid/geometry.hpp"

namespace greedygrid {

// Combinatorial plane graph: a rotation system (clockwise neighbor order per
// vertex) plus a designated outer facial walk. Vertex ids are dense integers.
struct PlaneGraph {
  int n = 0;
  std::vector<std::vector<int>> rotation;  // clockwise
  std::vector<int> outer_face;             // facial walk, as traced by faces()

  int edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& r : rotation) deg_sum += r.size();
    return static_cast<int>(deg_sum / 2);
  }

  bool has_edge(int u, int v) const {
    const auto& r = rotation[u];
    return std::find(r.begin(), r.end(), v) != r.end();
  }

  // Undirected edge list, u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
      for (int v : rotation[u])
        if (u < v) es.emplace_back(u, v);
    return es;
  }
};

using FacialWalk = std::vector<int>;

// Traces every face of the rotation system. Successor rule: after arriving at
// v along (u,v), leave along the neighbor following u in clockwise order at v.
// Internal faces come out counterclockwise for a drawing with y up.
inline std::vector<FacialWalk> faces(const PlaneGraph& g) {
  std::map<std::pair<int, int>, int> pos;  // (u,v) -> index of v in rotation[u]
  for (int u = 0; u < g.n; ++u)
    for (std::size_t i = 0; i < g.rotation[u].size(); ++i) {
      auto ins = pos.emplace(std::make_pair(u, g.rotation[u][i]), static_cast<int>(i));
      if (!ins.second) throw std::invalid_argument("parallel edge in rotation system");
    }

  std::set<std::pair<int, int>> used;
  std::vector<FacialWalk> result;
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.rotation[u]) {
      if (used.count({u, v})) continue;
      FacialWalk walk;
      int a = u, b = v;
      do {
        walk.push_back(a);
        used.insert({a, b});
        auto it = pos.find({b, a});
        if (it == pos.end()) throw std::invalid_argument("asymmetric rotation system");
        const auto& rot_b = g.rotation[b];
        int next = rot_b[(it->second + 1) % rot_b.size()];
        a = b;
        b = next;
      } while (!(a == u && b == v));
      result.push_back(std::move(walk));
    }
  }
  return result;
}

inline bool cyclic_equal(const FacialWalk& a, const FacialWalk& b) {
  if (a.size() != b.size()) return false;
  const std::size_t k = a.size();
  for (std::size_t s = 0; s < k; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = a[i] == b[(s + i) % k];
    if (ok) return true;
  }
  return false;
}

// Structural validation: symmetric simple connected rotation system, Euler
// face count, and outer_face matching a traced facial walk.
inline void validate(const PlaneGraph& g) {
  if (g.n <= 0) throw std::invalid_argument("empty graph");
  if (static_cast<int>(g.rotation.size()) != g.n)
    throw std::invalid_argument("rotation size mismatch");
  for (int u = 0; u < g.n; ++u) {
    std::set<int> seen;
    for (int v : g.rotation[u]) {
      if (v < 0 || v >= g.n || v == u) throw std::invalid_argument("bad neighbor id");
      if (!seen.insert(v).second) throw std::invalid_argument("parallel edge");
      if (!g.has_edge(v, u)) throw std::invalid_argument("asymmetric adjacency");
    }
  }
  // connectivity
  std::vector<char> vis(g.n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.rotation[u])
      if (!vis[v]) {
        vis[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  if (reached != g.n) throw std::invalid_argument("graph not connected");

  const auto fs = faces(g);
  const int euler_faces = g.edge_count() - g.n + 2;
  if (static_cast<int>(fs.size()) != euler_faces)
    throw std::invalid_argument("face count violates Euler's formula (not planar?)");

  bool outer_found = false;
  for (const auto& f : fs)
    if (cyclic_equal(f, g.outer_face)) outer_found = true;
  if (!outer_found) throw std::invalid_argument("outer_face is not a facial walk");
}

namespace detail {

// Counterclockwise angular comparator around the origin, exact.
inline bool ccw_angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return geo::sgn(geo::cross(a, b)) > 0;
}

}  // namespace detail

// Builds the plane graph induced by a crossing-free straight-line drawing:
// clockwise rotations by exact angular sort, outer face as the unique
// clockwise facial walk.
inline PlaneGraph plane_graph_from_drawing(int n,
                                           const std::vector<std::pair<int, int>>& edge_list,
                                           const std::vector<Point>& coords) {
  PlaneGraph g;
  g.n = n;
  g.rotation.resize(n);
  for (auto [u, v] : edge_list) {
    g.rotation[u].push_back(v);
    g.rotation[v].push_back(u);
  }
  for (int u = 0; u < n; ++u) {
    std::sort(g.rotation[u].begin(), g.rotation[u].end(), [&](int a, int b) {
      return detail::ccw_angle_less(geo::sub(coords[a], coords[u]),
                                    geo::sub(coords[b], coords[u]));
    });
    std::reverse(g.rotation[u].begin(), g.rotation[u].end());  // clockwise
  }
  // The outer face traces clockwise (negative area); a tree has a single
  // zero-area walk, which is likewise the outer face.
  bool first = true;
  Rational best;
  for (const auto& f : faces(g)) {
    std::vector<Point> poly;
    poly.reserve(f.size());
    for (int v : f) poly.push_back(coords[v]);
    const Rational a = polygon_area2(poly);
    if (first || a < best) {
      best = a;
      g.outer_face = f;
      first = false;
    }
  }
  if (first || best > 0)
    throw std::invalid_argument("no clockwise face found; drawing not planar?");
  return g;
}

}  // namespace greedygrid
