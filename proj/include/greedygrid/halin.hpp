#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "greedygrid/plane_graph.hpp"

namespace greedygrid {

// Rooted tree with explicit left-to-right child order; vertex ids refer to a
// host plane graph.
struct OrderedTree {
  int root = -1;
  std::map<int, std::vector<int>> children;

  bool is_leaf(int v) const {
    auto it = children.find(v);
    return it == children.end() || it->second.empty();
  }

  // Left-to-right leaf order.
  std::vector<int> leaves() const {
    std::vector<int> out, stack{root};
    collect(root, out);
    return out;
  }

  int leaf_count() const { return static_cast<int>(leaves().size()); }

  std::vector<int> leftmost_path(int v) const { return chain(v, /*last=*/false); }
  std::vector<int> rightmost_path(int v) const { return chain(v, /*last=*/true); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    collect_all(root, out);
    return out;
  }

 private:
  void collect(int v, std::vector<int>& out) const {
    if (is_leaf(v)) {
      out.push_back(v);
      return;
    }
    for (int c : children.at(v)) collect(c, out);
  }
  void collect_all(int v, std::vector<int>& out) const {
    out.push_back(v);
    if (!is_leaf(v))
      for (int c : children.at(v)) collect_all(c, out);
  }
  std::vector<int> chain(int v, bool last) const {
    std::vector<int> path{v};
    while (!is_leaf(path.back())) {
      const auto& cs = children.at(path.back());
      path.push_back(last ? cs.back() : cs.front());
    }
    return path;
  }
};

struct HalinGraph {
  PlaneGraph underlying;
  std::set<std::pair<int, int>> tree_edges;  // u < v
  std::vector<int> leaf_cycle;               // clockwise
};

struct IsWheelError : std::runtime_error {
  IsWheelError() : std::runtime_error("Halin tree has a single internal vertex (wheel)") {}
};

namespace detail {

inline std::pair<int, int> ekey(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace detail

inline bool cyclic_equal_as_sets(const FacialWalk& a, const std::vector<int>& b) {
  return a.size() == b.size() &&
         std::set<int>(a.begin(), a.end()) == std::set<int>(b.begin(), b.end());
}

// Builds the Halin graph of an ordered tree (dense ids, root internal with
// >= 3 children, every internal vertex >= 2 children): tree edges plus the
// cycle through the leaves in left-to-right order.
inline HalinGraph halin_from_tree(const OrderedTree& t, int n) {
  HalinGraph h;
  h.leaf_cycle = t.leaves();
  const int nl = static_cast<int>(h.leaf_cycle.size());
  if (nl < 3) throw std::invalid_argument("halin graph needs >= 3 leaves");

  std::vector<int> parent(n, -1);
  for (const auto& [v, cs] : t.children)
    for (int c : cs) parent[c] = v;

  std::vector<int> cyc_pos(n, -1);
  for (int i = 0; i < nl; ++i) cyc_pos[h.leaf_cycle[i]] = i;

  h.underlying.n = n;
  h.underlying.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    auto& rot = h.underlying.rotation[v];
    if (t.is_leaf(v)) {
      const int i = cyc_pos[v];
      const int prev = h.leaf_cycle[(i + nl - 1) % nl];
      const int next = h.leaf_cycle[(i + 1) % nl];
      rot = {parent[v], prev, next};
    } else {
      if (v != t.root) rot.push_back(parent[v]);
      const auto& cs = t.children.at(v);
      if (static_cast<int>(cs.size()) + (v == t.root ? 0 : 1) < 3)
        throw std::invalid_argument("internal tree vertex of degree < 3");
      rot.insert(rot.end(), cs.begin(), cs.end());
    }
  }
  for (int v = 0; v < n; ++v)
    if (parent[v] >= 0) h.tree_edges.insert(detail::ekey(v, parent[v]));

  // Outer face is the leaf cycle; orient it as traced by the rotation system.
  for (const auto& f : faces(h.underlying))
    if (cyclic_equal_as_sets(f, h.leaf_cycle)) {
      h.underlying.outer_face = f;
      break;
    }
  if (h.underlying.outer_face.empty())
    throw std::invalid_argument("leaf cycle is not a face; bad rotation convention");
  return h;
}

// Random Halin graph on exactly n >= 4 vertices, internal tree degrees >= 3.
inline HalinGraph gen_halin_random(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("halin graph needs >= 4 vertices");
  std::mt19937_64 rng(seed);
  OrderedTree t;
  t.root = 0;
  int count = 1;
  auto rand_int = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  const int k0 = std::min(n - 1, rand_int(3, 5));
  for (int j = 0; j < k0; ++j) t.children[0].push_back(count++);

  std::vector<int> leaf_pool(t.children[0]);
  while (count < n) {
    const int remaining = n - count;
    if (remaining == 1) {
      // A single extra child keeps internal degrees >= 3 wherever it lands.
      std::vector<int> internals;
      for (const auto& [v, cs] : t.children)
        if (!cs.empty()) internals.push_back(v);
      const int v = internals[rand_int(0, static_cast<int>(internals.size()) - 1)];
      auto& cs = t.children[v];
      cs.insert(cs.begin() + rand_int(0, static_cast<int>(cs.size())), count);
      leaf_pool.push_back(count++);
      continue;
    }
    const int li = rand_int(0, static_cast<int>(leaf_pool.size()) - 1);
    const int v = leaf_pool[li];
    leaf_pool.erase(leaf_pool.begin() + li);
    const int c = std::min(remaining, rand_int(2, 4));
    for (int j = 0; j < c; ++j) {
      t.children[v].push_back(count);
      leaf_pool.push_back(count++);
    }
  }
  return halin_from_tree(t, n);
}

struct HalinSplit {
  OrderedTree tree;  // T, rooted at rho
  OrderedTree star;  // S, rooted at xi
  int xi = -1;
  int rho = -1;
};

// Removes a deepest internal vertex xi (all neighbors leaves except rho) and
// its leaves; T is the rest rooted at rho, S the star at xi. Child orders are
// read clockwise from the rotation system, cut at the parent edge.
inline HalinSplit halin_split(const HalinGraph& h) {
  const int n = h.underlying.n;
  std::vector<char> is_leaf(n, 1);
  std::vector<std::vector<int>> tree_adj(n);
  for (auto [u, v] : h.tree_edges) {
    tree_adj[u].push_back(v);
    tree_adj[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) is_leaf[v] = tree_adj[v].size() <= 1;

  int internal_count = 0;
  for (int v = 0; v < n; ++v)
    if (!is_leaf[v]) ++internal_count;
  if (internal_count <= 1) throw IsWheelError{};

  std::vector<int> cyc_pos(n, -1);
  for (std::size_t i = 0; i < h.underlying.outer_face.size(); ++i)
    cyc_pos[h.underlying.outer_face[i]] = static_cast<int>(i);

  int xi = -1, best_start = -1;
  for (int v = 0; v < n; ++v) {
    if (is_leaf[v]) continue;
    int non_leaf = 0, start = n + 1;
    for (int w : tree_adj[v]) {
      if (is_leaf[w])
        start = std::min(start, cyc_pos[w]);
      else
        ++non_leaf;
    }
    if (non_leaf == 1 && (xi == -1 || start < best_start)) {
      xi = v;
      best_start = start;
    }
  }
  if (xi == -1) throw std::invalid_argument("no split vertex found; not a Halin tree");

  int rho = -1;
  for (int w : tree_adj[xi])
    if (!is_leaf[w]) rho = w;

  HalinSplit out;
  out.xi = xi;
  out.rho = rho;

  // Clockwise children after the cut edge.
  auto ordered_children = [&](int v, int cut) {
    const auto& rot = h.underlying.rotation[v];
    const auto it = std::find(rot.begin(), rot.end(), cut);
    std::vector<int> cs;
    const int deg = static_cast<int>(rot.size());
    const int start = static_cast<int>(it - rot.begin());
    for (int s = 1; s < deg; ++s) {
      const int w = rot[(start + s) % deg];
      if (h.tree_edges.count(detail::ekey(v, w))) cs.push_back(w);
    }
    return cs;
  };

  std::set<int> removed{xi};
  for (int w : tree_adj[xi])
    if (is_leaf[w]) removed.insert(w);

  out.tree.root = rho;
  std::vector<std::pair<int, int>> stack{{rho, xi}};  // (vertex, parent-or-cut)
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    auto cs = ordered_children(v, p);
    cs.erase(std::remove_if(cs.begin(), cs.end(),
                            [&](int w) { return removed.count(w) > 0; }),
             cs.end());
    out.tree.children[v] = cs;
    for (int c : cs)
      if (!is_leaf[c]) stack.push_back({c, v});
  }

  out.star.root = xi;
  out.star.children[xi] = ordered_children(xi, rho);
  return out;
}

}  // namespace greedygrid
