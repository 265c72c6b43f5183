#pragma once

#include <string>
#include <vector>

#include "greedygrid/drawing.hpp"

namespace greedygrid {

enum class Policy { BestNeighbor, FirstCloser };

struct RouteTrace {
  int source = -1, destination = -1;
  std::vector<int> hops;  // source ... last vertex reached
  bool delivered = false;
  int stuck_at = -1;  // valid iff !delivered
};

namespace detail {

template <class P>
RouteTrace route_impl(const PlaneGraph& g, const std::vector<P>& pts, int u, int v,
                      Policy policy) {
  RouteTrace tr;
  tr.source = u;
  tr.destination = v;
  tr.hops.push_back(u);
  int at = u;
  while (at != v) {
    auto best = geo::dist2(pts[at], pts[v]);
    int next = -1;
    for (int w : g.rotation[at]) {
      const auto dw = geo::dist2(pts[w], pts[v]);
      if (dw < best || (next != -1 && dw == best && w < next)) {
        best = dw;
        next = w;
        if (policy == Policy::FirstCloser) break;
      }
    }
    if (next == -1) {
      tr.stuck_at = at;
      return tr;
    }
    tr.hops.push_back(next);
    at = next;
  }
  tr.delivered = true;
  return tr;
}

}  // namespace detail

// Greedy forwarding: repeatedly hand the packet to a strictly closer neighbor
// (best-neighbor: closest, lowest id on ties; first-closer: first such in
// clockwise rotation order) until delivery or a local minimum.
inline RouteTrace route(const Drawing& d, int u, int v, Policy policy) {
  if (u < 0 || u >= d.graph.n || v < 0 || v >= d.graph.n)
    throw std::invalid_argument("route endpoints out of range");
  if (auto ic = int_coords(d)) return detail::route_impl(d.graph, *ic, u, v, policy);
  return detail::route_impl(d.graph, d.coords, u, v, policy);
}

struct RouteSummary {
  double delivery_rate = 1.0;  // delivered pairs / ordered pairs (1.0 if n < 2)
  int max_hops = 0;
  double mean_hops = 0.0;
  int first_stuck_source = -1, first_stuck_dest = -1;
};

inline RouteSummary route_all(const Drawing& d, Policy policy) {
  RouteSummary s;
  const int n = d.graph.n;
  if (n < 2) return s;
  long long delivered = 0, pairs = 0, hop_sum = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      ++pairs;
      const auto tr = route(d, u, v, policy);
      if (tr.delivered) {
        ++delivered;
        const int h = static_cast<int>(tr.hops.size()) - 1;
        hop_sum += h;
        s.max_hops = std::max(s.max_hops, h);
      } else if (s.first_stuck_source == -1) {
        s.first_stuck_source = u;
        s.first_stuck_dest = v;
      }
    }
  s.delivery_rate = static_cast<double>(delivered) / static_cast<double>(pairs);
  s.mean_hops = delivered ? static_cast<double>(hop_sum) / static_cast<double>(delivered) : 0.0;
  return s;
}

}  // namespace greedygrid
