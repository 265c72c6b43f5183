#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "greedygrid/plane_graph.hpp"

namespace greedygrid {

// Straight-line drawing: one exact point per vertex of a plane graph.
struct Drawing {
  PlaneGraph graph;
  std::vector<Point> coords;

  bool is_grid() const {
    for (const auto& p : coords)
      if (!is_integer(p.x) || !is_integer(p.y)) return false;
    return true;
  }

  // Number of grid columns intersecting the drawing (x-span + 1).
  Rational width() const { return span([](const Point& p) { return p.x; }) + 1; }
  Rational height() const { return span([](const Point& p) { return p.y; }) + 1; }

  Drawing translated(const Rational& dx, const Rational& dy) const {
    Drawing d = *this;
    for (auto& p : d.coords) {
      p.x += dx;
      p.y += dy;
    }
    return d;
  }

  // Shift so that all coordinates are nonnegative with the minimum at 0.
  Drawing normalized() const {
    if (coords.empty()) return *this;
    Rational mx = coords[0].x, my = coords[0].y;
    for (const auto& p : coords) {
      if (p.x < mx) mx = p.x;
      if (p.y < my) my = p.y;
    }
    return translated(-mx, -my);
  }

 private:
  template <class F>
  Rational span(F sel) const {
    if (coords.empty()) throw std::invalid_argument("empty drawing");
    Rational lo = sel(coords[0]), hi = lo;
    for (const auto& p : coords) {
      if (sel(p) < lo) lo = sel(p);
      if (sel(p) > hi) hi = sel(p);
    }
    return hi - lo;
  }
};

// Machine-integer view of a grid drawing, when every coordinate fits.
inline std::optional<std::vector<IPoint>> int_coords(const Drawing& d) {
  std::vector<IPoint> out;
  out.reserve(d.coords.size());
  for (const auto& p : d.coords) {
    auto x = to_int64(p.x), y = to_int64(p.y);
    constexpr std::int64_t limit = std::int64_t{1} << 40;
    if (!x || !y || *x >= limit || *x <= -limit || *y >= limit || *y <= -limit)
      return std::nullopt;
    out.push_back({*x, *y});
  }
  return out;
}

}  // namespace greedygrid
