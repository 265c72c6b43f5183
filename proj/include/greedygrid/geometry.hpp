#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "greedygrid/rational.hpp"

namespace greedygrid {

struct Point {
  Rational x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Fast-path point for drawings whose coordinates fit in machine integers.
struct IPoint {
  std::int64_t x, y;
  bool operator==(const IPoint& o) const = default;
};

namespace geo {

inline int sgn(const Rational& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline int sgn(__int128 v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline __int128 cross(const IPoint& a, const IPoint& b) {
  return static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
}

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline __int128 dot(const IPoint& a, const IPoint& b) {
  return static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y;
}

template <class P>
P sub(const P& a, const P& b) {
  return P{a.x - b.x, a.y - b.y};
}

// Sign of cross(b-a, c-a): +1 left turn, 0 collinear, -1 right turn.
template <class P>
int orient(const P& a, const P& b, const P& c) {
  return sgn(cross(sub(b, a), sub(c, a)));
}

template <class P>
auto dist2(const P& a, const P& b) {
  auto d = sub(b, a);
  return dot(d, d);
}

// c on the closed segment [a,b]?
template <class P>
bool on_segment(const P& a, const P& b, const P& c) {
  if (orient(a, b, c) != 0) return false;
  return sgn(dot(sub(c, a), sub(c, b))) <= 0;
}

// True iff the segments share a point that is not a common declared endpoint.
// Proper crossings, collinear overlaps and endpoint-in-interior contacts all
// count; touching at a shared endpoint does not.
template <class P>
bool segments_cross(const P& p1, const P& p2, const P& q1, const P& q2) {
  if (p1 == p2 || q1 == q2) throw std::invalid_argument("degenerate segment");
  const int o1 = orient(p1, p2, q1);
  const int o2 = orient(p1, p2, q2);
  const int o3 = orient(q1, q2, p1);
  const int o4 = orient(q1, q2, p2);

  if (o1 != o2 && o3 != o4 && o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper

  const bool share11 = p1 == q1, share12 = p1 == q2;
  const bool share21 = p2 == q1, share22 = p2 == q2;

  // Endpoint lying on the other segment: only a shared endpoint is allowed.
  if (on_segment(p1, p2, q1) && !share11 && !share21) return true;
  if (on_segment(p1, p2, q2) && !share12 && !share22) return true;
  if (on_segment(q1, q2, p1) && !share11 && !share12) return true;
  if (on_segment(q1, q2, p2) && !share21 && !share22) return true;

  // Collinear segments sharing an endpoint may still overlap along a stretch.
  if (o1 == 0 && o2 == 0) {
    if (share11 && on_segment(p1, p2, q2) && !(q2 == p2)) return true;
    if (share12 && on_segment(p1, p2, q1) && !(q1 == p2)) return true;
    if (share21 && on_segment(p2, p1, q2) && !(q2 == p1)) return true;
    if (share22 && on_segment(p2, p1, q1) && !(q1 == p1)) return true;
  }
  return false;
}

// Twice the signed area of the polygon (positive for counterclockwise order).
template <class P>
auto polygon_area2(const std::vector<P>& pts) {
  if (pts.size() < 3) throw std::invalid_argument("polygon needs >= 3 points");
  decltype(cross(pts[0], pts[0])) acc{};
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const P& a = pts[i];
    const P& b = pts[(i + 1) % pts.size()];
    acc += cross(a, b);
  }
  return acc;
}

template <class P>
P rot90(const P& d) {
  return P{decltype(d.x)(-d.y), d.x};
}

// Closed quarter-turn wedge [low, rot90(low)], counterclockwise.
template <class P>
bool in_wedge(const P& e, const P& low) {
  return sgn(cross(low, e)) >= 0 && sgn(cross(e, rot90(low))) >= 0 &&
         sgn(dot(e, P{decltype(e.x)(low.x - low.y), decltype(e.x)(low.x + low.y)})) > 0;
}

}  // namespace geo

using geo::orient;
using geo::polygon_area2;
using geo::segments_cross;

}  // namespace greedygrid
