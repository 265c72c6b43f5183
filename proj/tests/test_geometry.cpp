#include <catch2/catch_amalgamated.hpp>

#include "greedygrid/geometry.hpp"

using namespace greedygrid;

namespace {

Point P(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("orientation sign convention") {
  CHECK(geo::orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(geo::orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
  CHECK(geo::orient(P(0, 0), P(1, 1), P(3, 3)) == 0);
  CHECK(geo::orient(IPoint{0, 0}, IPoint{1, 0}, IPoint{0, 1}) == 1);
}

TEST_CASE("orientation is exact on large coordinates") {
  // doubles would round these two cases to the same sign
  const IPoint a{0, 0}, b{1LL << 40, (1LL << 40) + 1};
  CHECK(geo::orient(a, b, IPoint{2LL << 40, (2LL << 40) + 2}) == 0);
  CHECK(geo::orient(a, b, IPoint{2LL << 40, (2LL << 40) + 3}) == 1);
}

TEST_CASE("segment crossing cases") {
  // proper crossing
  CHECK(segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  // shared endpoint only
  CHECK_FALSE(segments_cross(P(0, 0), P(2, 2), P(2, 2), P(4, 0)));
  // endpoint in the interior of the other segment
  CHECK(segments_cross(P(0, 0), P(4, 0), P(2, 0), P(2, 2)));
  // vertex of one segment interior to a collinear other
  CHECK(segments_cross(P(0, 0), P(4, 0), P(1, 0), P(3, 0)));
  // collinear overlap sharing one endpoint
  CHECK(segments_cross(P(0, 0), P(4, 0), P(0, 0), P(2, 0)));
  // collinear, disjoint
  CHECK_FALSE(segments_cross(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
  // collinear, touching at a shared endpoint only
  CHECK_FALSE(segments_cross(P(0, 0), P(1, 0), P(1, 0), P(2, 0)));
  // far apart
  CHECK_FALSE(segments_cross(P(0, 0), P(1, 0), P(5, 5), P(6, 5)));
  CHECK_THROWS_AS(segments_cross(P(0, 0), P(0, 0), P(1, 0), P(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("polygon_area2 shoelace") {
  // unit square, counterclockwise: doubled area 2
  std::vector<Point> sq = {P(0, 0), P(1, 0), P(1, 1), P(0, 1)};
  CHECK(polygon_area2(sq) == 2);
  std::reverse(sq.begin(), sq.end());
  CHECK(polygon_area2(sq) == -2);
  // counterclockwise outer triangle of the nested family layout
  std::vector<Point> tri = {P(0, 3), P(-3, -3), P(3, -3)};
  CHECK(polygon_area2(tri) > 0);
}

TEST_CASE("closed quarter wedge membership") {
  const IPoint low{1, 0};  // wedge [0, pi/2]
  CHECK(geo::in_wedge(IPoint{1, 0}, low));   // low boundary included
  CHECK(geo::in_wedge(IPoint{0, 1}, low));   // high boundary included
  CHECK(geo::in_wedge(IPoint{3, 2}, low));
  CHECK_FALSE(geo::in_wedge(IPoint{1, -1}, low));
  CHECK_FALSE(geo::in_wedge(IPoint{-1, 1}, low));
  CHECK_FALSE(geo::in_wedge(IPoint{-1, 0}, low));  // antipode of the boundary
  CHECK_FALSE(geo::in_wedge(IPoint{0, -1}, low));
  // a tilted wedge
  const IPoint low2{1, 1};
  CHECK(geo::in_wedge(IPoint{0, 5}, low2));
  CHECK_FALSE(geo::in_wedge(IPoint{1, 0}, low2));
}

TEST_CASE("rational helpers") {
  CHECK(is_integer(Rational(7)));
  CHECK_FALSE(is_integer(Rational(7) / 2));
  CHECK(to_string(Rational(7) / 2) == "7/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(to_int64(Rational(42)).value() == 42);
  CHECK_FALSE(to_int64(Rational(1) / 3).has_value());
  // double -> rational conversion is exact for dyadic values
  CHECK(rational_from_double(0.375) == Rational(3) / 8);
  CHECK(to_double(rational_from_double(1.0 / 3)) == 1.0 / 3);
}
