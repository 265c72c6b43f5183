#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "greedygrid/plane_graph.hpp"

using namespace greedygrid;

namespace {

Point P(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

// K_4 drawn with vertex 3 inside the triangle 0,1,2.
PlaneGraph k4() {
  std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::vector<Point> pts = {P(0, 4), P(4, -4), P(-4, -4), P(0, -1)};
  return plane_graph_from_drawing(4, es, pts);
}

}  // namespace

TEST_CASE("face tracing satisfies Euler's formula") {
  const PlaneGraph g = k4();
  CHECK(g.n == 4);
  CHECK(g.edge_count() == 6);
  CHECK(faces(g).size() == 4);  // 6 - 4 + 2
  CHECK_NOTHROW(validate(g));
}

TEST_CASE("outer face is the clockwise facial walk") {
  const PlaneGraph g = k4();
  REQUIRE(g.outer_face.size() == 3);
  // outer walk hits exactly the hull vertices
  std::set<int> outer(g.outer_face.begin(), g.outer_face.end());
  CHECK(outer == std::set<int>{0, 1, 2});
  // traced clockwise: 0 -> 1 -> 2 with y up
  CHECK(cyclic_equal(g.outer_face, {0, 1, 2}));
}

TEST_CASE("every internal face of K4 contains the inner vertex") {
  const PlaneGraph g = k4();
  int with_inner = 0;
  for (const auto& f : faces(g))
    if (std::find(f.begin(), f.end(), 3) != f.end()) ++with_inner;
  CHECK(with_inner == 3);
}

TEST_CASE("rotation order around the inner vertex is clockwise") {
  const PlaneGraph g = k4();
  // neighbors of 3 at angles: 0 above, 1 lower-right, 2 lower-left;
  // clockwise from 0: 0, 1, 2
  CHECK(cyclic_equal(g.rotation[3], {0, 1, 2}));
}

TEST_CASE("cyclic_equal handles rotations but not reflections") {
  CHECK(cyclic_equal({1, 2, 3}, {2, 3, 1}));
  CHECK_FALSE(cyclic_equal({1, 2, 3}, {3, 2, 1}));
  CHECK_FALSE(cyclic_equal({1, 2}, {1, 2, 2}));
}

TEST_CASE("validate rejects malformed rotation systems") {
  PlaneGraph g;
  g.n = 2;
  g.rotation = {{1}, {}};  // asymmetric
  CHECK_THROWS_AS(validate(g), std::invalid_argument);

  g.rotation = {{1}, {0}};
  g.outer_face = {0, 1};
  CHECK_NOTHROW(validate(g));

  g.outer_face = {1, 1};
  CHECK_THROWS_AS(validate(g), std::invalid_argument);

  PlaneGraph disconnected;
  disconnected.n = 4;
  disconnected.rotation = {{1}, {0}, {3}, {2}};
  disconnected.outer_face = {0, 1};
  CHECK_THROWS_AS(validate(disconnected), std::invalid_argument);
}

TEST_CASE("a path graph has a single face") {
  std::vector<std::pair<int, int>> es = {{0, 1}, {1, 2}};
  std::vector<Point> pts = {P(0, 0), P(1, 0), P(2, 1)};
  const PlaneGraph g = plane_graph_from_drawing(3, es, pts);
  const auto fs = faces(g);
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].size() == 4);  // each edge traversed twice
  CHECK_NOTHROW(validate(g));
}
