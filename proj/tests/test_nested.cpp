#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "greedygrid/nested.hpp"
#include "greedygrid/verify.hpp"

using namespace greedygrid;

TEST_CASE("nested family sizes and structure") {
  for (int m : {1, 2, 4, 8}) {
    const NestedTriangulation g = gen_nested(m);
    CHECK(g.underlying.n == 3 * m);
    CHECK_NOTHROW(validate(g.underlying));
    // a triangulation on n vertices has 3n - 6 edges
    if (m >= 2) CHECK(g.underlying.edge_count() == 3 * (3 * m) - 6);
  }
  CHECK_THROWS_AS(gen_nested(0), std::invalid_argument);
}

TEST_CASE("all inner faces are triangles") {
  const NestedTriangulation g = gen_nested(4);
  for (const auto& f : faces(g.underlying)) CHECK(f.size() == 3);
}

TEST_CASE("outer face is the outermost triangle") {
  const NestedTriangulation g = gen_nested(5);
  std::set<int> outer(g.underlying.outer_face.begin(), g.underlying.outer_face.end());
  CHECK(outer == std::set<int>{detail::nested_id('a', 5), detail::nested_id('b', 5),
                               detail::nested_id('c', 5)});
}

TEST_CASE("canonical nested layout is a planar drawing") {
  const NestedTriangulation g = gen_nested(6);
  const Drawing d{g.underlying, detail::nested_coords(6)};
  CHECK(check_planar(d).verdict);
}

TEST_CASE("labels follow the level naming") {
  const NestedTriangulation g = gen_nested(3);
  CHECK(g.labels[detail::nested_id('a', 1)] == "a1");
  CHECK(g.labels[detail::nested_id('c', 3)] == "c3");
}

TEST_CASE("glued family: K4 base case and vertex counts") {
  const PlaneGraph f1 = gen_glued(1);
  CHECK(f1.n == 4);
  CHECK(f1.edge_count() == 6);
  CHECK_NOTHROW(validate(f1));

  for (int m : {2, 3, 5}) {
    const PlaneGraph fn = gen_glued(m);
    CHECK(fn.n == 6 * m - 2);
    CHECK_NOTHROW(validate(fn));
    // triangulation again: every face a triangle
    for (const auto& f : faces(fn)) CHECK(f.size() == 3);
    CHECK(fn.edge_count() == 3 * fn.n - 6);
  }
}
