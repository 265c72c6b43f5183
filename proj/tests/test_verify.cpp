#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "greedygrid/constructors.hpp"
#include "greedygrid/verify.hpp"

using namespace greedygrid;

namespace {

Point P(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

// Adjacency-only drawing (no meaningful embedding), for the combinatorial
// verifiers and the oracle sweep.
Drawing adhoc(int n, const std::vector<std::pair<int, int>>& es, std::vector<Point> pts) {
  Drawing d;
  d.graph.n = n;
  d.graph.rotation.resize(n);
  for (auto [u, v] : es) {
    d.graph.rotation[u].push_back(v);
    d.graph.rotation[v].push_back(u);
  }
  d.coords = std::move(pts);
  return d;
}

// Random connected graph with distinct integer coordinates.
Drawing random_drawing(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v < n; ++v) es.emplace_back(static_cast<int>(rng() % v), v);
  const int extra = static_cast<int>(rng() % (n + 1));
  for (int k = 0; k < extra; ++k) {
    const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v) continue;
    bool dup = false;
    for (auto [a, b] : es) dup = dup || (a == std::min(u, v) && b == std::max(u, v));
    if (!dup) es.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::vector<Point> pts;
  std::set<std::pair<int, int>> used;
  while (static_cast<int>(pts.size()) < n) {
    const int x = static_cast<int>(rng() % 19) - 9, y = static_cast<int>(rng() % 19) - 9;
    if (used.insert({x, y}).second) pts.push_back(P(x, y));
  }
  return adhoc(n, es, std::move(pts));
}

}  // namespace

TEST_CASE("planarity: basic verdicts and witnesses") {
  // K4 with a vertex inside the triangle
  const Drawing k4 = adhoc(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                           {P(0, 4), P(4, -4), P(-4, -4), P(0, -1)});
  CHECK(check_planar(k4).verdict);

  // two-edge path bent so the edges overlap
  const Drawing bent = adhoc(3, {{0, 1}, {1, 2}}, {P(0, 0), P(4, 0), P(1, 0)});
  const auto rep = check_planar(bent);
  CHECK_FALSE(rep.verdict);
  CHECK_FALSE(rep.witness.empty());

  // proper crossing
  const Drawing cross = adhoc(4, {{0, 1}, {2, 3}}, {P(0, 0), P(2, 2), P(0, 2), P(2, 0)});
  CHECK_FALSE(check_planar(cross).verdict);

  // vertex sitting on a non-incident edge
  const Drawing touch = adhoc(3, {{0, 1}, {1, 2}}, {P(0, 0), P(4, 0), P(2, 0)});
  CHECK_FALSE(check_planar(touch).verdict);
}

TEST_CASE("convexity: squares pass, dents fail") {
  const Drawing sq =
      adhoc(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
  Drawing d = sq;
  d.graph = plane_graph_from_drawing(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, sq.coords);
  CHECK(check_convex(d).verdict);

  // pentagon with one reflex vertex
  const std::vector<std::pair<int, int>> pe = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  const std::vector<Point> pts = {P(0, 0), P(4, 0), P(4, 4), P(2, 1), P(0, 4)};
  Drawing dent;
  dent.graph = plane_graph_from_drawing(5, pe, pts);
  dent.coords = pts;
  const auto rep = check_convex(dent);
  CHECK_FALSE(rep.verdict);
  CHECK(rep.witness.find("3") != std::string::npos);

  // straight angles are fine
  const std::vector<std::pair<int, int>> tr = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const std::vector<Point> tp = {P(0, 0), P(2, 0), P(4, 0), P(2, 3)};
  Drawing flat;
  flat.graph = plane_graph_from_drawing(4, tr, tp);
  flat.coords = tp;
  CHECK(check_convex(flat).verdict);
}

TEST_CASE("angle monotonicity: path counterexample from the spec") {
  // directions (1,0) then (-1,1): the endpoint pair has no admissible wedge
  // in either direction, and the graph is a path, so the verdict is false
  const Drawing d = adhoc(3, {{0, 1}, {1, 2}}, {P(0, 0), P(3, 0), P(2, 1)});
  CHECK_FALSE(check_angle_monotone(d).verdict);
  CHECK_FALSE(oracle_angle_monotone(d, 0, 2));
  CHECK(oracle_angle_monotone(d, 0, 1));

  const Drawing edge = adhoc(2, {{0, 1}}, {P(0, 0), P(5, 7)});
  CHECK(check_angle_monotone(edge).verdict);
}

TEST_CASE("greediness: detour embedding fails with a witness pair") {
  // 0-1-2-3 drawn so that 1 is a local minimum for destination 3
  const Drawing d =
      adhoc(4, {{0, 1}, {1, 2}, {2, 3}}, {P(0, 0), P(1, 0), P(9, 0), P(2, 0)});
  const auto rep = check_greedy(d);
  CHECK_FALSE(rep.verdict);
  CHECK_FALSE(rep.witness.empty());

  const Drawing pair = adhoc(2, {{0, 1}}, {P(0, 0), P(1, 1)});
  CHECK(check_greedy(pair).verdict);
}

TEST_CASE("grid bounds") {
  const Drawing d = adhoc(2, {{0, 1}}, {P(0, 0), P(4, 2)});
  CHECK(check_grid(d, 5, 3).verdict);
  CHECK_FALSE(check_grid(d, 4, 3).verdict);
  CHECK_FALSE(check_grid(d, 5, 2).verdict);
  const Drawing half = adhoc(2, {{0, 1}}, {P(0, 0), Point{Rational(1) / 2, Rational(1)}});
  CHECK_FALSE(check_grid(half, 5, 5).verdict);
}

TEST_CASE("verifiers are translation invariant") {
  const CaoGraph g = gen_cao(3, false);
  const Drawing d = draw_cao(g);
  const Drawing t = d.translated(Rational(-17), Rational(23));
  CHECK(check_planar(t).verdict == check_planar(d).verdict);
  CHECK(check_angle_monotone(t).verdict == check_angle_monotone(d).verdict);
  CHECK(check_greedy(t).verdict == check_greedy(d).verdict);
  CHECK(check_convex(t).verdict == check_convex(d).verdict);
}

TEST_CASE("oracle guard rejects big graphs") {
  const Drawing d = draw_cao(gen_cao(4, false));  // 16 vertices
  CHECK_THROWS_AS(oracle_angle_monotone(d, 0, 1), std::invalid_argument);
}

TEST_CASE("candidate-wedge verifier agrees with the path-enumeration oracle") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Drawing d = random_drawing(rng, n);
    const auto fast = angle_monotone_matrix(d);
    bool all = true;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        CHECK(fast[u][v] == oracle_angle_monotone(d, u, v));
        all = all && fast[u][v];
      }
    CHECK(check_angle_monotone(d).verdict == all);
  }
}

TEST_CASE("angle-monotone implies greedy on constructed drawings") {
  for (int i : {1, 4, 9}) {
    const Drawing d = draw_cao_convex(gen_cao(i, false));
    REQUIRE(check_angle_monotone(d).verdict);
    CHECK(check_greedy(d).verdict);
  }
  const Drawing dh = draw_halin(gen_halin_random(36, 5));
  REQUIRE(check_angle_monotone(dh).verdict);
  CHECK(check_greedy(dh).verdict);
}
