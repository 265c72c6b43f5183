#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "greedygrid/drawing.hpp"
#include "greedygrid/plane_graph.hpp"

namespace greedygrid {

// Cao-Strelzoff-Sun graph on 3i+4 vertices. Vertex ids: x_0 = 0, then per
// level j >= 1 the triple x_j, y_j, z_j at ids 3(j-1)+1 .. 3(j-1)+3.
struct CaoGraph {
  int index = 0;  // i >= 1
  bool plus = false;
  PlaneGraph underlying;
  std::vector<std::string> labels;  // "x0", "y3", ...
};

namespace detail {

inline int cao_id(char role, int level) {
  if (level == 0) return 0;
  return 3 * (level - 1) + 1 + (role == 'x' ? 0 : role == 'y' ? 1 : 2);
}

struct CaoLayout {
  std::vector<Point> coords;
  std::vector<std::pair<int, int>> edges;
  // Spanning paths from x_0 with uniform slopes pi/2, 5pi/4, 7pi/4.
  std::vector<int> path_up, path_downleft, path_downright;
};

// Inductive construction of the drawing. Each step reads the current path
// endpoints t (top), L (bottom-left), R (bottom-right) and attaches the three
// next-level vertices: the one whose same-name predecessor is R goes above t,
// the successor of t extends the 5pi/4 path, the successor of L the 7pi/4
// path. The attachment is forced by which hexagon edges exist at each level.
inline CaoLayout cao_layout(int i, bool plus) {
  if (i < 1) throw std::invalid_argument("cao index must be >= 1");
  CaoLayout ly;
  ly.coords.resize(3 * i + 4);
  auto put = [&](char role, int level, long long x, long long y) {
    ly.coords[cao_id(role, level)] = Point{Rational(x), Rational(y)};
  };
  put('x', 0, 0, 0);
  put('x', 1, 0, 1);
  put('y', 1, 1, -1);
  put('z', 1, -1, -1);
  put('x', 2, -2, -2);
  put('y', 2, 0, 2);
  put('z', 2, 2, -2);

  ly.path_up = {cao_id('x', 0), cao_id('x', 1), cao_id('y', 2)};
  ly.path_downleft = {cao_id('x', 0), cao_id('z', 1), cao_id('x', 2)};
  ly.path_downright = {cao_id('x', 0), cao_id('y', 1), cao_id('z', 2)};

  auto role_of = [](int id) { return id == 0 ? 'x' : "xyz"[(id - 1) % 3]; };
  for (int step = 2; step <= i; ++step) {
    const int t = ly.path_up.back();
    const int L = ly.path_downleft.back();
    const int R = ly.path_downright.back();
    const int n_top = cao_id(role_of(R), step + 1);
    const int n_left = cao_id(role_of(t), step + 1);
    const int n_right = cao_id(role_of(L), step + 1);
    ly.coords[n_top] = Point{ly.coords[t].x, ly.coords[t].y + 1};
    ly.coords[n_left] = Point{ly.coords[L].x - 1, ly.coords[L].y - 1};
    ly.coords[n_right] = Point{ly.coords[R].x + 1, ly.coords[R].y - 1};
    ly.path_up.push_back(n_top);
    ly.path_downleft.push_back(n_left);
    ly.path_downright.push_back(n_right);
  }

  for (char r : {'x', 'y', 'z'}) ly.edges.emplace_back(0, cao_id(r, 1));
  for (int j = 1; j <= i; ++j) {
    const std::array<int, 6> cyc = {cao_id('x', j + 1), cao_id('z', j),
                                    cao_id('y', j + 1), cao_id('x', j),
                                    cao_id('z', j + 1), cao_id('y', j)};
    for (int k = 0; k < 6; ++k) ly.edges.emplace_back(cyc[k], cyc[(k + 1) % 6]);
  }
  if (plus) {
    ly.edges.emplace_back(cao_id('x', i + 1), cao_id('y', i + 1));
    ly.edges.emplace_back(cao_id('y', i + 1), cao_id('z', i + 1));
    ly.edges.emplace_back(cao_id('z', i + 1), cao_id('x', i + 1));
  }
  return ly;
}

}  // namespace detail

inline CaoGraph gen_cao(int i, bool plus) {
  if (i < 1) throw std::invalid_argument("cao index must be >= 1");
  const auto ly = detail::cao_layout(i, plus);
  CaoGraph g;
  g.index = i;
  g.plus = plus;
  g.underlying = plane_graph_from_drawing(3 * i + 4, ly.edges, ly.coords);
  g.labels.resize(3 * i + 4);
  g.labels[0] = "x0";
  for (int j = 1; j <= i + 1; ++j)
    for (char r : {'x', 'y', 'z'})
      g.labels[detail::cao_id(r, j)] = std::string(1, r) + std::to_string(j);
  return g;
}

}  // namespace greedygrid
