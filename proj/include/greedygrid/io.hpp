#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "greedygrid/drawing.hpp"
#include "greedygrid/schnyder.hpp"

namespace greedygrid {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string expect_token(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw ParseError(std::string("expected ") + what);
  return tok;
}

inline long long expect_int(std::istream& in, const char* what) {
  long long v;
  if (!(in >> v)) throw ParseError(std::string("expected integer ") + what);
  return v;
}

inline void expect_keyword(std::istream& in, const std::string& kw) {
  const std::string tok = expect_token(in, kw.c_str());
  if (tok != kw) throw ParseError("expected '" + kw + "', got '" + tok + "'");
}

inline Rational parse_rational(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

}  // namespace detail

// GRAPH n / one clockwise rotation line per vertex (degree then neighbors) /
// OUTER k walk.
inline void write_graph(std::ostream& out, const PlaneGraph& g) {
  out << "GRAPH " << g.n << "\n";
  for (int v = 0; v < g.n; ++v) {
    out << g.rotation[v].size();
    for (int w : g.rotation[v]) out << ' ' << w;
    out << "\n";
  }
  out << "OUTER " << g.outer_face.size();
  for (int v : g.outer_face) out << ' ' << v;
  out << "\n";
}

inline PlaneGraph parse_graph(std::istream& in) {
  detail::expect_keyword(in, "GRAPH");
  const long long n = detail::expect_int(in, "vertex count");
  if (n <= 0 || n > 1'000'000) throw ParseError("bad vertex count");
  PlaneGraph g;
  g.n = static_cast<int>(n);
  g.rotation.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    const long long deg = detail::expect_int(in, "degree");
    if (deg < 0 || deg >= n) throw ParseError("bad degree");
    for (long long i = 0; i < deg; ++i) {
      const long long w = detail::expect_int(in, "neighbor");
      if (w < 0 || w >= n || w == v) throw ParseError("bad neighbor id");
      g.rotation[v].push_back(static_cast<int>(w));
    }
  }
  detail::expect_keyword(in, "OUTER");
  const long long k = detail::expect_int(in, "outer walk length");
  if (k < 0 || k > 4 * n) throw ParseError("bad outer walk length");
  for (long long i = 0; i < k; ++i) {
    const long long w = detail::expect_int(in, "outer walk vertex");
    if (w < 0 || w >= n) throw ParseError("bad outer walk vertex");
    g.outer_face.push_back(static_cast<int>(w));
  }
  validate(g);
  return g;
}

// Graph block followed by DRAWING n and one "id x y" line per vertex,
// rationals rendered p/q (plain p when integral).
inline void write_drawing(std::ostream& out, const Drawing& d) {
  write_graph(out, d.graph);
  out << "DRAWING " << d.coords.size() << "\n";
  for (std::size_t v = 0; v < d.coords.size(); ++v)
    out << v << ' ' << to_string(d.coords[v].x) << ' ' << to_string(d.coords[v].y) << "\n";
}

inline Drawing parse_drawing(std::istream& in) {
  Drawing d;
  d.graph = parse_graph(in);
  detail::expect_keyword(in, "DRAWING");
  const long long n = detail::expect_int(in, "coordinate count");
  if (n != d.graph.n) throw ParseError("coordinate count does not match graph");
  d.coords.resize(d.graph.n);
  std::vector<char> seen(d.graph.n, 0);
  for (int i = 0; i < d.graph.n; ++i) {
    const long long id = detail::expect_int(in, "vertex id");
    if (id < 0 || id >= n || seen[id]) throw ParseError("bad or repeated vertex id");
    seen[id] = 1;
    d.coords[id].x = detail::parse_rational(detail::expect_token(in, "x coordinate"));
    d.coords[id].y = detail::parse_rational(detail::expect_token(in, "y coordinate"));
  }
  return d;
}

// WOOD r1 r2 r3 count, then one "tail head color" line per arc.
inline void write_wood(std::ostream& out, const SchnyderWood& w) {
  out << "WOOD " << w.roots[0] << ' ' << w.roots[1] << ' ' << w.roots[2] << ' '
      << w.arc.size() << "\n";
  for (const auto& [uv, c] : w.arc) out << uv.first << ' ' << uv.second << ' ' << c << "\n";
}

inline SchnyderWood parse_wood(std::istream& in) {
  detail::expect_keyword(in, "WOOD");
  SchnyderWood w;
  for (int i = 0; i < 3; ++i)
    w.roots[i] = static_cast<int>(detail::expect_int(in, "root id"));
  const long long count = detail::expect_int(in, "arc count");
  if (count < 0 || count > 10'000'000) throw ParseError("bad arc count");
  for (long long i = 0; i < count; ++i) {
    const int u = static_cast<int>(detail::expect_int(in, "arc tail"));
    const int v = static_cast<int>(detail::expect_int(in, "arc head"));
    const int c = static_cast<int>(detail::expect_int(in, "arc color"));
    if (c < 1 || c > 3) throw ParseError("bad arc color");
    if (!w.arc.emplace(std::make_pair(u, v), c).second)
      throw ParseError("duplicate arc");
  }
  return w;
}

struct RenderSpec {
  double scale = 40.0;  // pixels per grid unit
  bool labels = true;
  std::array<const char*, 3> colors = {"#d62728", "#2ca02c", "#1f77b4"};  // wood 1/2/3
};

// Standalone SVG, y axis flipped to screen coordinates; edges colored by the
// wood when one is supplied.
inline void render_svg(std::ostream& out, const Drawing& d, const RenderSpec& spec,
                       const SchnyderWood* wood = nullptr,
                       const std::vector<std::string>* labels = nullptr) {
  if (spec.scale <= 0) throw std::invalid_argument("render scale must be positive");
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (std::size_t v = 0; v < d.coords.size(); ++v) {
    const double x = to_double(d.coords[v].x), y = to_double(d.coords[v].y);
    if (v == 0 || x < minx) minx = x;
    if (v == 0 || x > maxx) maxx = x;
    if (v == 0 || y < miny) miny = y;
    if (v == 0 || y > maxy) maxy = y;
  }
  const double pad = 1.0;
  auto px = [&](double x) { return (x - minx + pad) * spec.scale; };
  auto py = [&](double y) { return (maxy - y + pad) * spec.scale; };
  const double w = (maxx - minx + 2 * pad) * spec.scale;
  const double h = (maxy - miny + 2 * pad) * spec.scale;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (auto [u, v] : d.graph.edges()) {
    const char* stroke = "#444444";
    if (wood) {
      int c = wood->color_of(u, v);
      if (!c) c = wood->color_of(v, u);
      if (c) stroke = spec.colors[c - 1];
    }
    out << "  <line x1=\"" << px(to_double(d.coords[u].x)) << "\" y1=\""
        << py(to_double(d.coords[u].y)) << "\" x2=\"" << px(to_double(d.coords[v].x))
        << "\" y2=\"" << py(to_double(d.coords[v].y)) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"2\"/>\n";
  }
  for (std::size_t v = 0; v < d.coords.size(); ++v) {
    const double x = px(to_double(d.coords[v].x)), y = py(to_double(d.coords[v].y));
    out << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"#111111\"/>\n";
    if (spec.labels) {
      const std::string text =
          labels && v < labels->size() ? (*labels)[v] : std::to_string(v);
      out << "  <text x=\"" << x + 7 << "\" y=\"" << y - 7
          << "\" font-size=\"13\" font-family=\"monospace\">" << text << "</text>\n";
    }
  }
  out << "</svg>\n";
}

}  // namespace greedygrid
