#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "greedygrid/constructors.hpp"
#include "greedygrid/io.hpp"

using namespace greedygrid;

namespace {

template <class T, class W, class R>
void roundtrip_bit_exact(const T& value, W write, R parse) {
  std::ostringstream first;
  write(first, value);
  std::istringstream in(first.str());
  const T back = parse(in);
  std::ostringstream second;
  write(second, back);
  CHECK(first.str() == second.str());
}

}  // namespace

TEST_CASE("graph round-trip is bit-exact") {
  for (const PlaneGraph& g :
       {gen_cao(4, true).underlying, gen_halin_random(25, 3).underlying,
        gen_nested(5).underlying}) {
    roundtrip_bit_exact(
        g, [](std::ostream& o, const PlaneGraph& x) { write_graph(o, x); },
        [](std::istream& i) { return parse_graph(i); });
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    const PlaneGraph back = parse_graph(in);
    CHECK(back.rotation == g.rotation);
    CHECK(back.outer_face == g.outer_face);
  }
}

TEST_CASE("drawing round-trip preserves exact rational coordinates") {
  for (const Drawing& d : {draw_cao_convex(gen_cao(3, false)),
                           witness_drawing(3, std::acos(-1.0) / 6),
                           draw_halin(gen_halin_random(17, 11))}) {
    roundtrip_bit_exact(
        d, [](std::ostream& o, const Drawing& x) { write_drawing(o, x); },
        [](std::istream& i) { return parse_drawing(i); });
    std::ostringstream out;
    write_drawing(out, d);
    std::istringstream in(out.str());
    CHECK(parse_drawing(in).coords == d.coords);
  }
}

TEST_CASE("wood round-trip") {
  const SchnyderWood w = wood_of_nested(gen_nested(4));
  roundtrip_bit_exact(
      w, [](std::ostream& o, const SchnyderWood& x) { write_wood(o, x); },
      [](std::istream& i) { return parse_wood(i); });
  std::ostringstream out;
  write_wood(out, w);
  std::istringstream in(out.str());
  const SchnyderWood back = parse_wood(in);
  CHECK(back.arc == w.arc);
  CHECK(back.roots == w.roots);
}

TEST_CASE("malformed inputs raise ParseError") {
  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_drawing(in), ParseError);
  };
  reject("");
  reject("GRAPH");
  reject("GRAPH -3");
  reject("BOGUS 2");
  reject("GRAPH 2\n1 1\n1 0\nOUTER 2 0 1\nDRAWING 3\n");  // count mismatch
  reject("GRAPH 2\n1 1\n1 0\nOUTER 2 0 1\nDRAWING 2\n0 x y\n1 0 0\n");
  reject("GRAPH 2\n1 1\n1 0\nOUTER 2 0 1\nDRAWING 2\n0 0 0\n0 1 1\n");  // repeated id
  std::istringstream bad_graph("GRAPH 2\n1 1\n0\nOUTER 0");  // asymmetric
  CHECK_THROWS_AS(parse_graph(bad_graph), std::invalid_argument);
}

TEST_CASE("svg output has one element per vertex and edge") {
  const Drawing d = draw_cao(gen_cao(1, false));
  std::ostringstream out;
  render_svg(out, d, RenderSpec{});
  const std::string svg = out.str();
  auto count = [&](const std::string& needle) {
    std::size_t c = 0, at = 0;
    while ((at = svg.find(needle, at)) != std::string::npos) {
      ++c;
      at += needle.size();
    }
    return c;
  };
  CHECK(count("<line") == 9);
  CHECK(count("<circle") == 7);
  CHECK(count("<text") == 7);
  CHECK(svg.rfind("</svg>\n") != std::string::npos);
}

TEST_CASE("svg honours wood coloring") {
  const NestedTriangulation g = gen_nested(2);
  const SchnyderWood w = wood_of_nested(g);
  const Drawing d{g.underlying, detail::nested_coords(2)};
  std::ostringstream out;
  RenderSpec spec;
  spec.labels = false;
  render_svg(out, d, spec, &w);
  CHECK(out.str().find(spec.colors[0]) != std::string::npos);
  CHECK(out.str().find(spec.colors[2]) != std::string::npos);
}
