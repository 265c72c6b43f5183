// Command-line surface: generate graphs, draw them, verify drawings, render
// SVG, audit nested-triangle areas, and simulate greedy routing.
// Exit codes: 0 success / all checks pass, 1 property failure, 2 input error.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "greedygrid/constructors.hpp"
#include "greedygrid/io.hpp"
#include "greedygrid/routing.hpp"
#include "greedygrid/schnyder.hpp"
#include "greedygrid/verify.hpp"

using namespace greedygrid;

namespace {

constexpr int kExitOk = 0, kExitFail = 1, kExitInput = 2;
const double kPi = std::acos(-1.0);

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ostream& open_out(std::ofstream& f, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  f.open(path);
  if (!f) throw InputError("cannot open output file " + path);
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open input file " + path);
  return f;
}

// Recover the Halin decomposition of a plane graph whose outer face is the
// leaf cycle.
HalinGraph halin_from_plane(const PlaneGraph& g) {
  HalinGraph h;
  h.underlying = g;
  h.leaf_cycle = g.outer_face;
  std::set<std::pair<int, int>> cycle_edges;
  const int k = static_cast<int>(g.outer_face.size());
  for (int i = 0; i < k; ++i)
    cycle_edges.insert(detail::ekey(g.outer_face[i], g.outer_face[(i + 1) % k]));
  for (auto [u, v] : g.edges())
    if (!cycle_edges.count({u, v})) h.tree_edges.insert({u, v});
  return h;
}

int cmd_generate(const std::string& family, int i, int m, int n, std::uint64_t seed,
                 const std::string& out_path) {
  PlaneGraph g;
  if (family == "cao") g = gen_cao(i, false).underlying;
  else if (family == "cao+") g = gen_cao(i, true).underlying;
  else if (family == "nested") g = gen_nested(m).underlying;
  else if (family == "glued") g = gen_glued(m);
  else if (family == "halin-random") g = gen_halin_random(n, seed).underlying;
  else throw InputError("unknown family " + family);
  std::ofstream f;
  write_graph(open_out(f, out_path), g);
  return kExitOk;
}

int cmd_draw(const std::string& graph_path, const std::string& algorithm, double alpha,
             const std::string& out_path) {
  std::ifstream in = open_in(graph_path);
  const PlaneGraph g = parse_graph(in);
  Drawing d;
  if (algorithm == "cao" || algorithm == "cao-convex") {
    if ((g.n - 4) % 3 != 0) throw InputError("vertex count does not match the family");
    const int i = (g.n - 4) / 3;
    const bool plus = g.outer_face.size() == 3;
    const CaoGraph cg = gen_cao(i, plus);
    if (cg.underlying.edges() != g.edges())
      throw InputError("graph does not match the generated family member");
    d = algorithm == "cao" ? draw_cao(cg) : draw_cao_convex(cg);
  } else if (algorithm == "halin") {
    d = draw_halin(halin_from_plane(g));
  } else if (algorithm == "witness") {
    if (g.n % 3 != 0) throw InputError("vertex count does not match the nested family");
    const int m = g.n / 3;
    if (gen_nested(m).underlying.edges() != g.edges())
      throw InputError("graph does not match the nested family");
    d = witness_drawing(m, alpha);
  } else {
    throw InputError("unknown algorithm " + algorithm);
  }
  std::ofstream f;
  write_drawing(open_out(f, out_path), d);
  return kExitOk;
}

int cmd_verify(const std::string& drawing_path, std::vector<std::string> checks,
               long long W, long long H) {
  std::ifstream in = open_in(drawing_path);
  const Drawing d = parse_drawing(in);
  if (checks.empty()) checks = {"planar", "convex", "angle-monotone", "greedy"};
  bool all_ok = true;
  for (const std::string& c : checks) {
    VerifierReport rep;
    if (c == "planar") rep = check_planar(d);
    else if (c == "convex") rep = check_convex(d);
    else if (c == "angle-monotone") rep = check_angle_monotone(d);
    else if (c == "greedy") rep = check_greedy(d);
    else if (c == "grid") rep = check_grid(d, W, H);
    else throw InputError("unknown check " + c);
    std::cout << c << ": " << (rep.verdict ? "pass" : "FAIL") << '\n';
    if (!rep.verdict) std::cout << "  " << rep.witness << '\n';
    all_ok = all_ok && rep.verdict;
  }
  return all_ok ? kExitOk : kExitFail;
}

int cmd_render(const std::string& drawing_path, const std::string& wood_path,
               double scale, bool no_labels, const std::string& out_path) {
  std::ifstream in = open_in(drawing_path);
  const Drawing d = parse_drawing(in);
  std::optional<SchnyderWood> wood;
  if (!wood_path.empty()) {
    std::ifstream win = open_in(wood_path);
    wood = parse_wood(win);
  }
  RenderSpec spec;
  spec.scale = scale;
  spec.labels = !no_labels;
  std::ofstream f;
  render_svg(open_out(f, out_path), d, spec, wood ? &*wood : nullptr);
  return kExitOk;
}

int cmd_audit(int m, double alpha) {
  if (!(alpha > 0 && alpha < kPi / 3)) throw InputError("alpha must be in (0, pi/3)");
  const NestedTriangulation g = gen_nested(m);
  const Drawing d = witness_drawing(m, alpha);
  const double eps = kPi / 3 - alpha;
  const AreaAudit audit = audit_area(d, g, eps);
  std::printf("k_eps = %.12f (eps = %.6f)\n", audit.k_eps, eps);
  for (std::size_t i = 0; i < audit.ratios.size(); ++i)
    std::printf("level %2zu: doubled area %.6e  ratio %.6f  %s\n", i + 2, audit.area2[i + 1],
                audit.ratios[i], audit.level_verdict[i] ? "ok" : "VIOLATION");
  if (audit.area2.size() >= 2)
    std::printf("compound: %.6e vs k^%d * %.6e -> %s\n", audit.area2.back(), m - 2,
                audit.area2.front(), audit.compound_ok ? "ok" : "VIOLATION");
  return audit.verdict ? kExitOk : kExitFail;
}

int cmd_route(const std::string& drawing_path, int u, int v, const std::string& policy_name,
              bool all_pairs) {
  std::ifstream in = open_in(drawing_path);
  const Drawing d = parse_drawing(in);
  Policy policy;
  if (policy_name == "best-neighbor") policy = Policy::BestNeighbor;
  else if (policy_name == "first-closer") policy = Policy::FirstCloser;
  else throw InputError("unknown policy " + policy_name);

  auto print_trace = [&](const RouteTrace& tr) {
    std::cout << tr.source << ' ' << tr.destination << ' '
              << (tr.delivered ? "delivered" : "stuck") << " hops";
    for (int h : tr.hops) std::cout << ' ' << h;
    std::cout << '\n';
  };
  if (all_pairs) {
    for (int s = 0; s < d.graph.n; ++s)
      for (int t = 0; t < d.graph.n; ++t)
        if (s != t) print_trace(route(d, s, t, policy));
    const RouteSummary sum = route_all(d, policy);
    std::printf("delivery_rate %.6f max_hops %d mean_hops %.4f\n", sum.delivery_rate,
                sum.max_hops, sum.mean_hops);
    return sum.delivery_rate == 1.0 ? kExitOk : kExitFail;
  }
  if (u < 0 || v < 0 || u >= d.graph.n || v >= d.graph.n)
    throw InputError("route endpoints out of range");
  const RouteTrace tr = route(d, u, v, policy);
  print_trace(tr);
  return tr.delivered ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid drawings, exact drawing verifiers, Schnyder-wood audits, "
               "and greedy-routing simulation"};
  app.require_subcommand(1);

  int i = 1, m = 2, n = 10, u = -1, v = -1;
  std::uint64_t seed = 1;
  double alpha = kPi / 6, scale = 40.0;
  long long W = 0, H = 0;
  std::string family, algorithm = "cao", graph_path, drawing_path, wood_path, out_path;
  std::string policy = "best-neighbor";
  std::vector<std::string> checks;
  bool no_labels = false, all_pairs = false;

  auto* gen = app.add_subcommand("generate", "write a graph file for a family member");
  gen->add_option("family", family, "cao|cao+|nested|glued|halin-random")->required();
  gen->add_option("--i", i, "construction index (cao families)");
  gen->add_option("--m", m, "nesting level (nested/glued)");
  gen->add_option("--n", n, "vertex count (halin-random)");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out_path, "output path (default stdout)");

  auto* draw = app.add_subcommand("draw", "compute a drawing of a graph file");
  draw->add_option("graph", graph_path, "input graph file")->required();
  draw->add_option("--algorithm", algorithm, "cao|cao-convex|halin|witness");
  draw->add_option("--alpha", alpha, "cone width for witness drawings (radians)");
  draw->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run drawing verifiers");
  verify->add_option("drawing", drawing_path, "input drawing file")->required();
  verify->add_option("--checks", checks,
                     "subset of planar,convex,angle-monotone,greedy,grid")
      ->delimiter(',');
  verify->add_option("--width", W, "grid bound for the grid check");
  verify->add_option("--height", H, "grid bound for the grid check");

  auto* render = app.add_subcommand("render", "render a drawing to SVG");
  render->add_option("drawing", drawing_path, "input drawing file")->required();
  render->add_option("--wood", wood_path, "optional wood file for edge colors");
  render->add_option("--scale", scale, "pixels per grid unit")
      ->check(CLI::PositiveNumber);
  render->add_flag("--no-labels", no_labels, "omit vertex labels");
  render->add_option("--out", out_path, "output path (default stdout)");

  auto* audit = app.add_subcommand("audit", "nested-triangle area audit");
  audit->add_option("--m", m, "nesting level")->required();
  audit->add_option("--alpha", alpha, "cone width in radians");

  auto* rt = app.add_subcommand("route", "greedy forwarding simulation");
  rt->add_option("drawing", drawing_path, "input drawing file")->required();
  rt->add_option("--u", u, "source vertex");
  rt->add_option("--v", v, "destination vertex");
  rt->add_option("--policy", policy, "best-neighbor|first-closer");
  rt->add_flag("--all", all_pairs, "trace every ordered pair");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(family, i, m, n, seed, out_path);
    if (draw->parsed()) return cmd_draw(graph_path, algorithm, alpha, out_path);
    if (verify->parsed()) return cmd_verify(drawing_path, checks, W, H);
    if (render->parsed()) return cmd_render(drawing_path, wood_path, scale, no_labels, out_path);
    if (audit->parsed()) return cmd_audit(m, alpha);
    if (rt->parsed()) return cmd_route(drawing_path, u, v, policy, all_pairs);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
