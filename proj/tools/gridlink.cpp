#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "gridlink/solver.hpp"
#include "gridlink/svg.hpp"
#include "gridlink/torusfront.hpp"

using namespace gridlink;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

struct Options {
  std::string type = "II+";
  int max_vertices = 0;
  std::size_t max_states = 1000000;
  int parallel = 1;
  bool json = false;
  std::string cache;
  std::string output;
  std::string target;
  std::vector<std::string> files;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

GridDiagram load(const std::string& path) { return parse_diagram(slurp(path)); }

std::string omega_text(const Omega& w) {
  std::ostringstream s;
  s << '(' << w.k << ',' << w.l << ',' << w.m << ')';
  return s.str();
}

int exit_code(const Verdict& v) {
  if (std::holds_alternative<Equivalent>(v)) return kExitOk;
  if (std::holds_alternative<Inconclusive>(v)) return kExitInconclusive;
  return kExitDistinct;
}

void print_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_to_json(v) << '\n';
    return;
  }
  if (auto* e = std::get_if<Equivalent>(&v)) {
    std::cout << "equivalent (" << e->certificate.steps.size() << " moves)\n";
    for (const auto& m : e->certificate.steps) std::cout << "  " << describe(m) << '\n';
  } else if (auto* d = std::get_if<DistinctOmega>(&v)) {
    std::cout << "distinct-omega " << omega_text(d->first) << " vs " << omega_text(d->second) << '\n';
  } else if (auto* c = std::get_if<DistinctClosedGraph>(&v)) {
    std::cout << "distinct-closed-graph: " << c->states_explored << " states, grid size bound " << c->bound
              << " (conditional on the bound sufficing)\n";
  } else if (auto* i = std::get_if<Inconclusive>(&v)) {
    std::cout << "inconclusive: " << i->reason << " after " << i->states_explored << " states, grid size bound "
              << i->bound << '\n';
  }
}

const char* quadrant_name(Quadrant q) {
  static const char* names[] = {"NE", "NW", "SW", "SE"};
  return names[static_cast<int>(q)];
}

int run_validate(const Options& o) {
  const auto d = load(o.files[0]);
  if (o.json)
    std::cout << json{{"valid", true}, {"n", d.size()}, {"components", components(d).count}}.dump() << '\n';
  else
    std::cout << "valid n=" << d.size() << " components=" << components(d).count << '\n';
  return kExitOk;
}

int run_canon(const Options& o) {
  const auto d = load(o.files[0]);
  const auto [a, b] = canonical_rotation(d);
  const auto c = rotate(d, a, b);
  if (o.json)
    std::cout << json{{"code", canonical_code(d).hex()}, {"diagram", json::parse(to_json(c))}}.dump() << '\n';
  else
    std::cout << canonical_code(d).hex() << '\n' << to_grid_text(c);
  return kExitOk;
}

int run_omega(const Options& o, OrientedType t) {
  const auto w = omega(load(o.files[0]), t);
  if (o.json)
    std::cout << json{{"k", w.k}, {"l", w.l}, {"m", w.m}}.dump() << '\n';
  else
    std::cout << "k=" << w.k << " l=" << w.l << " m=" << w.m << '\n';
  return kExitOk;
}

// With two files, exit 0 iff the homology codes agree.
int run_homotype(const Options& o, OrientedType t) {
  std::vector<std::string> codes;
  for (const auto& f : o.files) codes.push_back(homology_code(load(f), t).hex());
  if (o.json)
    std::cout << json(codes).dump() << '\n';
  else
    for (const auto& c : codes) std::cout << c << '\n';
  return codes.size() == 2 && codes[0] != codes[1] ? kExitDistinct : kExitOk;
}

int run_moves(const Options& o, OrientedType t) {
  const auto d = load(o.files[0]);
  const auto ms = enumerate_moves(d, MoveSet::for_type(t));
  if (o.json) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(json::parse(move_to_json(m)));
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& m : ms) std::cout << describe(m) << '\n';
  }
  return kExitOk;
}

int run_decide(const Options& o, OrientedType t, bool brute) {
  const auto a = load(o.files[0]), b = load(o.files[1]);
  ExplorationConfig cfg;
  cfg.type = t;
  cfg.max_vertices = o.max_vertices;
  cfg.max_states = o.max_states;
  cfg.threads = o.parallel;
  cfg.cache_path = o.cache;
  const Verdict v = brute ? brute_bfs(a, b, t, o.max_vertices, o.max_states) : decide(a, b, cfg);
  print_verdict(v, o.json);
  return exit_code(v);
}

int run_front(const Options& o, OrientedType t) {
  const auto f = tl_front(load(o.files[0]), t);
  const auto fs = faces(f);
  const auto r3 = r3_sites(f);
  const auto ex = front_exchange_candidates(f);
  if (o.json) {
    json j;
    j["crossings"] = json::array();
    for (const auto& x : f.crossings) j["crossings"].push_back({x.col, x.row});
    j["faces"] = json::array();
    for (const auto& face : fs) {
      json corners = json::array();
      for (const auto& c : face.corners) corners.push_back({c.crossing, quadrant_name(c.quadrant)});
      j["faces"].push_back({{"boundary_cycles", face.boundary_cycles}, {"corners", corners}});
    }
    j["r3"] = json::array();
    for (const auto& m : r3) j["r3"].push_back({{"face", m.face}, {"apex", m.apex}});
    j["exchange"] = json::array();
    for (const auto& m : ex) j["exchange"].push_back({{"axis", m.axis == Axis::Col ? "col" : "row"}, {"line", m.line}});
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  std::cout << "crossings " << f.crossing_count() << ':';
  for (const auto& x : f.crossings) std::cout << " (" << x.col << ',' << x.row << ')';
  std::cout << "\nfaces " << fs.size() << '\n';
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::cout << "  " << i << (fs[i].is_disk() ? " disk" : " non-disk") << ':';
    for (const auto& c : fs[i].corners) std::cout << ' ' << c.crossing << quadrant_name(c.quadrant);
    std::cout << '\n';
  }
  std::cout << "r3 sites " << r3.size() << '\n';
  for (const auto& m : r3) std::cout << "  face " << m.face << " apex " << m.apex << '\n';
  std::cout << "exchange candidates " << ex.size() << '\n';
  for (const auto& m : ex) std::cout << "  " << (m.axis == Axis::Col ? "col " : "row ") << m.line << '\n';
  return kExitOk;
}

int run_render(const Options& o, OrientedType t) {
  RenderTarget target = RenderTarget::Diagram;
  if (o.target == "gamma") target = RenderTarget::Gamma;
  if (o.target == "front") target = RenderTarget::Front;
  RenderOptions opts;
  opts.type = t;
  const auto svg = render_svg(load(o.files[0]), target, opts);
  if (o.output.empty() || o.output == "-") {
    std::cout << svg;
  } else {
    std::ofstream out(o.output);
    if (!(out << svg)) throw Error(ErrorCode::SyntaxError, "cannot write " + o.output);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grid diagrams modulo exchange moves and one oriented stabilization type"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> types{"I+", "I-", "II+", "II-"};

  auto add = [&](const std::string& name, const std::string& help, int files) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--type", o.type, "oriented stabilization type")->check(CLI::IsMember(types));
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("files", o.files, "diagram files (JSON or grid text, - for stdin)")->required()->expected(files);
    return sub;
  };
  add("validate", "check a diagram", 1);
  add("canon", "canonical rotation and code", 1);
  add("omega", "(k, l, m) of the staircase curve", 1);
  add("homotype", "homology-type code; with two files, compare", -1)->get_option("files")->expected(1, 2);
  add("moves", "exchange and type-T moves available", 1);
  for (const auto* name : {"decide", "oracle"}) {
    auto* sub = add(name, std::string(name) == "decide" ? "decide equivalence with a certificate"
                                                          : "plain breadth-first search",
                    2);
    sub->add_option("--max-vertices", o.max_vertices, "grid size bound (default 2n+4)")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-states", o.max_states, "state budget")->check(CLI::PositiveNumber);
    if (std::string(name) == "decide") {
      sub->add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber);
      sub->add_option("--cache", o.cache, "append visited homology codes to FILE");
    }
  }
  add("front", "crossings, faces, R3 sites and exchange candidates", 1);
  auto* render = app.add_subcommand("render", "SVG picture");
  render->add_option("target", o.target, "diagram, gamma or front")
      ->required()
      ->check(CLI::IsMember({"diagram", "gamma", "front"}));
  render->add_option("file", o.files, "diagram file")->required()->expected(1);
  render->add_option("--type", o.type, "oriented stabilization type")->check(CLI::IsMember(types));
  render->add_option("-o", o.output, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto t = parse_type_tag(o.type);
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "validate") return run_validate(o);
    if (cmd == "canon") return run_canon(o);
    if (cmd == "omega") return run_omega(o, t);
    if (cmd == "homotype") return run_homotype(o, t);
    if (cmd == "moves") return run_moves(o, t);
    if (cmd == "decide") return run_decide(o, t, false);
    if (cmd == "oracle") return run_decide(o, t, true);
    if (cmd == "front") return run_front(o, t);
    return run_render(o, t);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
