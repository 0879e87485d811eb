#include "frobgraph/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "frobgraph/examples.hpp"
#include "frobgraph/io.hpp"
#include "frobgraph/tqft.hpp"

namespace frobgraph {

namespace {

namespace fs = std::filesystem;

struct Options {
  int c = 1;
  int d = 0;
  std::string flavor;
  unsigned seed = 0;
  std::string format = "text";
  std::string out;
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

// A graph from a JSON file (bare, a catalogue entry or an orientation), a
// catalogue name or an elementary name.
Graph load_graph(const std::string& arg, bool check = true) {
  Graph g;
  if (fs::is_regular_file(arg)) {
    Json j = read_json_file(arg);
    g = graph_from_json(j.contains("graph") ? j.at("graph") : j);
  } else if (fs::is_regular_file(default_catalogue_dir() + "/" + arg + ".json")) {
    g = graph_from_json(read_json_file(default_catalogue_dir() + "/" + arg + ".json").at("graph"));
  } else {
    try {
      g = elementary(elementary_from_name(arg));
    } catch (const Error&) {
      bad("'" + arg + "' is neither a file, a catalogue graph nor an elementary graph");
    }
  }
  if (check) {
    auto r = validate(g);
    if (!r.ok()) bad("invalid graph '" + arg + "': " + r.problems.front());
  }
  return g;
}

// The generator orientation for elementary graphs, else canonical words.
CdOrientation default_orientation(const Graph& g, int c, int d) {
  for (Elementary e : {Elementary::Multi, Elementary::Unit, Elementary::Comulti, Elementary::Counit, Elementary::Id,
                       Elementary::Twist})
    if (g == elementary(e)) return generator_orientation(e, c, d);
  return cd_from_words(g, c, d, canonical_word(g, Side::In), canonical_word(g, Side::Out));
}

CdOrientation load_orientation(const std::string& path) { return orientation_from_json(read_json_file(path)); }

// A JSON algebra file, R (builtin R_{c,d}), S<n>, T2 or unit.
FrobeniusData load_algebra(const std::string& arg, const Options& o) {
  if (fs::is_regular_file(arg)) {
    FrobeniusData f = algebra_from_json(read_json_file(arg));
    check_shapes(f);
    return f;
  }
  if (arg == "R" || arg == "Rcd") return builtin_Rcd(o.c, o.d);
  if (arg == "T2") return cohomology_algebra(torus_presentation());
  if (arg == "unit") return unit_algebra();
  if (arg.size() > 1 && arg[0] == 'S') {
    try {
      return cohomology_algebra(sphere_presentation(std::stoi(arg.substr(1))));
    } catch (const std::logic_error&) {
    }
  }
  if (fs::path(arg).extension() == ".json") bad("cannot open '" + arg + "'");
  throw Error(ErrorKind::UnknownName, "unknown algebra '" + arg + "'");
}

std::string render_text(const Json& j, int indent = 0) {
  std::ostringstream os;
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n" << render_text(v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured())
        os << pad << "-\n" << render_text(v, indent + 2);
      else
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
  return os.str();
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  // text overrides the generic rendering of j in text mode.
  void emit(const Json& j, const std::string& text = "") {
    std::string body = o_.format == "json" ? j.dump(2) + "\n" : (text.empty() ? render_text(j) : text);
    if (o_.out.empty())
      out_ << body;
    else
      write_text_file(o_.out, body);
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

Flavor flavor_or(const Options& o, Flavor fallback) {
  return o.flavor.empty() ? fallback : flavor_from_name(o.flavor);
}

CdOrientation padded(const CdOrientation& w, int before, int after) {
  CdOrientation out = cd_tensor(identity_orientation(before, w.c, w.d), w);
  return cd_tensor(out, identity_orientation(after, w.c, w.d));
}

// left glued into right: the outputs of left feed the inputs of right from
// position port on, with identity strands elsewhere.
CdOrientation compose_at(const Graph& left, const Graph& right, int port, int c, int d) {
  int n_out = static_cast<int>(left.out.size());
  int rest = static_cast<int>(right.in.size()) - port - n_out;
  if (port < 0 || rest < 0)
    throw Error(ErrorKind::GluabilityFailure, "port " + std::to_string(port) + " does not fit " +
                                                  std::to_string(n_out) + " strands into " +
                                                  std::to_string(right.in.size()) + " inputs");
  return cd_compose(default_orientation(right, c, d), padded(default_orientation(left, c, d), port, rest));
}

Json orbit_json(const OrbitClass& oc) {
  const char* kind = oc.kind == OrbitClass::Kind::Free ? "free"
                     : oc.kind == OrbitClass::Kind::TwoTorsion ? "two-torsion"
                                                               : "unknown";
  return Json{{"kind", kind}, {"witness", oc.witness}};
}

GraphIso iso_from_json(const Json& j) {
  GraphIso iso;
  iso.vertex = j.at("vertex").get<std::map<std::string, std::string>>();
  iso.half = j.at("half").get<std::map<std::string, std::string>>();
  return iso;
}

int run(CLI::App& app, const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--c", o.c, "in-twist c (default 1)");
  app.add_option("--d", o.d, "out-twist d (default 0)");
  app.add_option("--flavor", o.flavor, "planar, symmetric or commutative")
      ->check(CLI::IsMember({"planar", "symmetric", "commutative"}));
  app.add_option("--seed", o.seed, "decomposition seed (default 0)");
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "write the report to a file");

  std::string graph, algebra, algebra2, left, right, half, edge, iso_path, orient_path, conv = "graded", what;
  std::string sign_kind;
  int port = 0, times = 1;
  bool inverse = false;

  auto* validate_cmd = app.add_subcommand("validate", "check every graph invariant");
  validate_cmd->add_option("graph", graph)->required();

  auto* sign_cmd = app.add_subcommand("sign", "sign of a composition, collapse or automorphism");
  sign_cmd->add_option("kind", sign_kind)->required()->check(CLI::IsMember({"compose", "collapse", "automorphism"}));
  sign_cmd->add_option("graph", graph);
  sign_cmd->add_option("--left", left);
  sign_cmd->add_option("--right", right);
  sign_cmd->add_option("--port", port, "first input of right fed by left (0-based)");
  sign_cmd->add_option("--half", half);
  sign_cmd->add_option("--side", what)->check(CLI::IsMember({"in", "out"}));
  sign_cmd->add_option("--iso", iso_path);

  auto* compose_cmd = app.add_subcommand("compose", "glue two graphs; prints the composed orientation");
  compose_cmd->add_option("--left", left)->required();
  compose_cmd->add_option("--right", right)->required();
  compose_cmd->add_option("--port", port);

  auto* collapse_cmd = app.add_subcommand("collapse", "collapse one edge");
  collapse_cmd->add_option("graph", graph)->required();
  collapse_cmd->add_option("--half", half);
  collapse_cmd->add_option("--edge", edge);

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit class of the orientations");
  orbit_cmd->add_option("graph", graph)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "layered decomposition into generators");
  decompose_cmd->add_option("graph", graph)->required();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "value of an oriented graph on an algebra");
  evaluate_cmd->add_option("graph", graph)->required();
  evaluate_cmd->add_option("--algebra", algebra)->required();
  evaluate_cmd->add_option("--orientation", orient_path);

  auto* check_cmd = app.add_subcommand("check", "relations of a (c,d)-graded Frobenius algebra");
  check_cmd->add_option("--algebra", algebra)->required();
  check_cmd->add_option("--convention", conv)->check(CLI::IsMember({"graded", "co"}));

  auto* suspend_cmd = app.add_subcommand("suspend", "suspend an algebra");
  suspend_cmd->add_option("--algebra", algebra)->required();
  suspend_cmd->add_option("--times", times);
  suspend_cmd->add_flag("--inverse", inverse, "desuspend instead");

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two algebras");
  tensor_cmd->add_option("first", algebra)->required();
  tensor_cmd->add_option("second", algebra2)->required();

  auto* examples_cmd = app.add_subcommand("examples", "builtin algebras and graphs");
  examples_cmd->add_option("what", what)->required()->check(
      CLI::IsMember({"list", "catalogue", "algebra", "presentation", "thom"}));
  examples_cmd->add_option("name", algebra);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
  Emitter em(o, out);

  if (validate_cmd->parsed()) {
    Graph g = load_graph(graph, false);
    auto r = validate(g);
    if (o.format == "json") {
      em.emit(Json{{"ok", r.ok()}, {"problems", r.problems}});
    } else {
      std::string text = r.ok() ? "valid\n" : "";
      for (const auto& p : r.problems) text += "invalid: " + p + "\n";
      em.emit(Json{}, text);
    }
    return r.ok() ? kExitOk : kExitInputError;
  }

  if (sign_cmd->parsed()) {
    int s = 0;
    if (sign_kind == "compose") {
      if (left.empty() || right.empty()) bad("sign compose needs --left and --right");
      s = static_cast<int>(compose_at(load_graph(left), load_graph(right), port, o.c, o.d).total_sign());
    } else if (sign_kind == "collapse") {
      if (graph.empty() || half.empty()) bad("sign collapse needs a graph and --half");
      Graph g = load_graph(graph);
      Side side = what == "out" ? Side::Out : Side::In;
      OrientationWord w = collapse_action(g, canonical_word(g, side), half);
      Graph h = collapse_half(g, half);
      s = reorder_sign(w, canonical_word(h, side));
    } else {
      if (graph.empty() || iso_path.empty()) bad("sign automorphism needs a graph and --iso");
      Graph g = load_graph(graph);
      GraphIso iso = iso_from_json(read_json_file(iso_path));
      if (!is_isomorphism(g, g, iso, false)) bad("--iso is not an automorphism fixing the legs");
      s = automorphism_action(default_orientation(g, o.c, o.d), iso);
    }
    em.emit(Json{{"sign", s}}, std::to_string(s) + "\n");
    return kExitOk;
  }

  if (compose_cmd->parsed()) {
    CdOrientation w = compose_at(load_graph(left), load_graph(right), port, o.c, o.d);
    em.emit(orientation_to_json(w), to_string(w));
    return kExitOk;
  }

  if (collapse_cmd->parsed()) {
    Graph g = load_graph(graph);
    if (half.empty() == edge.empty()) bad("collapse needs exactly one of --half and --edge");
    Graph h = half.empty() ? collapse_edge(g, edge) : collapse_half(g, half);
    em.emit(Json{{"graph", graph_to_json(h)}});
    return kExitOk;
  }

  if (orbit_cmd->parsed()) {
    Graph g = load_graph(graph);
    em.emit(orbit_json(orbit_class(g, o.c, o.d)));
    return kExitOk;
  }

  if (decompose_cmd->parsed()) {
    Graph g = load_graph(graph);
    Decomposition dec = decompose(g, o.seed, flavor_or(o, Flavor::Commutative));
    em.emit(decomposition_to_json(dec));
    return kExitOk;
  }

  if (evaluate_cmd->parsed()) {
    Graph g = load_graph(graph);
    FrobeniusData f = load_algebra(algebra, o);
    if (!o.flavor.empty()) f.flavor = flavor_from_name(o.flavor);
    CdOrientation w = orient_path.empty() ? default_orientation(g, f.c, f.d) : load_orientation(orient_path);
    if (!orient_path.empty() && !(w.graph == g)) bad("the orientation lives on a different graph");
    OrientedValue v = evaluate_oriented(g, w, f, o.seed);
    Json j{{"sign", v.sign}, {"orbit", orbit_json(v.orbit)}, {"map", map_to_json(v.map)}};
    em.emit(j, "sign " + std::to_string(v.sign) + "\n" + to_string(v.map));
    return kExitOk;
  }

  if (check_cmd->parsed()) {
    FrobeniusData f = load_algebra(algebra, o);
    if (!o.flavor.empty()) f.flavor = flavor_from_name(o.flavor);
    CheckReport r = check_relations(f, conv == "co" ? Convention::CieliebakOancea : Convention::Graded);
    if (!r.snake) r.snake = check_snake(f);
    em.emit(report_to_json(r), r.to_text());
    return r.ok() ? kExitOk : kExitCheckFailed;
  }

  if (suspend_cmd->parsed()) {
    FrobeniusData f = load_algebra(algebra, o);
    for (int i = 0; i < times; ++i) f = inverse ? desuspend_algebra(f) : suspend_algebra(f);
    em.emit(algebra_to_json(f));
    return kExitOk;
  }

  if (tensor_cmd->parsed()) {
    em.emit(algebra_to_json(tensor_algebras(load_algebra(algebra, o), load_algebra(algebra2, o))));
    return kExitOk;
  }

  if (examples_cmd->parsed()) {
    if (what == "list") {
      Json graphs = Json::array();
      for (const auto& e : builtin_catalogue()) graphs.push_back(e.name);
      em.emit(Json{{"algebras", {"R", "S<d>", "T2", "unit"}}, {"graphs", graphs}});
    } else if (what == "catalogue") {
      std::string dir = o.out.empty() ? default_catalogue_dir() : o.out;
      write_catalogue(dir);
      out << "wrote " << builtin_catalogue().size() << " graphs to " << dir << "\n";
    } else if (what == "algebra") {
      if (algebra.empty()) bad("examples algebra needs a name");
      em.emit(algebra_to_json(load_algebra(algebra, o)));
    } else if (what == "presentation") {
      if (algebra.empty()) bad("examples presentation needs a file");
      std::ifstream in(algebra);
      if (!in) bad("cannot open '" + algebra + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      em.emit(algebra_to_json(cohomology_algebra(presentation_from_json_text(ss.str()))));
    } else {
      FrobeniusData f = load_algebra(algebra.empty() ? "S2" : algebra, o);
      if (f.c != 0 || f.d < 0) bad("thom needs a (0,d) algebra with d >= 0");
      GradedMap p = thom_to_poincare(f.nu, f.d);
      bool agrees = p == desuspension_transport(f.nu, f.A, f.d);
      em.emit(Json{{"thom", entries_to_json(f.nu)}, {"poincare", entries_to_json(p)}, {"transport_agrees", agrees}},
              "thom " + to_string(f.nu) + "poincare " + to_string(p) +
                  "transport agrees: " + (agrees ? "yes" : "no") + "\n");
      return agrees ? kExitOk : kExitCheckFailed;
    }
    return kExitOk;
  }
  return kExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Frobenius algebras and graph cobordisms", "frobgraph"};
  try {
    return run(app, args, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace frobgraph
