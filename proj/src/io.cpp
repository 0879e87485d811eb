#include "frobgraph/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef FROBGRAPH_SOURCE_DIR
#define FROBGRAPH_SOURCE_DIR "."
#endif

namespace frobgraph {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("field '") + key + "': " + e.what());
  }
}

Rational value_of(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad("coefficient must be an integer or a \"p/q\" string");
}

Json factor_to_json(const Factor& f) {
  Json c = Json::object();
  for (const auto& [d, labels] : f.components) c[std::to_string(d)] = labels;
  return c;
}

Factor factor_from_json(const Json& c) {
  if (!c.is_object()) bad("module components must be an object");
  Factor f;
  for (const auto& [k, v] : c.items()) {
    int d;
    try {
      std::size_t used = 0;
      d = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      bad("degree key '" + k + "' is not an integer");
    }
    f.components[d] = v.get<std::vector<std::string>>();
  }
  return f;
}

std::vector<std::string> strings(const Json& j, const char* key) { return get<std::vector<std::string>>(j, key); }

}  // namespace

Json module_to_json(const GradedModule& m) {
  if (m.is_plain()) return Json{{"components", factor_to_json(m.factors().front())}};
  Json fs = Json::array();
  for (const auto& f : m.factors()) fs.push_back(Json{{"components", factor_to_json(f)}});
  return Json{{"factors", fs}};
}

GradedModule module_from_json(const Json& j) {
  if (j.is_object() && j.contains("factors")) {
    std::vector<Factor> fs;
    for (const auto& f : j.at("factors")) fs.push_back(factor_from_json(field(f, "components")));
    return GradedModule(fs);
  }
  return GradedModule(std::vector<Factor>{factor_from_json(field(j, "components"))});
}

Json entries_to_json(const GradedMap& f) {
  Json out = Json::array();
  for (const auto& [sdeg, m] : f.blocks()) {
    const auto& src = f.source().labels(sdeg);
    const auto& tgt = f.target().labels(sdeg + f.degree());
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        if (m(r, c) != 0) out.push_back(Json{{"from", src[c]}, {"to", tgt[r]}, {"value", format_rational(m(r, c))}});
  }
  return out;
}

GradedMap map_from_entries(const Json& entries, const GradedModule& source, const GradedModule& target, int degree) {
  if (!entries.is_array()) bad("map entries must be an array");
  MapBuilder b(source, target, degree);
  for (const auto& e : entries) {
    auto [sd, sp] = source.find(get<std::string>(e, "from"));
    auto [td, tp] = target.find(get<std::string>(e, "to"));
    if (td != sd + degree)
      throw Error(ErrorKind::ShapeMismatch, "entry " + e.at("from").get<std::string>() + " -> " +
                                                e.at("to").get<std::string>() + " does not have degree " +
                                                std::to_string(degree));
    b.add(sd, sp, tp, value_of(field(e, "value")));
  }
  return b.build();
}

Json map_to_json(const GradedMap& f) {
  return Json{{"source", module_to_json(f.source())},
              {"target", module_to_json(f.target())},
              {"degree", f.degree()},
              {"entries", entries_to_json(f)}};
}

GradedMap map_from_json(const Json& j) {
  return map_from_entries(field(j, "entries"), module_from_json(field(j, "source")),
                          module_from_json(field(j, "target")), get<int>(j, "degree"));
}

Json element_to_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& [k, v] : x.coefficients())
    terms.push_back(Json{{"label", x.module().labels(k.first)[k.second]}, {"value", format_rational(v)}});
  return Json{{"module", module_to_json(x.module())}, {"terms", terms}};
}

Element element_from_json(const Json& j) {
  GradedModule m = module_from_json(field(j, "module"));
  std::map<std::pair<int, int>, Rational> coeffs;
  for (const auto& t : field(j, "terms")) coeffs[m.find(get<std::string>(t, "label"))] += value_of(field(t, "value"));
  return Element(m, coeffs);
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertices;
  j["half_edges"] = g.half_edges;
  Json sigma = Json::object(), s = Json::object();
  for (const auto& h : g.half_edges) {
    sigma[h] = g.sigma.at(h);
    s[h] = g.s.at(h);
  }
  j["sigma"] = sigma;
  j["s"] = s;
  j["in"] = g.in;
  j["out"] = g.out;
  Json edges = Json::object();
  for (const auto& e : g.edges()) edges[e.name] = {e.h, e.sh};
  j["edges"] = edges;
  if (g.cyclic) {
    Json cyc = Json::object();
    for (const auto& v : g.vertices) {
      auto it = g.cyclic->find(v);
      cyc[v] = it == g.cyclic->end() ? std::vector<std::string>{} : it->second;
    }
    j["cyclic"] = cyc;
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  g.vertices = strings(j, "vertices");
  g.half_edges = j.contains("half_edges") ? strings(j, "half_edges") : std::vector<std::string>{};
  if (j.contains("sigma")) g.sigma = get<std::map<std::string, std::string>>(j, "sigma");
  if (j.contains("s")) g.s = get<std::map<std::string, std::string>>(j, "s");
  g.in = strings(j, "in");
  g.out = strings(j, "out");
  if (j.contains("edges"))
    for (const auto& [name, halves] : j.at("edges").items()) {
      auto hs = halves.get<std::vector<std::string>>();
      if (hs.size() != 2) bad("edge '" + name + "' must list two half-edges");
      g.edge_name[hs[0]] = name;
      g.edge_name[hs[1]] = name;
    }
  if (j.contains("cyclic")) g.cyclic = get<std::map<std::string, std::vector<std::string>>>(j, "cyclic");
  return g;
}

Json word_to_json(const OrientationWord& w) {
  return Json{{"side", side_name(w.side)}, {"edges", w.edges},  {"halves", w.halves},
              {"vertices", w.vertices},    {"sign", w.sign},    {"inverted", w.inverted}};
}

OrientationWord word_from_json(const Json& j) {
  OrientationWord w;
  std::string side = get<std::string>(j, "side");
  if (side != "in" && side != "out") bad("word side must be \"in\" or \"out\"");
  w.side = side == "in" ? Side::In : Side::Out;
  w.edges = strings(j, "edges");
  w.halves = strings(j, "halves");
  w.vertices = strings(j, "vertices");
  w.sign = j.contains("sign") ? get<int>(j, "sign") : 1;
  w.inverted = j.contains("inverted") && get<bool>(j, "inverted");
  if (w.sign != 1 && w.sign != -1) bad("word sign must be 1 or -1");
  return w;
}

Json orientation_to_json(const CdOrientation& o) {
  Json in = Json::array(), out = Json::array();
  for (const auto& w : o.in_words) in.push_back(word_to_json(w));
  for (const auto& w : o.out_words) out.push_back(word_to_json(w));
  return Json{{"graph", graph_to_json(o.graph)}, {"c", o.c},          {"d", o.d},
              {"coefficient", o.coefficient},    {"in_words", in},    {"out_words", out}};
}

CdOrientation orientation_from_json(const Json& j) {
  CdOrientation o;
  o.graph = graph_from_json(field(j, "graph"));
  o.c = get<int>(j, "c");
  o.d = get<int>(j, "d");
  o.coefficient = j.contains("coefficient") ? get<long long>(j, "coefficient") : 1;
  for (const auto& w : field(j, "in_words")) o.in_words.push_back(word_from_json(w));
  for (const auto& w : field(j, "out_words")) o.out_words.push_back(word_from_json(w));
  check_orientation(o);
  return o;
}

Json algebra_to_json(const FrobeniusData& f) {
  return Json{{"module", module_to_json(f.A)},   {"c", f.c},
              {"d", f.d},                        {"flavor", flavor_name(f.flavor)},
              {"mu", entries_to_json(f.mu)},     {"eta", entries_to_json(f.eta)},
              {"nu", entries_to_json(f.nu)},     {"eps", entries_to_json(f.eps)}};
}

FrobeniusData algebra_from_json(const Json& j) {
  FrobeniusData f;
  f.A = module_from_json(field(j, "module"));
  if (!f.A.is_plain()) bad("algebra module must be plain");
  f.c = get<int>(j, "c");
  f.d = get<int>(j, "d");
  f.flavor = j.contains("flavor") ? flavor_from_name(get<std::string>(j, "flavor")) : Flavor::Planar;
  GradedModule a2 = tensor_power(f.A, 2), one = GradedModule::unit();
  f.mu = map_from_entries(field(j, "mu"), a2, f.A, f.c);
  f.eta = map_from_entries(field(j, "eta"), one, f.A, -f.c);
  f.nu = map_from_entries(field(j, "nu"), f.A, a2, f.d);
  f.eps = map_from_entries(field(j, "eps"), f.A, one, -f.d);
  return f;
}

Json hh_chain_to_json(const HHChain& x, const FrobeniusData& f) {
  Json terms = Json::array();
  for (const auto& [w, v] : x) {
    Json word = Json::array();
    for (auto [deg, pos] : w) word.push_back(Json::array({f.A.labels(deg).at(pos), deg}));
    terms.push_back(Json{{"word", word}, {"value", format_rational(v)}});
  }
  return Json{{"terms", terms}};
}

HHChain hh_chain_from_json(const Json& j, const FrobeniusData& f) {
  HHChain out;
  for (const auto& t : field(j, "terms")) {
    std::vector<std::string> labels;
    for (const auto& letter : field(t, "word")) {
      if (!letter.is_array() || letter.size() != 2) bad("a Hochschild letter is a [label, degree] pair");
      std::string label = letter[0].get<std::string>();
      if (f.A.find(label).first != letter[1].get<int>())
        throw Error(ErrorKind::ShapeMismatch, "letter '" + label + "' does not have degree " + letter[1].dump());
      labels.push_back(label);
    }
    out[hh_word(f, labels)] += value_of(field(t, "value"));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Json report_to_json(const CheckReport& r) {
  Json rel = Json::array();
  for (const auto& v : r.relations) {
    Json x{{"name", v.name}, {"ok", v.ok}};
    if (!v.ok) {
      x["witness"] = v.witness;
      x["detail"] = v.detail;
    }
    rel.push_back(x);
  }
  Json out{{"ok", r.ok()}, {"relations", rel}};
  if (r.snake) out["snake"] = *r.snake;
  return out;
}

Json decomposition_to_json(const Decomposition& d) {
  Json counts = Json::object();
  for (const auto& [a, n] : d.atom_counts()) counts[atom_name(a)] = n;
  return Json{{"expression", to_expression(d.layers)},
              {"inputs", d.inputs},
              {"outputs", d.outputs},
              {"layers", static_cast<int>(d.layers.size())},
              {"flavor", flavor_name(d.flavor)},
              {"seed", d.seed},
              {"atoms", counts}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) bad("cannot write '" + path + "'");
  out << text;
}

std::vector<CatalogueEntry> load_catalogue(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) bad("catalogue directory '" + dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogueEntry> out;
  for (const auto& p : files) {
    Json j = read_json_file(p.string());
    CatalogueEntry e;
    e.name = j.contains("name") ? j.at("name").get<std::string>() : p.stem().string();
    e.description = j.contains("description") ? j.at("description").get<std::string>() : "";
    e.graph = graph_from_json(field(j, "graph"));
    auto r = validate(e.graph);
    if (!r.ok()) bad("catalogue graph '" + e.name + "': " + r.problems.front());
    out.push_back(std::move(e));
  }
  return out;
}

std::string default_catalogue_dir() {
  if (const char* env = std::getenv("FROBGRAPH_CATALOG")) return env;
  return std::string(FROBGRAPH_SOURCE_DIR) + "/data/catalogue";
}

}  // namespace frobgraph
