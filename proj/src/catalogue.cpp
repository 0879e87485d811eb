#include <filesystem>
#include <map>

#include "frobgraph/io.hpp"

namespace frobgraph {

namespace {

using Ends = std::vector<std::pair<std::string, std::vector<std::string>>>;

// Each vertex lists its edge ends in cyclic order; an edge named twice at one
// vertex is a loop.  Half-edges are named <edge>a, <edge>b by first
// appearance.
Graph build(const Ends& ends, std::vector<std::string> in, std::vector<std::string> out) {
  Graph g;
  g.cyclic.emplace();
  std::map<std::string, int> seen;
  for (const auto& [v, es] : ends) {
    g.vertices.push_back(v);
    auto& cyc = (*g.cyclic)[v];
    for (const auto& e : es) {
      std::string h = e + (seen[e]++ == 0 ? "a" : "b");
      g.half_edges.push_back(h);
      g.s[h] = v;
      g.edge_name[h] = e;
      cyc.push_back(h);
    }
  }
  for (const auto& [e, n] : seen) {
    if (n != 2) throw Error(ErrorKind::InvalidInput, "catalogue edge " + e + " has " + std::to_string(n) + " ends");
    g.sigma[e + "a"] = e + "b";
    g.sigma[e + "b"] = e + "a";
  }
  g.in = std::move(in);
  g.out = std::move(out);
  return g;
}

Graph union_of(const Graph& a, const Graph& b) { return disjoint_union(a, b).graph; }

Graph caption_graph() {
  auto layers =
      parse_expression("(eps ⊗ mu) ∘ (mu ⊗ id ⊗ id) ∘ (id ⊗ nu ⊗ id) ∘ (nu ⊗ id) ∘ (eta ⊗ mu) ∘ nu ∘ mu ∘ (mu ⊗ id)");
  return reduce(composite_orientation(layers, check_layers(layers), 0, 0)).graph;
}

}  // namespace

std::vector<CatalogueEntry> builtin_catalogue() {
  Graph theta_torus = build({{"a", {"e0", "e1", "e2"}}, {"b", {"e0", "e1", "e2"}}}, {}, {});
  Graph tadpole_closed = build({{"a", {"e0", "e0"}}}, {}, {});
  Graph id_edge = build({{"i", {"e0"}}, {"o", {"e0"}}}, {"i"}, {"o"});
  std::vector<CatalogueEntry> c = {
      {"multi", "elementary multiplication", elementary(Elementary::Multi)},
      {"comulti", "elementary comultiplication", elementary(Elementary::Comulti)},
      {"unit", "elementary unit", elementary(Elementary::Unit)},
      {"counit", "elementary counit", elementary(Elementary::Counit)},
      {"id", "identity on one leg vertex", elementary(Elementary::Id)},
      {"twist", "symmetry on two strands", elementary(Elementary::Twist)},
      {"id_edge", "identity through one edge", id_edge},
      {"cap", "edge between two in-legs", build({{"a", {"e0"}}, {"b", {"e0"}}}, {"a", "b"}, {})},
      {"cup", "edge between two out-legs", build({{"a", {"e0"}}, {"b", {"e0"}}}, {}, {"a", "b"})},
      {"pairing", "counit after multiplication",
       build({{"i0", {"e0"}}, {"i1", {"e1"}}, {"c", {"e0", "e1"}}}, {"i0", "i1"}, {})},
      {"crossed_pairing", "pairing with its inputs swapped",
       build({{"i0", {"e0"}}, {"i1", {"e1"}}, {"c", {"e1", "e0"}}}, {"i0", "i1"}, {})},
      {"copairing", "comultiplication after unit",
       build({{"o0", {"e0"}}, {"o1", {"e1"}}, {"c", {"e1", "e0"}}}, {}, {"o0", "o1"})},
      {"closed_vertex", "sphere", build({{"p", {}}}, {}, {})},
      {"two_closed", "two spheres", build({{"p", {}}, {"q", {}}}, {}, {})},
      {"closed_plus_id", "sphere beside an identity", union_of(build({{"p", {}}}, {}, {}), elementary(Elementary::Id))},
      {"theta_torus", "closed theta graph, one face", theta_torus},
      {"theta_sphere", "closed theta graph, three faces",
       build({{"a", {"e0", "e1", "e2"}}, {"b", {"e2", "e1", "e0"}}}, {}, {})},
      {"handle", "theta graph between one in-leg and one out-leg",
       build({{"i", {"e3"}}, {"a", {"e3", "e0", "e1", "e2"}}, {"b", {"e0", "e1", "e2", "e4"}}, {"o", {"e4"}}}, {"i"},
             {"o"})},
      {"handle_flat", "theta graph with legs, reversed order at b",
       build({{"i", {"e3"}}, {"a", {"e3", "e0", "e1", "e2"}}, {"b", {"e2", "e1", "e0", "e4"}}, {"o", {"e4"}}}, {"i"},
             {"o"})},
      {"tadpole_leg", "identity with a loop",
       build({{"i", {"e0"}}, {"a", {"e0", "e1", "e1", "e2"}}, {"o", {"e2"}}}, {"i"}, {"o"})},
      {"tadpole_closed", "one vertex with a loop", tadpole_closed},
      {"figure_eight", "two interleaved loops", build({{"a", {"e0", "e1", "e0", "e1"}}}, {}, {})},
      {"figure_eight_flat", "two nested loops", build({{"a", {"e0", "e0", "e1", "e1"}}}, {}, {})},
      {"tadpole_cap", "counit through a loop", build({{"i", {"e0"}}, {"a", {"e0", "e1", "e1"}}}, {"i"}, {})},
      {"tadpole_cup", "unit through a loop", build({{"a", {"e1", "e1", "e0"}}, {"o", {"e0"}}}, {}, {"o"})},
      {"two_tadpoles", "two loops in series",
       build({{"i", {"e0"}}, {"a", {"e0", "e1", "e1", "e2"}}, {"b", {"e2", "e3", "e3", "e4"}}, {"o", {"e4"}}}, {"i"},
             {"o"})},
      {"star4", "four-valent vertex, two in and two out",
       build({{"i0", {"e0"}}, {"i1", {"e1"}}, {"o0", {"e2"}}, {"o1", {"e3"}}, {"c", {"e0", "e1", "e3", "e2"}}},
             {"i0", "i1"}, {"o0", "o1"})},
      {"star5", "five-valent vertex, three in and two out",
       build({{"i0", {"e0"}},
              {"i1", {"e1"}},
              {"i2", {"e2"}},
              {"o0", {"e3"}},
              {"o1", {"e4"}},
              {"c", {"e0", "e1", "e2", "e4", "e3"}}},
             {"i0", "i1", "i2"}, {"o0", "o1"})},
      {"h_shape", "multiplication then comultiplication",
       build({{"i0", {"e0"}},
              {"i1", {"e1"}},
              {"a", {"e0", "e1", "e4"}},
              {"b", {"e4", "e3", "e2"}},
              {"o0", {"e2"}},
              {"o1", {"e3"}}},
             {"i0", "i1"}, {"o0", "o1"})},
      {"genus1_pants", "two in-legs, one out-leg, a double edge",
       build({{"i0", {"e0"}}, {"i1", {"e1"}}, {"a", {"e0", "e1", "e2", "e3"}}, {"b", {"e2", "e3", "e4"}}, {"o", {"e4"}}},
             {"i0", "i1"}, {"o"})},
      {"annulus_strand", "identity through a bigon",
       build({{"i", {"e0"}}, {"a", {"e0", "e1", "e2"}}, {"b", {"e1", "e2", "e3"}}, {"o", {"e3"}}}, {"i"}, {"o"})},
      {"quad_handle", "four parallel edges between legs",
       build({{"i", {"e0"}},
              {"a", {"e0", "e1", "e2", "e3", "e4"}},
              {"b", {"e1", "e2", "e3", "e4", "e5"}},
              {"o", {"e5"}}},
             {"i"}, {"o"})},
      {"multi_counit", "multiplication beside a counit",
       union_of(elementary(Elementary::Multi), elementary(Elementary::Counit))},
      {"id_theta", "identity beside a closed theta graph", union_of(elementary(Elementary::Id), theta_torus)},
      {"edge_tadpole", "identity edge beside a closed loop", union_of(id_edge, tadpole_closed)},
      {"caption", "reduced graph of the three-to-one example expression", caption_graph()},
  };
  return c;
}

Json catalogue_entry_to_json(const CatalogueEntry& e) {
  return Json{{"name", e.name}, {"description", e.description}, {"graph", graph_to_json(e.graph)}};
}

void write_catalogue(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& e : builtin_catalogue())
    write_text_file(dir + "/" + e.name + ".json", catalogue_entry_to_json(e).dump(2) + "\n");
}

}  // namespace frobgraph
