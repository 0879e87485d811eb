#ifndef FROBGRAPH_GRAPH_HPP
#define FROBGRAPH_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobgraph/scalar.hpp"

namespace frobgraph {

enum class Side { In, Out };

inline const char* side_name(Side s) { return s == Side::In ? "in" : "out"; }

struct Edge {
  std::string name;
  std::string h;   // first half-edge in the graph's listing
  std::string sh;  // its sigma partner
};

// Graph cobordism with string ids.  A fat graph is a graph whose `cyclic`
// field is set.  Edge names are optional on input; an unnamed edge is called
// after the lexicographically smaller of its half-edges.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::string> half_edges;
  std::map<std::string, std::string> sigma;
  std::map<std::string, std::string> s;
  std::vector<std::string> in;
  std::vector<std::string> out;
  std::map<std::string, std::string> edge_name;  // half-edge -> edge id
  std::optional<std::map<std::string, std::vector<std::string>>> cyclic;

  bool is_fat() const { return cyclic.has_value(); }
  std::vector<Edge> edges() const;
  std::string edge_of(const std::string& half) const;
  Edge edge(const std::string& name) const;
  // Half-edges at v in listing order.
  std::vector<std::string> incident(const std::string& v) const;
  int arity(const std::string& v) const;
  bool is_leg(const std::string& v, Side side) const;
  bool has_vertex(const std::string& v) const;
  const std::vector<std::string>& legs(Side side) const { return side == Side::In ? in : out; }

  bool operator==(const Graph& o) const = default;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

// Strict check of every invariant of a graph cobordism.
ValidationReport validate(const Graph& g);
// Same check with leg arity relaxed; this holds for all intermediate graphs
// produced by collapses in the unitality chains.
ValidationReport validate_structure(const Graph& g);

// Collapses the edge containing h0.  The vertex s(h0) survives and keeps its
// id; s(sigma h0) is deleted.  Leg positions of the deleted vertex pass to the
// survivor.  `allow_external` skips the check that both ends are legs on the
// same side; orientation code uses it when only the other side matters.
Graph collapse_half(const Graph& g, const std::string& h0, bool allow_external = false);
// Collapse by edge name, with h0 the first half-edge of the edge.
Graph collapse_edge(const Graph& g, const std::string& edge);

struct Renaming {
  std::map<std::string, std::string> vertex;
  std::map<std::string, std::string> half;
  std::map<std::string, std::string> edge;
};

struct GlueResult {
  Graph graph;
  Renaming first;   // ids of g in the result
  Renaming second;  // ids of g2 in the result
};

// g2 after g: the out-legs of g are identified with the in-legs of g2 by
// position.  Ids of g that clash with ids of g2 get a prime appended.  A
// merged vertex keeps the id of the out-leg of g.
GlueResult glue(const Graph& g, const Graph& g2);
GlueResult disjoint_union(const Graph& g, const Graph& g2);

// Appends `suffix` to every id.
Graph with_suffix(const Graph& g, const std::string& suffix);
Graph apply_renaming(const Graph& g, const Renaming& r);

int euler_char_rel(const Graph& g, Side side);
bool has_tadpole(const Graph& g);
bool is_forest(const Graph& g);
// Vertex partition, each block and the list ordered by listing order.
std::vector<std::vector<std::string>> components(const Graph& g);

// Face walks of a fat graph.  Each walk is a sequence of half-edges h with
// successor cyclic_next(sigma h).  An isolated vertex contributes an empty walk.
std::vector<std::vector<std::string>> boundary_cycles(const Graph& fg);
int genus(const Graph& fg);
int component_genus(const Graph& fg, const std::vector<std::string>& component);
// Homeomorphism type of the thickened surface rel legs: per component the
// genus and, for each boundary circle, the cyclic sequence of legs met on it
// ("i0", "o1", ...).  Two fat graphs have equal signatures iff their
// surfaces are homeomorphic by an orientation preserving map fixing legs.
std::string surface_signature(const Graph& fg);
bool is_planar_ordered(const Graph& fg, const std::vector<std::string>& in_order,
                       const std::vector<std::string>& out_order);
inline bool is_planar(const Graph& fg) { return is_planar_ordered(fg, fg.in, fg.out); }

enum class Elementary { Multi, Unit, Comulti, Counit, Id, Twist };
Elementary elementary_from_name(const std::string& name);
std::string elementary_name(Elementary e);
Graph elementary(Elementary e);

// Isomorphism data used by automorphism actions.
struct GraphIso {
  std::map<std::string, std::string> vertex;
  std::map<std::string, std::string> half;
};
// True if iso is a bijection preserving sigma, incidence, leg lists as
// ordered lists (or setwise when `setwise_legs`), and cyclic orders if fat.
bool is_isomorphism(const Graph& g, const Graph& g2, const GraphIso& iso, bool setwise_legs);

}  // namespace frobgraph

#endif  // FROBGRAPH_GRAPH_HPP
