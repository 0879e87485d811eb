#ifndef FROBGRAPH_ORIENT_HPP
#define FROBGRAPH_ORIENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobgraph/graph.hpp"

namespace frobgraph {

// sign * (e_1 ^ ... ^ e_k)^{-1} (x) h_1 ^ ... ^ h_2k (x) v_1 ^ ... ^ v_m, a
// generator of det(G, d_side).  An inverted word stands for the dual
// generator of the inverse line; its degree is negated.
struct OrientationWord {
  Side side = Side::In;
  std::vector<std::string> edges;
  std::vector<std::string> halves;
  std::vector<std::string> vertices;
  int sign = 1;
  bool inverted = false;

  int degree() const {
    int d = static_cast<int>(edges.size()) - static_cast<int>(vertices.size());
    return inverted ? -d : d;
  }
  bool operator==(const OrientationWord& o) const = default;
};

std::string to_string(const OrientationWord& w);

// Throws InvalidInput unless the blocks enumerate E, H and V \ L_side.
void check_word(const Graph& g, const OrientationWord& w);

// The r with w = r * target, for two words on the same graph and side.
int reorder_sign(const OrientationWord& w, const OrientationWord& target);

// Edges in listing order, each edge as (h, sigma h) with sigma h at a
// non-leg vertex when exactly one end is a leg, vertices sorted by id.
OrientationWord canonical_word(const Graph& g, Side side);

// Edge collapse on a word.  The strict form requires s(sigma h0) not in
// L_side and implements the collapse lemma verbatim.  The general form
// deletes whichever end is off L_side.  Both return a word on
// collapse_half(g, h0).
OrientationWord collapse_action(const Graph& g, const OrientationWord& w, const std::string& h0);
OrientationWord collapse_word(const Graph& g, const OrientationWord& w, const std::string& h0);

// Word of glue(G, G') from w2 on G' and w1 on G.  Letters of w2 come first;
// the sign is (-1)^{(m+n)k} with m = |E(G')|, n = |V(G') \ L|, k = |E(G)|,
// times (-1)^{|w1||w2|} for inverted words.
OrientationWord compose_words(const OrientationWord& w2, const OrientationWord& w1, const GlueResult& glued);
// Word of disjoint_union(G1, G2); w1 letters first, same sign rule.
OrientationWord tensor_words(const OrientationWord& w1, const OrientationWord& w2, const GlueResult& joined);

// Image of w under an isomorphism g -> g2.
OrientationWord transport(const Graph& g, const Graph& g2, const OrientationWord& w, const GraphIso& iso);
// Sign by which an automorphism acts on w.
int automorphism_action(const Graph& g, const OrientationWord& w, const GraphIso& iso);

// True when every component is a tree containing exactly one vertex of L_side.
bool is_acyclic_relative(const Graph& g, Side side);
// The generator "1" of det(G, d_side) for acyclic relative graphs: the word
// that collapses to +1 on the graph with all edges contracted.  `seed`
// picks the collapse order; the result does not depend on it.
OrientationWord trivial_word(const Graph& g, Side side, unsigned seed = 0);

// A generator of det_{c,d}(G): coefficient times |c| in-words and |d| out-words.
struct CdOrientation {
  Graph graph;
  int c = 0;
  int d = 0;
  std::vector<OrientationWord> in_words;
  std::vector<OrientationWord> out_words;
  long long coefficient = 1;

  int degree() const;
  // coefficient times the product of the word signs
  long long total_sign() const;
};

std::string to_string(const CdOrientation& o);
void check_orientation(const CdOrientation& o);

// omega(G) of the chosen generators raised to c and d.
OrientationWord generator_word(Elementary e, Side side);
CdOrientation generator_orientation(Elementary e, int c, int d);
// Twists every word as in generator_orientation from per-side words.
CdOrientation cd_from_words(const Graph& g, int c, int d, const OrientationWord& in, const OrientationWord& out);

// o2 after o1, on glue(o1.graph, o2.graph).
CdOrientation cd_compose(const CdOrientation& o2, const CdOrientation& o1);
// On disjoint_union(o1.graph, o2.graph).
CdOrientation cd_tensor(const CdOrientation& o1, const CdOrientation& o2);
CdOrientation cd_collapse(const CdOrientation& o, const std::string& h0);
int automorphism_action(const CdOrientation& o, const GraphIso& iso);
CdOrientation scaled(CdOrientation o, long long r);

// Contracts internal edges, then small stars and in-out strands, to a
// reduced form that only depends on the homeomorphism type rel legs.
CdOrientation reduce(const CdOrientation& o);
// The r = +-1 with a = r * b after reducing both, or nothing when the
// reduced graphs are not isomorphic rel legs.
std::optional<int> compare_orientations(const CdOrientation& a, const CdOrientation& b);

struct OrbitClass {
  enum class Kind { Free, TwoTorsion, Unknown } kind;
  int sign = 1;
  std::string witness;
};
OrbitClass orbit_class(const Graph& g, int c, int d);

}  // namespace frobgraph

#endif  // FROBGRAPH_ORIENT_HPP
