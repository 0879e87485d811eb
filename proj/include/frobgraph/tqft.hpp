#ifndef FROBGRAPH_TQFT_HPP
#define FROBGRAPH_TQFT_HPP

#include <map>
#include <string>
#include <vector>

#include "frobgraph/frobenius.hpp"
#include "frobgraph/orient.hpp"

namespace frobgraph {

enum class Atom { Mu, Eta, Nu, Eps, Id, Twist };

int atom_inputs(Atom a);
int atom_outputs(Atom a);
std::string atom_name(Atom a);  // mu, eta, nu, eps, id, tau
// Also accepts multi, unit, comulti, counit, twist.
Atom atom_from_name(const std::string& name);
Elementary atom_graph(Atom a);

struct Layer {
  std::vector<Atom> atoms;

  int inputs() const;
  int outputs() const;
  bool operator==(const Layer& o) const = default;
};

// Layers are stored in the order they are applied.
struct Decomposition {
  Graph graph;     // the decomposed graph
  Graph expanded;  // the composite of the layers' elementary graphs
  std::vector<Layer> layers;
  int inputs = 0;
  int outputs = 0;
  Flavor flavor = Flavor::Commutative;  // smallest flavor that can evaluate it
  unsigned seed = 0;

  std::map<Atom, int> atom_counts() const;
};

// Expression in the caption style: last layer first, joined by "∘", atoms
// of a layer joined by "⊗".  The parser also takes "." and "*".
std::string to_expression(const std::vector<Layer>& layers);
std::vector<Layer> parse_expression(const std::string& expr);
// Throws GluabilityFailure if consecutive widths disagree.
int check_layers(const std::vector<Layer>& layers);

CdOrientation identity_orientation(int n, int c, int d);
CdOrientation layer_orientation(const Layer& l, int c, int d);
// The generators composed along the layers, starting from n identities.
CdOrientation composite_orientation(const std::vector<Layer>& layers, int inputs, int c, int d);

// Sweeps the vertices of g in a seeded greedy order.  Commutative ignores
// cyclic orders; Symmetric and Planar need a fat graph and expand every
// vertex compatibly with its cyclic order, Planar with no Twist atom.
// Throws PlanarTwistRequired when no twist-free sweep is found.
Decomposition decompose(const Graph& g, unsigned seed = 0, Flavor flavor = Flavor::Commutative);
// Wraps given layers after checking that they compose to a graph equivalent
// to g (homotopy rel legs, or the surface type for fat flavors).
Decomposition decomposition_from_layers(const Graph& g, const std::vector<Layer>& layers,
                                        Flavor flavor = Flavor::Commutative);

CdOrientation witness(const Decomposition& dec, int c, int d);
// The r with omega = r * witness(dec), found by reducing both to a common
// graph and reordering the words.
int decomposition_sign(const Decomposition& dec, const CdOrientation& omega);

// Composite of the structure maps along the layers.  Does not run the
// relation checker; callers decide whether f is a Frobenius algebra.
GradedMap evaluate(const Decomposition& dec, const FrobeniusData& f);

struct OrientedValue {
  GradedMap map;
  OrbitClass orbit;
  int sign = 1;  // decomposition_sign
};
// decomposition_sign * evaluate for a decomposition with the given seed.
// On a TwoTorsion class the value must vanish; a nonzero value throws
// RelationFailure.
OrientedValue evaluate_oriented(const Graph& g, const CdOrientation& omega, const FrobeniusData& f,
                                unsigned seed = 0);

}  // namespace frobgraph

#endif  // FROBGRAPH_TQFT_HPP
