#ifndef FROBGRAPH_EXAMPLES_HPP
#define FROBGRAPH_EXAMPLES_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobgraph/frobenius.hpp"

namespace frobgraph {

// Cohomology ring given by its multiplication table.  The unit "1" in degree
// 0 is implicit.  Products missing from the table are zero unless the
// reversed product is present, in which case graded commutativity fills
// them in.
struct RingPresentation {
  std::vector<std::pair<std::string, int>> gens;  // basis besides 1, with degrees
  std::map<std::pair<std::string, std::string>, std::map<std::string, Rational>> table;
  int top = 0;
  std::map<std::string, Rational> counit;  // on top-degree basis vectors
};

// Throws InvalidInput if the table leaves the span, has wrong degrees or
// breaks graded commutativity.
void check_presentation(const RingPresentation& p);
// The (0, top) commutative algebra with nu from the Poincare pairing (the
// Thom coproduct).  Throws DegeneratePairing.
FrobeniusData cohomology_algebra(const RingPresentation& p);

RingPresentation sphere_presentation(int d);  // 1, a with a*a = 0
RingPresentation torus_presentation();        // 1, a, b, ab with counit on ab from [S1] x [S1]

// {"gens":[{"name":"a","deg":2}],"table":{"a*a":"0"},"top":2,"counit":{"a":"1"}}.
// Table values are sums like "2*b - c" or "0".
RingPresentation presentation_from_json_text(const std::string& text);

// Multiplies the (i, j) output coordinate of nu : A -> A (x) A by
// (-1)^{d(d-1)/2 + d + d i}.
GradedMap thom_to_poincare(const GradedMap& nu_th, int d);
// Sigma^{-d} nu read back on the basis of A: the d-fold desuspension of nu,
// with each desuspended basis vector identified with the one it came from.
// The d nested desuspensions are matched with Sigma^{-d} by reversing the
// suspension coordinates, a global sign (-1)^{d(d-1)/2}.
GradedMap desuspension_transport(const GradedMap& nu, const GradedModule& a, int d);

// Hochschild chains of a (0,d) algebra whose unit is a basis vector.  A
// word a_0 (x) ... (x) a_k is stored as basis positions (degree, pos);
// internal letters have degree |a_i| + 1.
using HHLetter = std::pair<int, int>;
using HHWord = std::vector<HHLetter>;
using HHChain = std::map<HHWord, Rational>;
using HHPairChain = std::map<std::pair<HHWord, HHWord>, Rational>;

// Basis position of the unit; throws InvalidInput if eta(1) is not a
// multiple of a basis vector.
HHLetter unit_letter(const FrobeniusData& f);
int hh_degree(const HHWord& w);
// Drops the word if an internal letter is the unit.
HHChain hh_normalize(const HHChain& x, const FrobeniusData& f);
HHWord hh_word(const FrobeniusData& f, const std::vector<std::string>& labels);
std::string to_string(const HHChain& x, const FrobeniusData& f);

HHChain hochschild_mu(const HHWord& w1, const HHWord& w2, const FrobeniusData& f);
HHPairChain hochschild_nu(const HHWord& w, const FrobeniusData& f);
Rational hochschild_eps(const HHWord& w, const FrobeniusData& f);
// b(a_0[a_1|...|a_k]) = sum_{i<k} (-1)^{e_i} a_0[...|a_i a_{i+1}|...]
//   - (-1)^{(|a_k|+1) e_{k-1}} a_k a_0[a_1|...|a_{k-1}],
// e_i = |a_0| + sum_{j<=i} (|a_j| + 1), on the normalized complex.
HHChain hochschild_differential(const HHChain& x, const FrobeniusData& f);

}  // namespace frobgraph

#endif  // FROBGRAPH_EXAMPLES_HPP
