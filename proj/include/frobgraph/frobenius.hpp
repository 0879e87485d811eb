#ifndef FROBGRAPH_FROBENIUS_HPP
#define FROBGRAPH_FROBENIUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobgraph/grmod.hpp"

namespace frobgraph {

// Commutative implies Symmetric implies Planar.
enum class Flavor { Planar, Symmetric, Commutative };
std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

// Candidate (c,d)-graded Frobenius algebra.  A is a plain module; mu has
// degree c, eta -c, nu d and eps -d.
struct FrobeniusData {
  GradedModule A;
  GradedMap mu{GradedModule(), GradedModule(), 0};
  GradedMap eta{GradedModule(), GradedModule(), 0};
  GradedMap nu{GradedModule(), GradedModule(), 0};
  GradedMap eps{GradedModule(), GradedModule(), 0};
  int c = 0;
  int d = 0;
  Flavor flavor = Flavor::Planar;
};

// Throws ShapeMismatch or ParameterMismatch on inconsistent data.
void check_shapes(const FrobeniusData& f);

struct RelationVerdict {
  std::string name;     // "(i) associativity", ...
  bool ok = true;
  std::string witness;  // label of the first source basis vector where it fails
  std::string detail;
};

struct CheckReport {
  std::vector<RelationVerdict> relations;
  std::optional<bool> snake;
  bool ok() const;
  const RelationVerdict* find(const std::string& prefix) const;
  std::string to_text() const;
};

// Graded: the relations of the main theorem.  CieliebakOancea: the
// biunital coFrobenius signs, mu(eta x id) = id = (-1)^c mu(id x eta) and
// (id x eps) nu = id = (-1)^d (eps x id) nu.
enum class Convention { Graded, CieliebakOancea };

CheckReport check_relations(const FrobeniusData& f, Convention conv = Convention::Graded);
// (id x p)(q x id) = id and (p x id)(id x q) = (-1)^{c-d} id with p = eps mu
// and q = (-1)^{cd + c(c+1)/2 + d(d+1)/2} nu eta.
bool check_snake(const FrobeniusData& f);

// Builds nu from a nondegenerate pairing eps mu.  c and d are read off the
// degrees of mu and eps.
FrobeniusData from_pairing(const GradedModule& a, const GradedMap& mu, const GradedMap& eta, const GradedMap& eps,
                           Flavor flavor = Flavor::Planar);

// The rank one algebra on a degree zero line with c = d = 0.
FrobeniusData unit_algebra();
// R_{c,d} on x in degree -c and y in degree d; the rank one suspension of
// the unit algebra when c + d = 0.
FrobeniusData builtin_Rcd(int c, int d);

FrobeniusData suspend_algebra(const FrobeniusData& f);
FrobeniusData desuspend_algebra(const FrobeniusData& f);
FrobeniusData tensor_algebras(const FrobeniusData& f1, const FrobeniusData& f2);
FrobeniusData one_sided_extend(const FrobeniusData& f);

// Classical relations with every (c,d) sign removed; Koszul signs of the
// symmetric monoidal structure stay.
CheckReport check_unsigned(const FrobeniusData& f);

struct TrivialityCase {
  int rank;
  int alpha_degree;  // |alpha_1|
  int from_right;    // p(beta_1 x alpha_1) forced by (id x p)(q x id) = id
  int from_left;     // ... forced by (p x id)(id x q) = id
};
struct TrivialityReport {
  int c = 0;
  int d = 0;
  std::vector<TrivialityCase> cases;
  std::vector<int> surviving_ranks;  // ranks with no contradiction
  std::string to_text() const;
};
// Runs the duality argument for |mu| - |nu| = c - d odd over every rank up
// to max_rank and every degree of alpha_1 in [deg_lo, deg_hi].
TrivialityReport triviality_probe(int c, int d, int max_rank, int deg_lo = -3, int deg_hi = 3);

struct BruteForceReport {
  long long candidates = 0;  // all structure constants in {-1,0,1}
  long long checked = 0;     // passed to check_unsigned in full
  long long accepted = 0;    // nonzero candidates check_unsigned accepted
  long long modules = 0;
};
// Enumerates plain modules of rank 1..max_rank with degrees in [lo, hi] and
// every choice of structure constants in {-1,0,1}.  Candidates failing the
// unsigned (co)unitality prefilter are rejected without building maps; a
// sample of them is still fed to check_unsigned to confirm the verdict.
BruteForceReport brute_force_unsigned(int c, int d, int max_rank, int lo, int hi, unsigned seed = 0);

enum class ConventionDirection { ToCieliebakOancea, FromCieliebakOancea };
// mu' = (-1)^{c(c+1)/2} mu, nu' = (-1)^{d(d+1)/2} nu.  Throws RelationFailure
// if the source relations fail.
FrobeniusData convert_convention(const FrobeniusData& f, ConventionDirection dir);

}  // namespace frobgraph

#endif  // FROBGRAPH_FROBENIUS_HPP
