#ifndef FROBGRAPH_GRMOD_HPP
#define FROBGRAPH_GRMOD_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "frobgraph/scalar.hpp"

namespace frobgraph {

// One tensor factor: degree -> basis labels.
struct Factor {
  std::map<int, std::vector<std::string>> components;
  bool operator==(const Factor& o) const { return components == o.components; }
};

// Position of a basis vector of one factor.
using FactorIndex = std::pair<int, int>;  // (degree, index within degree)
using MultiIndex = std::vector<FactorIndex>;

// A finite free graded module presented as a tensor product of plain factors.
// The unit is the empty product; a plain module has exactly one factor.
// Basis order in every degree is left-major lexicographic in (degree, index)
// of the factors, so tensor products are strictly associative and unital.
class GradedModule {
 public:
  GradedModule();  // the unit
  explicit GradedModule(std::vector<Factor> factors);

  static GradedModule unit() { return GradedModule(); }
  static GradedModule zero() { return GradedModule(std::vector<Factor>{Factor{}}); }
  static GradedModule plain(const std::map<int, std::vector<std::string>>& components);
  // Line of rank one in the given degree.
  static GradedModule line(int degree, const std::string& label);

  const std::vector<Factor>& factors() const;
  bool is_unit() const { return factors().empty(); }
  bool is_plain() const { return factors().size() == 1; }

  std::vector<int> degrees() const;
  int rank(int degree) const;
  int total_rank() const;
  const std::vector<std::string>& labels(int degree) const;
  const MultiIndex& multi_index(int degree, int pos) const;
  // Inverse of multi_index; throws InvalidInput for an unknown index.
  std::pair<int, int> locate(const MultiIndex& mi) const;
  // Finds a basis vector by label; returns (degree, pos) or throws.
  std::pair<int, int> find(const std::string& label) const;
  std::map<int, std::vector<std::string>> components() const;

  bool operator==(const GradedModule& o) const;
  bool operator!=(const GradedModule& o) const { return !(*this == o); }

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

GradedModule tensor_module(const GradedModule& a, const GradedModule& b);
GradedModule tensor_power(const GradedModule& a, int k);
// Flattens to a plain module with the same basis and degrees.
GradedModule flatten(const GradedModule& a);
GradedModule suspend_module(const GradedModule& a);
GradedModule desuspend_module(const GradedModule& a);
GradedModule dual_module(const GradedModule& a);

class Element {
 public:
  explicit Element(GradedModule m) : module_(std::move(m)) {}
  Element(GradedModule m, std::map<std::pair<int, int>, Rational> coeffs);
  static Element basis(const GradedModule& m, int degree, int pos);

  const GradedModule& module() const { return module_; }
  const std::map<std::pair<int, int>, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int degree, int pos) const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element.
  int degree() const;

  Element operator+(const Element& o) const;
  Element operator*(const Rational& q) const;
  bool operator==(const Element& o) const { return module_ == o.module_ && coeffs_ == o.coeffs_; }

 private:
  GradedModule module_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

// Homogeneous linear map of degree n; block i maps source degree i to target
// degree i + n.  Absent blocks are zero.
class GradedMap {
 public:
  GradedMap(GradedModule source, GradedModule target, int degree);
  GradedMap(GradedModule source, GradedModule target, int degree, std::map<int, Matrix> blocks);

  const GradedModule& source() const { return source_; }
  const GradedModule& target() const { return target_; }
  int degree() const { return degree_; }
  const std::map<int, Matrix>& blocks() const { return blocks_; }
  Matrix block(int source_degree) const;
  Rational entry(int source_degree, int row, int col) const;
  Element apply(const Element& x) const;
  bool is_zero() const { return blocks_.empty(); }

  bool operator==(const GradedMap& o) const;
  bool operator!=(const GradedMap& o) const { return !(*this == o); }

 private:
  GradedModule source_;
  GradedModule target_;
  int degree_;
  std::map<int, Matrix> blocks_;
};

// Accumulates entries of a map; build() drops zero blocks.
class MapBuilder {
 public:
  MapBuilder(GradedModule source, GradedModule target, int degree);
  // Adds v to the coefficient of target basis (sdeg + degree, tpos) in the image of (sdeg, spos).
  void add(int sdeg, int spos, int tpos, const Rational& v);
  void add(const MultiIndex& src, const MultiIndex& tgt, const Rational& v);
  GradedMap build() const;

 private:
  GradedModule source_;
  GradedModule target_;
  int degree_;
  std::map<int, Matrix> blocks_;
};

GradedMap identity(const GradedModule& a);
GradedMap zero_map(const GradedModule& source, const GradedModule& target, int degree);
GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);
GradedMap twist(const GradedModule& a, const GradedModule& b);
GradedMap operator+(const GradedMap& f, const GradedMap& g);
GradedMap operator-(const GradedMap& f, const GradedMap& g);
GradedMap operator*(const Rational& q, const GradedMap& f);
GradedMap operator-(const GradedMap& f);

// f : A^{(x)k} -> A^{(x)l} re-expressed between powers of flatten(A).
GradedMap flatten_power_map(const GradedMap& f, const GradedModule& a, int k, int l);
// Sigma f = sigma_{k,l} (x) f for f : A^{(x)k} -> A^{(x)l}.
GradedMap suspend_map(const GradedMap& f, const GradedModule& a, int k, int l);
// Inverse of suspend_map: f is a map between powers of a = suspend_module(b).
GradedMap desuspend_map(const GradedMap& f, const GradedModule& a, int k, int l);
GradedMap dual_map(const GradedMap& f);
// a -> (-1)^{|a|} a^vv, the natural isomorphism A -> A^vv.
GradedMap double_dual_iso(const GradedModule& a);
// Nested evaluation: phi in A^v with A = A_1 (x) ... (x) A_n pairs its last
// factor with the first factor of x, and so on inwards, with no sign.
Rational evaluate_nested(const Element& phi, const Element& x);
// Componentwise evaluation (phi_1 (x) ... )(x_1 (x) ...) with Koszul signs.
Rational evaluate_componentwise(const Element& phi, const Element& x);

std::string to_string(const GradedMap& f);

}  // namespace frobgraph

#endif  // FROBGRAPH_GRMOD_HPP
