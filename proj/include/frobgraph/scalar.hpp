#ifndef FROBGRAPH_SCALAR_HPP
#define FROBGRAPH_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace frobgraph {

using Rational = boost::multiprecision::mpq_rational;
using Matrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

enum class ErrorKind {
  InvalidInput,
  ShapeMismatch,
  Overflow,
  TadpoleCollapse,
  ExternalCollapse,
  SideViolation,
  GluabilityFailure,
  ParameterMismatch,
  DegeneratePairing,
  RelationFailure,
  FlavorMismatch,
  PlanarTwistRequired,
  UnknownName,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Parses "p/q", "p" or "-p/q". Throws InvalidInput on anything else.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

inline int sign_of_parity(long long e) { return (e % 2 == 0) ? 1 : -1; }

int checked_add(int a, int b);
int checked_mul(int a, int b);

}  // namespace frobgraph

#endif  // FROBGRAPH_SCALAR_HPP
