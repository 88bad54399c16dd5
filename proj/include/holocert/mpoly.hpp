#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holocert/errors.hpp"
#include "holocert/gaussian_rational.hpp"

namespace holocert {

/// Canonical variable order: unknown names (alphabetical) < w < beta2 < beta1 < beta0.
/// Later variables are more significant in the graded lexicographic order.
bool variable_precedes(const std::string& a, const std::string& b);

namespace vars {
inline const std::string w = "w";
inline const std::string beta0 = "beta0";
inline const std::string beta1 = "beta1";
inline const std::string beta2 = "beta2";
}  // namespace vars

struct DivisionResult;
class MPoly;
DivisionResult divide(const MPoly& f, const MPoly& g);

/// Sparse multivariate polynomial over Q(i).
///
/// The variable list is kept sorted by `variable_precedes` and contains
/// exactly the variables that occur with a positive exponent somewhere, so
/// structural equality coincides with polynomial equality.  Terms are
/// ordered by graded lex over that variable order.
class MPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, GR, GrlexLess>;

  MPoly() = default;
  MPoly(GR c);    // NOLINT(google-explicit-constructor)
  MPoly(long c);  // NOLINT(google-explicit-constructor)

  static MPoly variable(const std::string& name);
  /// c * prod var^exp
  static MPoly monomial(GR c, const std::vector<std::pair<std::string, unsigned>>& powers);
  /// sum_k coeffs[k] * var^k
  static MPoly from_coefficients(const std::string& var, const std::vector<MPoly>& coeffs);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool has_var(const std::string& var) const;
  /// Value of a constant polynomial; throws if any variable occurs.
  GR constant_value() const;
  /// Coefficient of the monomial 1.
  GR constant_term() const;

  unsigned degree(const std::string& var) const;
  unsigned total_degree() const;
  /// Total degree counted only over `names`.
  unsigned degree_in(const std::vector<std::string>& names) const;

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  MPoly coeff(const std::string& var, unsigned k) const;
  /// Coefficients of var^0 .. var^deg.
  std::vector<MPoly> coefficients(const std::string& var) const;

  MPoly derivative(const std::string& var) const;
  MPoly substitute(const std::string& var, const MPoly& value) const;
  MPoly substitute(const std::map<std::string, GR>& values) const;
  /// Every occurring variable must be bound, otherwise MissingBinding.
  GR evaluate(const std::map<std::string, GR>& point) const;

  MPoly pow(unsigned e) const;

  /// Greatest term in graded lex order; throws on the zero polynomial.
  std::pair<Exponents, GR> leading_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const GR& c);
  /// Division by a nonzero scalar.
  MPoly& operator/=(const GR& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator/(MPoly a, const GR& c) { return a /= c; }

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Canonical text: graded lex descending, explicit '*' and '^', e.g. "w^2 - 1".
  std::string to_string() const;

 private:
  friend DivisionResult divide(const MPoly& f, const MPoly& g);

  MPoly(std::vector<std::string> vars, TermMap terms);
  TermMap aligned_terms(const std::vector<std::string>& target) const;
  void prune();

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MPoly& p);

/// Raised by exact_div when the divisor does not divide; carries the remainder.
class ExactDivisionError : public Error {
 public:
  explicit ExactDivisionError(MPoly rem)
      : Error("inexact polynomial division, remainder " + rem.to_string()), remainder(std::move(rem)) {}
  MPoly remainder;
};

struct DivisionResult {
  MPoly quotient;
  MPoly remainder;
};

/// Multivariate division of f by a single divisor g under graded lex:
/// f = quotient*g + remainder, no term of remainder divisible by LT(g).
DivisionResult divide(const MPoly& f, const MPoly& g);

/// q with f = q*g exactly; throws ExactDivisionError otherwise.
MPoly exact_div(const MPoly& f, const MPoly& g);

}  // namespace holocert
