#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace thetakit {

/// Sparse polynomial over Q in named variables. The variable list is kept
/// sorted and holds exactly the variables that occur, so equal polynomials
/// compare equal.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;  // aligned with vars()

  MultiPoly() = default;
  MultiPoly(const mpq_class& c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(mpq_class(c)) {}

  static MultiPoly var(const std::string& name);

  /// Builds a polynomial from terms over the given variables.
  static MultiPoly from_terms(std::vector<std::string> vars, const std::map<Exponents, mpq_class>& terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, mpq_class>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Constant term (the whole value when is_constant()).
  mpq_class constant() const;
  std::size_t num_terms() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(const std::string& v) const;
  bool is_homogeneous() const;

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  MultiPoly coefficient(const std::string& v, int k) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(int e) const;
  MultiPoly derivative(const std::string& v) const;

  /// Value at a point; every variable must be assigned.
  mpq_class eval(const std::map<std::string, mpq_class>& point) const;

  /// Simultaneous substitution; unassigned variables stay as they are.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;

 private:
  void normalize();  // drop zero coefficients and unused variables
  MultiPoly over(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  std::map<Exponents, mpq_class> terms_;
};

/// a / b when b divides a; throws std::domain_error otherwise.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
MultiPoly determinant(std::vector<std::vector<MultiPoly>> m);

/// Sylvester resultant with respect to v.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v);

/// Expressions like `3*x0^2*x1 - 1/2*x2^3`: + - * ^, parentheses, rational
/// constants and division by constants.
MultiPoly parse_poly(std::string_view text);
std::string format_poly(const MultiPoly& p);

/// Sparse records: a `vars ...` header, then one `e_1 ... e_n num den` line per term.
std::string format_records(const MultiPoly& p);
MultiPoly parse_records(std::string_view text);

/// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
using UPoly = std::vector<mpq_class>;

UPoly to_univariate(const MultiPoly& p, const std::string& v);
int degree(const UPoly& p);
UPoly derivative(const UPoly& p);
UPoly poly_gcd(UPoly a, UPoly b);  // monic, or empty if both are zero
UPoly poly_divide_exact(const UPoly& a, const UPoly& b);

/// Square-free decomposition (Yun): pairs (factor, multiplicity) with
/// monic square-free, pairwise coprime factors of positive degree.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

}  // namespace thetakit
