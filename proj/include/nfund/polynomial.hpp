#pragma once

#include <iosfwd>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "nfund/geometry.hpp"
#include "nfund/linalg.hpp"
#include "nfund/rational.hpp"

namespace nfund {

/// dim of the space of bivariate polynomials of total degree <= n,
/// i.e. (n+1)(n+2)/2.
int dim_pi(int n);

/// Exponent pairs (i, j) with i + j <= n in graded-lex order, x before y:
/// (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...
/// This order fixes every serialized coefficient vector and the
/// collocation matrix columns.
std::vector<std::pair<int, int>> monomial_exponents(int n);

/// Element of the degree <= n polynomial space as a sparse exponent ->
/// coefficient map. Zero coefficients are never stored. Equality is
/// mathematical (the degree bound does not participate).
class BivariatePoly {
public:
  explicit BivariatePoly(int n);

  static BivariatePoly constant(int n, const Rational& value);
  /// Coefficients in graded-lex order, dim_pi(n) entries.
  static BivariatePoly from_coeffs(int n, const Vec& coeffs);
  static BivariatePoly from_line(const Line& l);
  static BivariatePoly from_conic(const Conic& c);

  int degree_bound() const { return n_; }

  Rational coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rational& value);

  Rational eval(const Node& p) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Graded-lex coefficient vector of length dim_pi(degree_bound()).
  Vec coeff_vector() const;

  /// Same polynomial with a larger degree bound m >= degree_bound().
  BivariatePoly embedded(int m) const;

  const std::map<std::pair<int, int>, Rational>& terms() const { return coeffs_; }

  BivariatePoly operator-() const;
  BivariatePoly& operator+=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) {
    a += b;
    return a;
  }
  friend BivariatePoly operator*(const Rational& s, const BivariatePoly& p);

  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) {
    return !(a == b);
  }

  friend std::ostream& operator<<(std::ostream& os, const BivariatePoly& p);

private:
  int n_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

/// A line or a proper conic used as one factor of a factored polynomial.
class Factor {
public:
  enum class Kind { line, conic };

  explicit Factor(Line l) : f_(std::move(l)) {}
  explicit Factor(Conic c);

  Kind kind() const { return f_.index() == 0 ? Kind::line : Kind::conic; }
  int degree() const { return f_.index() == 0 ? 1 : 2; }

  const Line& line() const { return std::get<Line>(f_); }
  const Conic& conic() const { return std::get<Conic>(f_); }

  Rational eval(const Node& p) const;
  bool contains(const Node& p) const { return eval(p).is_zero(); }
  BivariatePoly poly() const;

  /// Canonical order: lines before conics, then coefficient order.
  friend bool operator<(const Factor& a, const Factor& b);
  friend bool operator==(const Factor& a, const Factor& b) { return a.f_ == b.f_; }
  friend bool operator!=(const Factor& a, const Factor& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Factor& f);

private:
  std::variant<Line, Conic> f_;
};

/// scale * product of line/conic factors, factors kept canonically sorted.
class FactoredPoly {
public:
  FactoredPoly(Rational scale, std::vector<Factor> factors);

  const Rational& scale() const { return scale_; }
  const std::vector<Factor>& factors() const { return factors_; }

  int total_degree() const;
  Rational eval(const Node& p) const;

  friend bool operator==(const FactoredPoly& a, const FactoredPoly& b) {
    return a.scale_ == b.scale_ && a.factors_ == b.factors_;
  }

  friend std::ostream& operator<<(std::ostream& os, const FactoredPoly& f);

private:
  Rational scale_;
  std::vector<Factor> factors_;
};

/// Coefficient-level product of the scale and all factors, as an element
/// of the degree <= n space. Throws degree_overflow when the factor
/// degrees sum past n.
BivariatePoly expand(const FactoredPoly& f, int n);

/// p scaled so that its value at `a` is exactly 1. Throws
/// vanishing_at_node when p(a) = 0.
BivariatePoly normalize_at(const BivariatePoly& p, const Node& a);
FactoredPoly normalize_at(const FactoredPoly& f, const Node& a);

}  // namespace nfund
