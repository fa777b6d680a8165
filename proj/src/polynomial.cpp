#include "nfund/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "nfund/error.hpp"

namespace nfund {

int dim_pi(int n) {
  if (n < 0) {
    throw Error(errc::invalid_input, "negative degree");
  }
  return (n + 1) * (n + 2) / 2;
}

std::vector<std::pair<int, int>> monomial_exponents(int n) {
  std::vector<std::pair<int, int>> exps;
  exps.reserve(dim_pi(n));
  for (int d = 0; d <= n; ++d) {
    for (int i = d; i >= 0; --i) {
      exps.emplace_back(i, d - i);
    }
  }
  return exps;
}

BivariatePoly::BivariatePoly(int n) : n_(n) {
  if (n < 0) {
    throw Error(errc::invalid_input, "negative degree bound");
  }
}

BivariatePoly BivariatePoly::constant(int n, const Rational& value) {
  BivariatePoly p(n);
  p.set_coeff(0, 0, value);
  return p;
}

BivariatePoly BivariatePoly::from_coeffs(int n, const Vec& coeffs) {
  const auto exps = monomial_exponents(n);
  if (coeffs.size() != exps.size()) {
    throw Error(errc::invalid_input, "coefficient vector length does not match degree");
  }
  BivariatePoly p(n);
  for (std::size_t k = 0; k < exps.size(); ++k) {
    p.set_coeff(exps[k].first, exps[k].second, coeffs[k]);
  }
  return p;
}

BivariatePoly BivariatePoly::from_line(const Line& l) {
  BivariatePoly p(1);
  p.set_coeff(1, 0, Rational(l.a()));
  p.set_coeff(0, 1, Rational(l.b()));
  p.set_coeff(0, 0, Rational(l.c()));
  return p;
}

BivariatePoly BivariatePoly::from_conic(const Conic& c) {
  BivariatePoly p(2);
  p.set_coeff(2, 0, Rational(c.q20()));
  p.set_coeff(1, 1, Rational(c.q11()));
  p.set_coeff(0, 2, Rational(c.q02()));
  p.set_coeff(1, 0, Rational(c.q10()));
  p.set_coeff(0, 1, Rational(c.q01()));
  p.set_coeff(0, 0, Rational(c.q00()));
  return p;
}

Rational BivariatePoly::coeff(int i, int j) const {
  const auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BivariatePoly::set_coeff(int i, int j, const Rational& value) {
  if (i < 0 || j < 0 || i + j > n_) {
    throw Error(errc::invalid_input, "exponent outside the degree bound");
  }
  if (value.is_zero()) {
    coeffs_.erase({i, j});
  } else {
    coeffs_[{i, j}] = value;
  }
}

Rational BivariatePoly::eval(const Node& p) const {
  // Powers up to the bound are tiny here (n <= ~8 in every use).
  std::vector<Rational> xp(n_ + 1, Rational(1)), yp(n_ + 1, Rational(1));
  for (int k = 1; k <= n_; ++k) {
    xp[k] = xp[k - 1] * p.x;
    yp[k] = yp[k - 1] * p.y;
  }
  Rational acc(0);
  for (const auto& [exp, c] : coeffs_) {
    acc += c * xp[exp.first] * yp[exp.second];
  }
  return acc;
}

Vec BivariatePoly::coeff_vector() const {
  const auto exps = monomial_exponents(n_);
  Vec v;
  v.reserve(exps.size());
  for (const auto& [i, j] : exps) {
    v.push_back(coeff(i, j));
  }
  return v;
}

BivariatePoly BivariatePoly::embedded(int m) const {
  if (m < n_) {
    throw Error(errc::degree_overflow, "cannot shrink the degree bound");
  }
  BivariatePoly p(m);
  p.coeffs_ = coeffs_;
  return p;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly p(n_);
  for (const auto& [exp, c] : coeffs_) {
    p.coeffs_.emplace(exp, -c);
  }
  return p;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [exp, c] : o.coeffs_) {
    if (exp.first + exp.second > n_) {
      throw Error(errc::degree_overflow, "sum exceeds the degree bound");
    }
    auto it = coeffs_.find(exp);
    if (it == coeffs_.end()) {
      coeffs_.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) {
        coeffs_.erase(it);
      }
    }
  }
  return *this;
}

BivariatePoly operator*(const Rational& s, const BivariatePoly& p) {
  BivariatePoly out(p.n_);
  if (s.is_zero()) {
    return out;
  }
  for (const auto& [exp, c] : p.coeffs_) {
    out.coeffs_.emplace(exp, s * c);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) {
  if (p.is_zero()) {
    return os << "0";
  }
  bool first = true;
  for (const auto& [i, j] : monomial_exponents(p.degree_bound())) {
    const Rational c = p.coeff(i, j);
    if (c.is_zero()) continue;
    if (!first) {
      os << (c.sign() > 0 ? " + " : " - ");
    } else if (c.sign() < 0) {
      os << "-";
    }
    const Rational mag = abs(c);
    const bool has_monomial = i > 0 || j > 0;
    if (mag != Rational(1) || !has_monomial) {
      os << mag.str();
    }
    if (i > 0) {
      os << "x";
      if (i > 1) os << "^" << i;
    }
    if (j > 0) {
      os << "y";
      if (j > 1) os << "^" << j;
    }
    first = false;
  }
  return os;
}

Factor::Factor(Conic c) : f_(std::move(c)) {
  if (!std::get<Conic>(f_).is_proper()) {
    throw Error(errc::invalid_input, "conic factor must have true degree 2");
  }
}

Rational Factor::eval(const Node& p) const {
  return kind() == Kind::line ? line().eval(p) : conic().eval(p);
}

BivariatePoly Factor::poly() const {
  return kind() == Kind::line ? BivariatePoly::from_line(line())
                              : BivariatePoly::from_conic(conic());
}

bool operator<(const Factor& a, const Factor& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.kind() == Factor::Kind::line) return a.line() < b.line();
  return a.conic() < b.conic();
}

std::ostream& operator<<(std::ostream& os, const Factor& f) {
  if (f.kind() == Factor::Kind::line) return os << f.line();
  return os << f.conic();
}

FactoredPoly::FactoredPoly(Rational scale, std::vector<Factor> factors)
    : scale_(std::move(scale)), factors_(std::move(factors)) {
  if (scale_.is_zero()) {
    throw Error(errc::invalid_input, "factored polynomial with zero scale");
  }
  std::sort(factors_.begin(), factors_.end());
}

int FactoredPoly::total_degree() const {
  int d = 0;
  for (const Factor& f : factors_) {
    d += f.degree();
  }
  return d;
}

Rational FactoredPoly::eval(const Node& p) const {
  Rational acc = scale_;
  for (const Factor& f : factors_) {
    acc *= f.eval(p);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const FactoredPoly& f) {
  os << f.scale().str();
  for (const Factor& factor : f.factors()) {
    os << " * (" << factor.poly() << ")";
  }
  return os;
}

namespace {

BivariatePoly multiply(const BivariatePoly& a, const BivariatePoly& b, int cap) {
  BivariatePoly out(cap);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const int i = ea.first + eb.first;
      const int j = ea.second + eb.second;
      const Rational add = ca * cb;
      out.set_coeff(i, j, out.coeff(i, j) + add);
    }
  }
  return out;
}

}  // namespace

BivariatePoly expand(const FactoredPoly& f, int n) {
  if (f.total_degree() > n) {
    throw Error(errc::degree_overflow, "factor degrees exceed the target degree");
  }
  BivariatePoly acc = BivariatePoly::constant(n, f.scale());
  for (const Factor& factor : f.factors()) {
    acc = multiply(acc, factor.poly().embedded(n), n);
  }
  return acc;
}

BivariatePoly normalize_at(const BivariatePoly& p, const Node& a) {
  const Rational v = p.eval(a);
  if (v.is_zero()) {
    throw Error(errc::vanishing_at_node, "polynomial vanishes at the node");
  }
  return (Rational(1) / v) * p;
}

FactoredPoly normalize_at(const FactoredPoly& f, const Node& a) {
  const Rational v = f.eval(a);
  if (v.is_zero()) {
    throw Error(errc::vanishing_at_node, "polynomial vanishes at the node");
  }
  return FactoredPoly(f.scale() / v, f.factors());
}

}  // namespace nfund
