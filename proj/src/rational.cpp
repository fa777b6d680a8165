#include "nfund/rational.hpp"

#include <ostream>

namespace nfund {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) {
    throw Error(errc::invalid_input, "rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw Error(errc::invalid_input, "division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw Error(errc::invalid_input, "division by zero");
  }
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Integer(text));
    }
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(errc::invalid_input, "malformed rational: \"" + text + "\"");
  }
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += "/" + v_.get_den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) {
  return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& base, int exp) {
  if (exp < 0) {
    throw Error(errc::invalid_input, "negative exponent");
  }
  Rational result(1);
  for (int i = 0; i < exp; ++i) {
    result *= base;
  }
  return result;
}

}  // namespace nfund
