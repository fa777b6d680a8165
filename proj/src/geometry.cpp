#include "nfund/geometry.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "nfund/error.hpp"
#include "nfund/linalg.hpp"

namespace nfund {

namespace {

// Scales rational coefficients to coprime integers with the first nonzero
// entry positive. Expects at least one nonzero input.
template <std::size_t N>
std::array<Integer, N> canonical_coeffs(const std::array<Rational, N>& v) {
  Integer lcm(1);
  for (const Rational& r : v) {
    Integer den = r.den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::array<Integer, N> out;
  Integer gcd(0);
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = v[i].num() * (lcm / v[i].den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), out[i].get_mpz_t());
  }
  for (std::size_t i = 0; i < N; ++i) {
    out[i] /= gcd;
  }
  for (std::size_t i = 0; i < N; ++i) {
    if (out[i] != 0) {
      if (out[i] < 0) {
        for (auto& z : out) z = -z;
      }
      break;
    }
  }
  return out;
}

void write_term(std::ostream& os, const Integer& coeff, const char* monomial, bool& first) {
  if (coeff == 0) return;
  if (coeff > 0 && !first) os << "+";
  if (coeff == -1 && monomial[0] != '\0') {
    os << "-";
  } else if (coeff != 1 || monomial[0] == '\0') {
    os << coeff.get_str();
  }
  os << monomial;
  first = false;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Node& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

Line::Line(const Rational& a, const Rational& b, const Rational& c) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(errc::degenerate_input, "line with zero direction coefficients");
  }
  const auto z = canonical_coeffs<3>({a, b, c});
  a_ = z[0];
  b_ = z[1];
  c_ = z[2];
}

Rational Line::eval(const Node& p) const {
  return Rational(a_) * p.x + Rational(b_) * p.y + Rational(c_);
}

bool operator<(const Line& l, const Line& r) {
  if (l.a_ != r.a_) return l.a_ < r.a_;
  if (l.b_ != r.b_) return l.b_ < r.b_;
  return l.c_ < r.c_;
}

std::ostream& operator<<(std::ostream& os, const Line& l) {
  bool first = true;
  write_term(os, l.a(), "x", first);
  write_term(os, l.b(), "y", first);
  write_term(os, l.c(), "", first);
  if (first) os << "0";
  return os << " = 0";
}

Conic::Conic(const Rational& q20, const Rational& q11, const Rational& q02,
             const Rational& q10, const Rational& q01, const Rational& q00) {
  if (q20.is_zero() && q11.is_zero() && q02.is_zero() && q10.is_zero() &&
      q01.is_zero() && q00.is_zero()) {
    throw Error(errc::degenerate_input, "conic with all coefficients zero");
  }
  q_ = canonical_coeffs<6>({q20, q11, q02, q10, q01, q00});
}

bool Conic::is_proper() const {
  return q_[0] != 0 || q_[1] != 0 || q_[2] != 0;
}

Rational Conic::eval(const Node& p) const {
  const Rational x = p.x, y = p.y;
  return Rational(q_[0]) * x * x + Rational(q_[1]) * x * y + Rational(q_[2]) * y * y +
         Rational(q_[3]) * x + Rational(q_[4]) * y + Rational(q_[5]);
}

std::ostream& operator<<(std::ostream& os, const Conic& c) {
  bool first = true;
  write_term(os, c.q20(), "x^2", first);
  write_term(os, c.q11(), "xy", first);
  write_term(os, c.q02(), "y^2", first);
  write_term(os, c.q10(), "x", first);
  write_term(os, c.q01(), "y", first);
  write_term(os, c.q00(), "", first);
  if (first) os << "0";
  return os << " = 0";
}

Line line_through(const Node& p, const Node& q) {
  if (p == q) {
    throw Error(errc::degenerate_input, "line through two equal points");
  }
  const Rational a = p.y - q.y;
  const Rational b = q.x - p.x;
  const Rational c = p.x * q.y - q.x * p.y;
  return Line(a, b, c);
}

bool on_line(const Line& l, const Node& p) {
  return l.contains(p);
}

std::pair<std::size_t, std::optional<Line>> max_collinear(const std::vector<Node>& nodes) {
  {
    std::set<Node> seen(nodes.begin(), nodes.end());
    if (seen.size() != nodes.size()) {
      throw Error(errc::invalid_input, "duplicate nodes");
    }
  }
  if (nodes.size() <= 1) {
    return {nodes.size(), std::nullopt};
  }
  std::size_t best = 2;
  std::optional<Line> witness;
  std::set<Line> counted;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const Line l = line_through(nodes[i], nodes[j]);
      if (!counted.insert(l).second) {
        continue;
      }
      std::size_t count = 0;
      for (const Node& p : nodes) {
        if (l.contains(p)) ++count;
      }
      if (count > best || (count == best && (!witness || l < *witness))) {
        best = count;
        witness = l;
      }
    }
  }
  return {best, witness};
}

std::vector<std::pair<Line, std::vector<Node>>> heavy_lines_through(
    const Node& a, const std::vector<Node>& others, std::size_t threshold) {
  std::map<Line, std::vector<Node>> groups;
  for (const Node& p : others) {
    if (p == a) {
      throw Error(errc::invalid_input, "distinguished node listed among the others");
    }
    groups[line_through(a, p)].push_back(p);
  }
  std::vector<std::pair<Line, std::vector<Node>>> heavy;
  for (auto& [line, members] : groups) {
    if (members.size() >= threshold) {
      std::sort(members.begin(), members.end());
      heavy.emplace_back(line, std::move(members));
    }
  }
  return heavy;
}

std::vector<Conic> conics_through(const std::vector<Node>& points) {
  if (points.empty() || points.size() > 5) {
    throw Error(errc::invalid_input, "conic family needs 1..5 points");
  }
  {
    std::set<Node> seen(points.begin(), points.end());
    if (seen.size() != points.size()) {
      throw Error(errc::invalid_input, "duplicate nodes");
    }
  }
  // Collocation columns in ascending graded-lex order: 1, x, y, x^2, xy, y^2.
  Matrix m(points.size(), 6);
  for (std::size_t r = 0; r < points.size(); ++r) {
    const Rational x = points[r].x, y = points[r].y;
    m.at(r, 0) = Rational(1);
    m.at(r, 1) = x;
    m.at(r, 2) = y;
    m.at(r, 3) = x * x;
    m.at(r, 4) = x * y;
    m.at(r, 5) = y * y;
  }
  std::vector<Conic> family;
  for (const Vec& v : nullspace(m)) {
    family.emplace_back(v[3], v[4], v[5], v[1], v[2], v[0]);
  }
  return family;
}

bool conic_is_nondegenerate(const Conic& c) {
  const Rational a(c.q20()), b(c.q11()), d(c.q02());
  const Rational e(c.q10()), f(c.q01()), g(c.q00());
  const Rational half(1, 2);
  // det [[a, b/2, e/2], [b/2, d, f/2], [e/2, f/2, g]]
  const Rational det = a * (d * g - half * f * half * f) -
                       half * b * (half * b * g - half * f * half * e) +
                       half * e * (half * b * half * f - d * half * e);
  return !det.is_zero();
}

std::size_t max_coconic(const std::vector<Node>& nodes) {
  {
    std::set<Node> seen(nodes.begin(), nodes.end());
    if (seen.size() != nodes.size()) {
      throw Error(errc::invalid_input, "duplicate nodes");
    }
  }
  const std::size_t s = nodes.size();
  if (s <= 5) {
    return s;
  }
  std::size_t best = 5;
  // Conics determined by a 5-subset (covers every irreducible case).
  std::set<Conic> counted;
  for (std::size_t a = 0; a + 4 < s; ++a)
    for (std::size_t b = a + 1; b + 3 < s; ++b)
      for (std::size_t c = b + 1; c + 2 < s; ++c)
        for (std::size_t d = c + 1; d + 1 < s; ++d)
          for (std::size_t e = d + 1; e < s; ++e) {
            const auto family =
                conics_through({nodes[a], nodes[b], nodes[c], nodes[d], nodes[e]});
            if (family.size() != 1 || !counted.insert(family.front()).second) {
              continue;
            }
            best = std::max(best, nodes_on_conic(family.front(), nodes).size());
          }
  // Line pairs built from a line with >= 3 nodes plus the best second
  // line; pairs of 2-node lines reach only 4 and never matter here.
  std::set<Line> lines_seen;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      const Line l = line_through(nodes[i], nodes[j]);
      if (!lines_seen.insert(l).second) {
        continue;
      }
      std::vector<Node> off;
      for (const Node& p : nodes) {
        if (!l.contains(p)) off.push_back(p);
      }
      const std::size_t on = s - off.size();
      if (on < 3) {
        continue;
      }
      const std::size_t second = off.size() <= 1 ? off.size() : max_collinear(off).first;
      best = std::max(best, on + second);
    }
  }
  return best;
}

std::vector<Node> nodes_on_conic(const Conic& c, const std::vector<Node>& nodes) {
  std::vector<Node> out;
  for (const Node& p : nodes) {
    if (c.contains(p)) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace nfund
