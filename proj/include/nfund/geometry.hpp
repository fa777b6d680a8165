#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "nfund/rational.hpp"

namespace nfund {

/// A point of the plane with exact rational coordinates.
struct Node {
  Rational x;
  Rational y;

  friend bool operator==(const Node& a, const Node& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Node& a, const Node& b) { return !(a == b); }
  friend bool operator<(const Node& a, const Node& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  friend std::ostream& operator<<(std::ostream& os, const Node& p);
};

/// The line a.x + b.y + c = 0 in canonical form: coefficients are coprime
/// integers and the first nonzero of (a, b, c) is positive, so equal lines
/// have equal coefficients.
class Line {
public:
  Line(const Rational& a, const Rational& b, const Rational& c);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }

  Rational eval(const Node& p) const;
  bool contains(const Node& p) const { return eval(p).is_zero(); }

  friend bool operator==(const Line& l, const Line& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.c_ == r.c_;
  }
  friend bool operator!=(const Line& l, const Line& r) { return !(l == r); }
  friend bool operator<(const Line& l, const Line& r);

  friend std::ostream& operator<<(std::ostream& os, const Line& l);

private:
  Integer a_, b_, c_;
};

/// The curve q20.x^2 + q11.xy + q02.y^2 + q10.x + q01.y + q00 = 0 in the
/// same canonical integer form (field order q20, q11, q02, q10, q01, q00).
/// Members of a linear family of conics may have a vanishing quadratic
/// part (a line viewed inside the family); is_proper() distinguishes true
/// degree-2 curves. Factors admit only proper conics.
class Conic {
public:
  Conic(const Rational& q20, const Rational& q11, const Rational& q02,
        const Rational& q10, const Rational& q01, const Rational& q00);

  const Integer& q20() const { return q_[0]; }
  const Integer& q11() const { return q_[1]; }
  const Integer& q02() const { return q_[2]; }
  const Integer& q10() const { return q_[3]; }
  const Integer& q01() const { return q_[4]; }
  const Integer& q00() const { return q_[5]; }
  const std::array<Integer, 6>& coeffs() const { return q_; }

  /// True when the quadratic part is nonzero (true degree 2).
  bool is_proper() const;

  Rational eval(const Node& p) const;
  bool contains(const Node& p) const { return eval(p).is_zero(); }

  friend bool operator==(const Conic& l, const Conic& r) { return l.q_ == r.q_; }
  friend bool operator!=(const Conic& l, const Conic& r) { return !(l == r); }
  friend bool operator<(const Conic& l, const Conic& r) { return l.q_ < r.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Conic& c);

private:
  std::array<Integer, 6> q_;
};

/// Canonical line through two distinct points. Throws degenerate_input
/// when p = q.
Line line_through(const Node& p, const Node& q);

bool on_line(const Line& l, const Node& p);

/// Largest number of the given distinct nodes lying on one line, with a
/// witness line when that number is >= 2. Ties favor the canonically
/// smallest line. Throws invalid_input on duplicate nodes.
std::pair<std::size_t, std::optional<Line>> max_collinear(const std::vector<Node>& nodes);

/// Every line through `a` carrying at least `threshold` of the other
/// nodes, with the incident nodes, ordered canonically.
/// Requires a not among others.
std::vector<std::pair<Line, std::vector<Node>>> heavy_lines_through(
    const Node& a, const std::vector<Node>& others, std::size_t threshold);

/// Basis of the linear family of conics vanishing on 1..5 distinct
/// points, canonicalized, ordered deterministically. Size is 6 - rank of
/// the collocation matrix, always >= 1. Family members with vanishing
/// quadratic part are returned as improper conics.
std::vector<Conic> conics_through(const std::vector<Node>& points);

/// True when the associated 3x3 symmetric matrix has nonzero determinant.
/// Degenerate conics are line pairs (possibly coincident or complex).
bool conic_is_nondegenerate(const Conic& c);

/// Largest number of the given distinct nodes lying on one conic,
/// degenerate conics included. Any five points lie on some conic, so for
/// fewer than six nodes this is the node count.
std::size_t max_coconic(const std::vector<Node>& nodes);

/// Exact membership filter preserving input order.
std::vector<Node> nodes_on_conic(const Conic& c, const std::vector<Node>& nodes);

}  // namespace nfund
