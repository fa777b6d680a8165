#include <doctest.h>

#include "nfund/error.hpp"
#include "nfund/polynomial.hpp"
#include "test_util.hpp"

using namespace nfund;

namespace {

Node node(long x, long y) { return Node{Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("dim_pi") {
  CHECK(dim_pi(0) == 1);
  CHECK(dim_pi(2) == 6);
  CHECK(dim_pi(5) == 21);
  CHECK_THROWS_AS(dim_pi(-1), Error);
}

TEST_CASE("monomial order is graded-lex with x before y") {
  const auto exps = monomial_exponents(2);
  const std::vector<std::pair<int, int>> expected = {{0, 0}, {1, 0}, {0, 1},
                                                     {2, 0}, {1, 1}, {0, 2}};
  CHECK(exps == expected);
  for (int n = 0; n <= 6; ++n) {
    CHECK(static_cast<int>(monomial_exponents(n).size()) == dim_pi(n));
  }
}

TEST_CASE("evaluation") {
  CHECK(BivariatePoly(3).eval(node(4, -7)).is_zero());

  BivariatePoly p(1);  // 1 + x + 2y
  p.set_coeff(0, 0, Rational(1));
  p.set_coeff(1, 0, Rational(1));
  p.set_coeff(0, 1, Rational(2));
  CHECK(p.eval(node(1, 0)) == Rational(2));

  BivariatePoly circle(2);  // x^2 + y^2 - 1
  circle.set_coeff(2, 0, Rational(1));
  circle.set_coeff(0, 2, Rational(1));
  circle.set_coeff(0, 0, Rational(-1));
  CHECK(circle.eval(Node{Rational(3, 5), Rational(4, 5)}).is_zero());
}

TEST_CASE("coefficient vector round-trip") {
  const Vec coeffs = {Rational(1), Rational(0), Rational(-2),
                      Rational(3), Rational(0), Rational(1, 2)};
  const BivariatePoly p = BivariatePoly::from_coeffs(2, coeffs);
  CHECK(p.coeff_vector() == coeffs);
  CHECK(p.coeff(2, 0) == Rational(3));
  CHECK(p.coeff(1, 1) == Rational(0));
  CHECK_THROWS_AS(BivariatePoly::from_coeffs(2, Vec{Rational(1)}), Error);
}

TEST_CASE("expand") {
  CHECK(expand(FactoredPoly(Rational(1), {}), 3) == BivariatePoly::constant(3, Rational(1)));

  const FactoredPoly f(Rational(-1), {Factor(Line(Rational(1), Rational(1), Rational(-1)))});
  BivariatePoly expected(1);  // 1 - x - y
  expected.set_coeff(0, 0, Rational(1));
  expected.set_coeff(1, 0, Rational(-1));
  expected.set_coeff(0, 1, Rational(-1));
  CHECK(expand(f, 1) == expected);

  const FactoredPoly g(Rational(-1),
                       {Factor(Conic(Rational(1), Rational(0), Rational(1), Rational(0),
                                     Rational(0), Rational(-1)))});
  BivariatePoly disc(2);  // 1 - x^2 - y^2
  disc.set_coeff(0, 0, Rational(1));
  disc.set_coeff(2, 0, Rational(-1));
  disc.set_coeff(0, 2, Rational(-1));
  CHECK(expand(g, 2) == disc);

  CHECK_THROWS_AS(expand(g, 1), Error);  // conic does not fit in degree 1
}

TEST_CASE("normalize_at") {
  CHECK(normalize_at(BivariatePoly::constant(2, Rational(2)), node(9, 9)) ==
        BivariatePoly::constant(2, Rational(1)));

  BivariatePoly p(1);  // x + y - 1
  p.set_coeff(1, 0, Rational(1));
  p.set_coeff(0, 1, Rational(1));
  p.set_coeff(0, 0, Rational(-1));
  const BivariatePoly q = normalize_at(p, node(0, 0));
  CHECK(q.coeff(0, 0) == Rational(1));
  CHECK(q.coeff(1, 0) == Rational(-1));
  CHECK(q.coeff(0, 1) == Rational(-1));

  BivariatePoly x_only(1);
  x_only.set_coeff(1, 0, Rational(1));
  CHECK_THROWS_AS(normalize_at(x_only, node(0, 0)), Error);

  const FactoredPoly f(Rational(3), {Factor(Line(Rational(1), Rational(1), Rational(-1)))});
  const FactoredPoly g = normalize_at(f, node(0, 0));
  CHECK(g.eval(node(0, 0)) == Rational(1));
  CHECK(g.factors() == f.factors());
}

TEST_CASE("factored polynomials enforce their invariants") {
  CHECK_THROWS_AS(FactoredPoly(Rational(0), {}), Error);
  // improper conic cannot be a factor
  CHECK_THROWS_AS(Factor(Conic(Rational(0), Rational(0), Rational(0), Rational(1),
                               Rational(1), Rational(-1))),
                  Error);
  // factors come out sorted: lines first, canonical order inside
  const Factor conic(Conic(Rational(1), Rational(0), Rational(1), Rational(0), Rational(0),
                           Rational(-1)));
  const Factor line(Line(Rational(1), Rational(0), Rational(0)));
  const FactoredPoly f(Rational(1), {conic, line});
  CHECK(f.factors()[0] == line);
  CHECK(f.factors()[1] == conic);
}

TEST_CASE("expansion matches factor-wise evaluation") {
  testutil::Rng rng(777);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Factor> factors;
    const int n_lines = static_cast<int>(rng() % 3);
    const bool add_conic = rng() % 2 == 0;
    for (int i = 0; i < n_lines; ++i) {
      const Node p = testutil::random_node(rng, 4, 2), q = testutil::random_node(rng, 4, 2);
      if (p == q) continue;
      factors.emplace_back(line_through(p, q));
    }
    if (add_conic) {
      // a random circle: (x-a)^2 + (y-b)^2 = r^2 with r^2 != 0
      const Rational a = testutil::random_rational(rng, 3, 2);
      const Rational b = testutil::random_rational(rng, 3, 2);
      const Rational r2 = abs(testutil::random_rational(rng, 3, 2)) + Rational(1);
      factors.emplace_back(Conic(Rational(1), Rational(0), Rational(1), Rational(-2) * a,
                                 Rational(-2) * b, a * a + b * b - r2));
    }
    Rational scale = testutil::random_rational(rng, 5, 3);
    if (scale.is_zero()) scale = Rational(1);
    const FactoredPoly f(scale, factors);
    const int n = f.total_degree();
    const BivariatePoly p = expand(f, n);
    for (int probe = 0; probe < 5; ++probe) {
      const Node at = testutil::random_node(rng, 6, 3);
      CHECK(p.eval(at) == f.eval(at));
    }
  }
}
