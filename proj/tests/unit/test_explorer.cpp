#include <doctest.h>

#include "nfund/error.hpp"
#include "nfund/explorer.hpp"
#include "nfund/synthesis.hpp"
#include "test_util.hpp"

using namespace nfund;

namespace {

Node node(long x, long y) { return Node{Rational(x), Rational(y)}; }

Line line(long a, long b, long c) { return Line(Rational(a), Rational(b), Rational(c)); }

}  // namespace

TEST_CASE("line-lattice nodes are the pairwise intersections") {
  const NodeSet tri = chung_yao_lattice({line(1, 0, 0), line(0, 1, 0), line(1, 1, -1)});
  REQUIRE(tri.size() == 3);
  CHECK(tri.contains(node(0, 0)));
  CHECK(tri.contains(node(0, 1)));
  CHECK(tri.contains(node(1, 0)));
  CHECK(is_n_poised(tri, 1));

  CHECK_THROWS_AS(chung_yao_lattice({line(1, 0, 0), line(1, 0, -1), line(0, 1, 0)}), Error);
  // three concurrent lines
  CHECK_THROWS_AS(chung_yao_lattice({line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)}), Error);
}

TEST_CASE("every lattice node has the complement-line product as fundamental") {
  const std::vector<Line> lines = {line(1, 0, 0), line(0, 1, 0), line(1, 1, -1),
                                   line(1, -1, -3), line(1, 2, -7)};
  const int n = static_cast<int>(lines.size()) - 2;
  const NodeSet x = chung_yao_lattice(lines);
  CHECK(is_n_poised(x, n));
  for (std::size_t k = 0; k < x.size(); ++k) {
    std::vector<Factor> complement;
    for (const Line& l : lines) {
      if (!l.contains(x[k])) {
        complement.emplace_back(l);
      }
    }
    CHECK(static_cast<int>(complement.size()) == n);
    const FactoredPoly f = normalize_at(FactoredPoly(Rational(1), complement), x[k]);
    const BivariatePoly p = expand(f, n);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(p.eval(x[i]) == Rational(i == k ? 1 : 0));
    }
  }
}

TEST_CASE("witness search for line covers at n = 2") {
  CHECK_THROWS_AS(search_witness_lines(1, 8), Error);
  CHECK(!search_witness_lines(2, 0).has_value());

  const auto w = search_witness_lines(2, 16);
  REQUIRE(w.has_value());
  CHECK(w->x.size() == 6);
  CHECK(w->n == 2);
  CHECK(w->mode == CoverMode::lines);
  CHECK(w->certificate.rank == 6);
  CHECK(verify_witness(*w));

  // the same set with the node moved to a residual node stops being a
  // witness: that node has a plain two-line fundamental
  Witness moved = *w;
  moved.node_index = 1;
  CHECK(!verify_witness(moved));

  // cardinality mismatch is rejected
  Witness wrong = *w;
  wrong.n = 3;
  CHECK(!verify_witness(wrong));
}

TEST_CASE("line witness is sharp: any single removal restores synthesis") {
  const auto w = search_witness_lines(2, 16);
  REQUIRE(w.has_value());
  for (std::size_t drop = 0; drop < w->x.size(); ++drop) {
    const NodeSet sub(w->x.without(drop));
    CHECK(sub.size() == static_cast<std::size_t>(2 * w->n + 1));
    for (const Node& a : sub) {
      const auto f = synthesize_line_product(a, sub, w->n);
      REQUIRE(f.has_value());
      const BivariatePoly p = expand(*f, w->n);
      for (const Node& q : sub) {
        CHECK(p.eval(q) == Rational(q == a ? 1 : 0));
      }
    }
  }
}

TEST_CASE("witness search for line/conic covers at n = 3") {
  CHECK_THROWS_AS(search_witness_lines_conics(2, 8), Error);
  CHECK(!search_witness_lines_conics(3, 0).has_value());

  const auto w = search_witness_lines_conics(3, 8);
  REQUIRE(w.has_value());
  CHECK(w->x.size() == 9);
  CHECK(w->n == 3);
  CHECK(w->mode == CoverMode::lines_and_conics);
  CHECK(w->certificate.rank == 9);
  CHECK(verify_witness(*w));

  Witness corrupted = *w;
  corrupted.certificate.rank = 8;
  CHECK(!verify_witness(corrupted));

  Witness wrong = *w;
  wrong.n = 4;  // cardinality no longer matches the threshold
  CHECK(!verify_witness(wrong));
}

TEST_CASE("line/conic witness is sharp: any single removal restores synthesis") {
  const auto w = search_witness_lines_conics(3, 8);
  REQUIRE(w.has_value());
  for (std::size_t drop = 0; drop < w->x.size(); ++drop) {
    const NodeSet sub(w->x.without(drop));
    CHECK(sub.size() == static_cast<std::size_t>(2 * w->n + w->n / 2 + 1));
    for (const Node& a : sub) {
      const auto f = synthesize_line_conic_product(a, sub, w->n);
      REQUIRE(f.has_value());
      const BivariatePoly p = expand(*f, w->n);
      for (const Node& q : sub) {
        CHECK(p.eval(q) == Rational(q == a ? 1 : 0));
      }
    }
  }
}
