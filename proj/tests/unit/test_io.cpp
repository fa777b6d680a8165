#include <doctest.h>

#include "nfund/error.hpp"
#include "nfund/io.hpp"

using namespace nfund;

namespace {

Node node(long x, long y) { return Node{Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("rational json forms") {
  CHECK(rational_from_json(json(5)) == Rational(5));
  CHECK(rational_from_json(json("-3/7")) == Rational(-3, 7));
  CHECK(rational_to_json(Rational(22, 7)) == json("22/7"));
  CHECK(rational_to_json(Rational(-4)) == json("-4"));
  CHECK_THROWS_AS(rational_from_json(json(1.5)), Error);
  CHECK_THROWS_AS(rational_from_json(json("x")), Error);
}

TEST_CASE("node-set documents round-trip") {
  const json j = parse_json(R"({"n": 2, "nodes": [[0, 0], ["1/2", "-2/3"], [3, "4"]]})");
  const NodeSetDocument doc = nodeset_from_json(j);
  CHECK(doc.n == 2);
  REQUIRE(doc.nodes.size() == 3);
  CHECK(doc.nodes[1] == Node{Rational(1, 2), Rational(-2, 3)});

  const NodeSetDocument again = nodeset_from_json(nodeset_to_json(doc));
  CHECK(again.n == doc.n);
  CHECK(again.nodes == doc.nodes);

  CHECK_THROWS_AS(nodeset_from_json(parse_json(R"({"n": 1})")), Error);
  CHECK_THROWS_AS(nodeset_from_json(parse_json(R"({"n": -1, "nodes": []})")), Error);
  CHECK_THROWS_AS(nodeset_from_json(parse_json(R"({"n": 1, "nodes": [[0,0],[0,0]]})")),
                  Error);
  CHECK_THROWS_AS(parse_json("{not json"), Error);
}

TEST_CASE("values documents") {
  const auto values = values_from_json(parse_json(R"({"values": [1, "2/3", -4]})"));
  REQUIRE(values.size() == 3);
  CHECK(values[1] == Rational(2, 3));
  CHECK_THROWS_AS(values_from_json(parse_json(R"({"data": []})")), Error);
}

TEST_CASE("polynomial serialization keeps graded-lex order") {
  BivariatePoly p(2);
  p.set_coeff(0, 2, Rational(1, 3));
  p.set_coeff(0, 0, Rational(-1));
  p.set_coeff(1, 0, Rational(2));
  const json j = poly_to_json(p);
  CHECK(j["n"] == 2);
  REQUIRE(j["terms"].size() == 3);
  // ascending graded-lex: (0,0), (1,0), (0,2)
  CHECK(j["terms"][0] == json::array({0, 0, "-1"}));
  CHECK(j["terms"][1] == json::array({1, 0, "2"}));
  CHECK(j["terms"][2] == json::array({0, 2, "1/3"}));
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("factored serialization round-trips") {
  const FactoredPoly f(
      Rational(-3, 2),
      {Factor(Line(Rational(1), Rational(1), Rational(-1))),
       Factor(Conic(Rational(1), Rational(0), Rational(1), Rational(0), Rational(0),
                    Rational(-1)))});
  const json j = factored_to_json(f);
  const FactoredPoly g = factored_from_json(j);
  CHECK(g == f);
  CHECK_THROWS_AS(factored_from_json(parse_json(R"({"scale": "1"})")), Error);
  CHECK_THROWS_AS(
      factored_from_json(parse_json(
          R"({"scale": "1", "factors": [{"kind": "line", "coeffs": ["1","2"]}]})")),
      Error);
}

TEST_CASE("witness serialization round-trips") {
  Witness w;
  w.x = NodeSet({node(0, 0), node(1, 0), node(0, 1), node(2, 3)});
  w.n = 1;
  w.node_index = 2;
  w.mode = CoverMode::lines;
  w.certificate.rank = 4;
  w.certificate.search_space = 17;
  const json j = witness_to_json(w);
  const Witness v = witness_from_json(j);
  CHECK(v.x == w.x);
  CHECK(v.n == w.n);
  CHECK(v.node_index == w.node_index);
  CHECK(v.mode == w.mode);
  CHECK(v.certificate.rank == 4);
  CHECK(v.certificate.search_space == 17);

  json bad = j;
  bad["mode"] = "cubics";
  CHECK_THROWS_AS(witness_from_json(bad), Error);
  json mismatched = j;
  mismatched["node_index"] = 9;
  CHECK_THROWS_AS(witness_from_json(mismatched), Error);
}
