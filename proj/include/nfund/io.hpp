#pragma once

#include <string>

#include <json.hpp>

#include "nfund/explorer.hpp"
#include "nfund/independence.hpp"
#include "nfund/interpolation.hpp"
#include "nfund/polynomial.hpp"

namespace nfund {

using nlohmann::json;

/// On-disk node-set document: {"n": int, "nodes": [[c, c], ...]} with
/// coordinates given as integers or "p/q" strings.
struct NodeSetDocument {
  int n = 0;
  NodeSet nodes;
};

/// Rationals travel as strings in lowest terms ("5", "-3/7"); integers
/// are also accepted on input.
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

NodeSetDocument nodeset_from_json(const json& j);
json nodeset_to_json(const NodeSetDocument& doc);
NodeSetDocument load_nodeset_file(const std::string& path);

/// Values document: {"values": [c, ...]}.
DataVector values_from_json(const json& j);
DataVector load_values_file(const std::string& path);

/// {"n": int, "terms": [[i, j, "p/q"], ...]} with nonzero terms in
/// graded-lex order.
json poly_to_json(const BivariatePoly& p);
BivariatePoly poly_from_json(const json& j);

/// {"scale": "p/q", "factors": [{"kind": "line"|"conic", "coeffs": [...]}]}.
json factored_to_json(const FactoredPoly& f);
FactoredPoly factored_from_json(const json& j);

json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);
Witness load_witness_file(const std::string& path);

/// Parses text into json, mapping parse failures to invalid_input.
json parse_json(const std::string& text);
json load_json_file(const std::string& path);

}  // namespace nfund
