#include "nfund/io.hpp"

#include <fstream>
#include <sstream>

#include "nfund/error.hpp"

namespace nfund {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(errc::invalid_input, std::string("malformed JSON: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::invalid_input, "cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Rational(Integer(j.get<long>()));
  }
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  throw Error(errc::invalid_input, "coordinate must be an integer or a \"p/q\" string");
}

json rational_to_json(const Rational& r) {
  return json(r.str());
}

NodeSetDocument nodeset_from_json(const json& j) {
  try {
    NodeSetDocument doc;
    doc.n = j.at("n").get<int>();
    if (doc.n < 0) {
      throw Error(errc::invalid_input, "degree must be nonnegative");
    }
    std::vector<Node> nodes;
    for (const json& entry : j.at("nodes")) {
      if (!entry.is_array() || entry.size() != 2) {
        throw Error(errc::invalid_input, "node must be a coordinate pair");
      }
      nodes.push_back(Node{rational_from_json(entry[0]), rational_from_json(entry[1])});
    }
    doc.nodes = NodeSet(std::move(nodes));
    return doc;
  } catch (const json::exception& e) {
    throw Error(errc::invalid_input, std::string("bad node-set document: ") + e.what());
  }
}

json nodeset_to_json(const NodeSetDocument& doc) {
  json nodes = json::array();
  for (const Node& p : doc.nodes) {
    nodes.push_back(json::array({rational_to_json(p.x), rational_to_json(p.y)}));
  }
  return json{{"n", doc.n}, {"nodes", nodes}};
}

NodeSetDocument load_nodeset_file(const std::string& path) {
  return nodeset_from_json(load_json_file(path));
}

DataVector values_from_json(const json& j) {
  try {
    DataVector values;
    for (const json& entry : j.at("values")) {
      values.push_back(rational_from_json(entry));
    }
    return values;
  } catch (const json::exception& e) {
    throw Error(errc::invalid_input, std::string("bad values document: ") + e.what());
  }
}

DataVector load_values_file(const std::string& path) {
  return values_from_json(load_json_file(path));
}

json poly_to_json(const BivariatePoly& p) {
  json terms = json::array();
  for (const auto& [i, j] : monomial_exponents(p.degree_bound())) {
    const Rational c = p.coeff(i, j);
    if (!c.is_zero()) {
      terms.push_back(json::array({i, j, rational_to_json(c)}));
    }
  }
  return json{{"n", p.degree_bound()}, {"terms", terms}};
}

BivariatePoly poly_from_json(const json& j) {
  try {
    BivariatePoly p(j.at("n").get<int>());
    for (const json& term : j.at("terms")) {
      if (!term.is_array() || term.size() != 3) {
        throw Error(errc::invalid_input, "polynomial term must be [i, j, coeff]");
      }
      p.set_coeff(term[0].get<int>(), term[1].get<int>(), rational_from_json(term[2]));
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(errc::invalid_input, std::string("bad polynomial document: ") + e.what());
  }
}

namespace {

json factor_to_json(const Factor& f) {
  json coeffs = json::array();
  if (f.kind() == Factor::Kind::line) {
    const Line& l = f.line();
    coeffs = {l.a().get_str(), l.b().get_str(), l.c().get_str()};
    return json{{"kind", "line"}, {"coeffs", coeffs}};
  }
  for (const Integer& q : f.conic().coeffs()) {
    coeffs.push_back(q.get_str());
  }
  return json{{"kind", "conic"}, {"coeffs", coeffs}};
}

Factor factor_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const json& coeffs = j.at("coeffs");
  if (kind == "line") {
    if (coeffs.size() != 3) {
      throw Error(errc::invalid_input, "line factor needs 3 coefficients");
    }
    return Factor(Line(rational_from_json(coeffs[0]), rational_from_json(coeffs[1]),
                       rational_from_json(coeffs[2])));
  }
  if (kind == "conic") {
    if (coeffs.size() != 6) {
      throw Error(errc::invalid_input, "conic factor needs 6 coefficients");
    }
    return Factor(Conic(rational_from_json(coeffs[0]), rational_from_json(coeffs[1]),
                        rational_from_json(coeffs[2]), rational_from_json(coeffs[3]),
                        rational_from_json(coeffs[4]), rational_from_json(coeffs[5])));
  }
  throw Error(errc::invalid_input, "factor kind must be \"line\" or \"conic\"");
}

}  // namespace

json factored_to_json(const FactoredPoly& f) {
  json factors = json::array();
  for (const Factor& factor : f.factors()) {
    factors.push_back(factor_to_json(factor));
  }
  return json{{"scale", rational_to_json(f.scale())}, {"factors", factors}};
}

FactoredPoly factored_from_json(const json& j) {
  try {
    std::vector<Factor> factors;
    for (const json& factor : j.at("factors")) {
      factors.push_back(factor_from_json(factor));
    }
    return FactoredPoly(rational_from_json(j.at("scale")), std::move(factors));
  } catch (const json::exception& e) {
    throw Error(errc::invalid_input, std::string("bad factored document: ") + e.what());
  }
}

json witness_to_json(const Witness& w) {
  return json{{"mode", cover_mode_name(w.mode)},
              {"n", w.n},
              {"node_index", w.node_index},
              {"nodeset", nodeset_to_json(NodeSetDocument{w.n, w.x})},
              {"certificate",
               json{{"rank", w.certificate.rank},
                    {"search_space", w.certificate.search_space}}}};
}

Witness witness_from_json(const json& j) {
  try {
    Witness w;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "lines") {
      w.mode = CoverMode::lines;
    } else if (mode == "lines-conics") {
      w.mode = CoverMode::lines_and_conics;
    } else {
      throw Error(errc::invalid_input, "witness mode must be \"lines\" or \"lines-conics\"");
    }
    w.n = j.at("n").get<int>();
    w.node_index = j.at("node_index").get<std::size_t>();
    const NodeSetDocument doc = nodeset_from_json(j.at("nodeset"));
    if (doc.n != w.n) {
      throw Error(errc::invalid_input, "witness degree disagrees with its node set");
    }
    w.x = doc.nodes;
    if (w.node_index >= w.x.size()) {
      throw Error(errc::invalid_input, "witness node index out of range");
    }
    w.certificate.rank = j.at("certificate").at("rank").get<std::size_t>();
    w.certificate.search_space = j.at("certificate").at("search_space").get<std::size_t>();
    return w;
  } catch (const json::exception& e) {
    throw Error(errc::invalid_input, std::string("bad witness document: ") + e.what());
  }
}

Witness load_witness_file(const std::string& path) {
  return witness_from_json(load_json_file(path));
}

}  // namespace nfund
