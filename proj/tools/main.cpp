#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nfund/error.hpp"
#include "nfund/explorer.hpp"
#include "nfund/independence.hpp"
#include "nfund/interpolation.hpp"
#include "nfund/io.hpp"
#include "nfund/svg.hpp"
#include "nfund/synthesis.hpp"

namespace {

using nfund::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // mathematically negative result
constexpr int kExitInvalid = 2;   // malformed or out-of-contract input

void emit(const json& j, const std::string& format, const std::string& text) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

json dependence_witness_to_json(const nfund::DependenceWitness& w) {
  json out{{"kind", nfund::witness_kind_name(w.kind)}};
  if (w.line) {
    out["line"] = {w.line->a().get_str(), w.line->b().get_str(), w.line->c().get_str()};
  }
  if (w.conic) {
    json coeffs = json::array();
    for (const auto& q : w.conic->coeffs()) coeffs.push_back(q.get_str());
    out["conic"] = coeffs;
  }
  if (!w.nodes.empty()) {
    json nodes = json::array();
    for (const auto& p : w.nodes) {
      nodes.push_back({nfund::rational_to_json(p.x), nfund::rational_to_json(p.y)});
    }
    out["nodes"] = nodes;
  }
  if (w.cubic) out["cubic"] = nfund::poly_to_json(*w.cubic);
  if (w.curve) out["curve"] = nfund::poly_to_json(*w.curve);
  return out;
}

int cmd_analyze(const std::string& file, const std::string& format) {
  const auto doc = nfund::load_nodeset_file(file);
  const int n = doc.n;
  const auto& x = doc.nodes;

  const bool independent = nfund::is_n_independent(x, n);
  const bool poised = nfund::is_n_poised(x, n);
  const std::size_t collinear = nfund::max_collinear(x.nodes()).first;
  const std::size_t coconic = nfund::max_coconic(x.nodes());
  std::optional<nfund::DependenceWitness> witness;
  if (!independent && x.size() <= static_cast<std::size_t>(3 * n)) {
    witness = nfund::classify_dependence(x, n);
  }

  json out{{"n", n},
           {"count", x.size()},
           {"dim", nfund::dim_pi(n)},
           {"independent", independent},
           {"poised", poised},
           {"max_collinear", collinear},
           {"max_coconic", coconic},
           {"witness", witness ? dependence_witness_to_json(*witness) : json(nullptr)}};

  std::ostringstream text;
  text << "nodes:          " << x.size() << "\n"
       << "degree n:       " << n << "\n"
       << "dim:            " << nfund::dim_pi(n) << "\n"
       << "independent:    " << (independent ? "yes" : "no") << "\n"
       << "poised:         " << (poised ? "yes" : "no") << "\n"
       << "max collinear:  " << collinear << "\n"
       << "max co-conic:   " << coconic << "\n";
  if (witness) {
    text << "dependence:     " << nfund::witness_kind_name(witness->kind) << "\n";
  }
  emit(out, format, text.str());
  return kExitOk;
}

void maybe_write_svg(const std::string& path, const nfund::NodeSet& x,
                     std::size_t node_index, const std::vector<nfund::Factor>& curves) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) {
    throw nfund::Error(nfund::errc::invalid_input, "cannot write SVG file: " + path);
  }
  nfund::write_svg_sketch(out, x, node_index, curves);
}

int report_failed_conditions(const nfund::Node& a, const nfund::NodeSet& x, int n,
                             const std::string& mode, const std::string& format) {
  json failed = json::array();
  std::ostringstream text;
  text << "no " << mode << " fundamental polynomial exists\n";
  if (mode == "lines") {
    const auto heavy = nfund::heavy_lines_through(
        a, x.without(*x.index_of(a)), static_cast<std::size_t>(n + 1));
    failed.push_back("line-through-node");
    json detail;
    if (!heavy.empty()) {
      detail["line"] = {heavy.front().first.a().get_str(), heavy.front().first.b().get_str(),
                        heavy.front().first.c().get_str()};
      detail["count"] = heavy.front().second.size();
      text << "condition: " << heavy.front().second.size()
           << " other nodes collinear with the node\n";
    }
    emit(json{{"ok", false}, {"failed_conditions", failed}, {"detail", detail}}, format,
         text.str());
    return kExitNegative;
  }
  const auto rep = nfund::line_conic_synthesis_conditions(a, x, n);
  json detail;
  if (!rep.line_ok()) {
    failed.push_back("a");
    detail["a"] = {{"count", rep.line_violation->nodes.size()}};
    text << "condition a: " << rep.line_violation->nodes.size()
         << " other nodes collinear with the node\n";
  }
  if (!rep.second_line_ok()) {
    failed.push_back("b");
    detail["b"] = {{"count", rep.second_line_violation->nodes.size()}};
    text << "condition b: a full line plus " << rep.second_line_violation->nodes.size()
         << " more nodes collinear with the node\n";
  }
  if (!rep.conic_ok()) {
    failed.push_back("c");
    detail["c"] = {{"count", rep.conic_violation->nodes.size()}};
    text << "condition c: " << rep.conic_violation->nodes.size()
         << " other nodes on an irreducible conic with the node\n";
  }
  emit(json{{"ok", false}, {"failed_conditions", failed}, {"detail", detail}}, format,
       text.str());
  return kExitNegative;
}

int cmd_fundamental(const std::string& file, std::size_t node_index,
                    const std::string& mode, const std::string& svg_path,
                    const std::string& format) {
  const auto doc = nfund::load_nodeset_file(file);
  const int n = doc.n;
  const auto& x = doc.nodes;
  if (node_index >= x.size()) {
    throw nfund::Error(nfund::errc::out_of_range, "node index out of range");
  }
  const nfund::Node& a = x[node_index];

  std::optional<nfund::FactoredPoly> factored;
  std::optional<nfund::BivariatePoly> expanded;
  if (mode == "any") {
    expanded = nfund::fundamental(a, x, n);
  } else if (mode == "lines") {
    factored = nfund::synthesize_line_product(a, x, n);
  } else {
    factored = nfund::synthesize_line_conic_product(a, x, n);
  }
  if (factored) {
    expanded = nfund::expand(*factored, n);
  }
  if (!expanded) {
    if (mode == "any") {
      emit(json{{"ok", false}, {"failed_conditions", json::array({"no-fundamental"})}},
           format, "no fundamental polynomial exists\n");
      return kExitNegative;
    }
    return report_failed_conditions(a, x, n, mode, format);
  }

  maybe_write_svg(svg_path, x, node_index,
                  factored ? factored->factors() : std::vector<nfund::Factor>{});

  json out{{"ok", true},
           {"n", n},
           {"node_index", node_index},
           {"expanded", nfund::poly_to_json(*expanded)}};
  std::ostringstream text;
  if (factored) {
    out["factored"] = nfund::factored_to_json(*factored);
    text << "factored: " << *factored << "\n";
  }
  text << "expanded: " << *expanded << "\n";
  emit(out, format, text.str());
  return kExitOk;
}

int cmd_interpolate(const std::string& file, const std::string& values_file,
                    const std::string& format) {
  const auto doc = nfund::load_nodeset_file(file);
  const auto values = nfund::load_values_file(values_file);
  if (values.size() != doc.nodes.size()) {
    throw nfund::Error(nfund::errc::invalid_input,
                       "value count does not match the node count");
  }
  const auto p = nfund::lagrange(doc.nodes, values, doc.n);
  const bool verified = nfund::verify_interpolant(p, doc.nodes, values);
  json out{{"ok", true},
           {"n", doc.n},
           {"verified", verified},
           {"interpolant", nfund::poly_to_json(p)}};
  std::ostringstream text;
  text << "interpolant: " << p << "\n"
       << "verified:    " << (verified ? "yes" : "no") << "\n";
  emit(out, format, text.str());
  return kExitOk;
}

int cmd_search(const std::string& mode, int n, std::size_t budget,
               const std::string& format) {
  std::optional<nfund::Witness> w;
  if (mode == "lines") {
    w = nfund::search_witness_lines(n, budget);
  } else {
    w = nfund::search_witness_lines_conics(n, budget);
  }
  if (!w) {
    emit(json{{"ok", false}, {"message", "none within budget"}}, format,
         "none within budget\n");
    return kExitNegative;
  }
  std::ostringstream text;
  text << "witness found: " << w->x.size() << " nodes, degree " << w->n
       << ", node index " << w->node_index << "\n";
  emit(nfund::witness_to_json(*w), format, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of bivariate interpolation node sets"};
  app.require_subcommand(1);

  std::string file, values_file, svg_path, format = "json", mode = "any";
  std::size_t node_index = 0;
  int degree = 2;
  std::size_t budget = 32;

  auto* analyze = app.add_subcommand("analyze", "independence / dependence report");
  analyze->add_option("file", file, "node-set JSON file")->required();
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* fund = app.add_subcommand("fundamental", "fundamental polynomial of one node");
  fund->add_option("file", file, "node-set JSON file")->required();
  fund->add_option("--node", node_index, "node index")->required();
  fund->add_option("--mode", mode, "any, lines or lines-conics")
      ->check(CLI::IsMember({"any", "lines", "lines-conics"}));
  fund->add_option("--svg", svg_path, "write a sketch to this path");
  fund->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* interp = app.add_subcommand("interpolate", "Lagrange interpolant for data");
  interp->add_option("file", file, "node-set JSON file")->required();
  interp->add_option("values", values_file, "values JSON file")->required();
  interp->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* search = app.add_subcommand("search", "look for a sharpness witness");
  search->add_option("--mode", mode, "lines or lines-conics")
      ->check(CLI::IsMember({"lines", "lines-conics"}))
      ->required();
  search->add_option("--n", degree, "degree")->required();
  search->add_option("--budget", budget, "configurations to try");
  search->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(file, format);
    if (fund->parsed()) return cmd_fundamental(file, node_index, mode, svg_path, format);
    if (interp->parsed()) return cmd_interpolate(file, values_file, format);
    if (search->parsed()) return cmd_search(mode, degree, budget, format);
  } catch (const nfund::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == nfund::errc::not_solvable ? kExitNegative : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
