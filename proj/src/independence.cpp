#include "nfund/independence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nfund/error.hpp"

namespace nfund {

NodeSet::NodeSet(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  std::set<Node> seen(nodes_.begin(), nodes_.end());
  if (seen.size() != nodes_.size()) {
    throw Error(errc::invalid_input, "duplicate nodes");
  }
}

std::optional<std::size_t> NodeSet::index_of(const Node& p) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), p);
  if (it == nodes_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<Node> NodeSet::without(std::size_t index) const {
  std::vector<Node> rest;
  rest.reserve(nodes_.size() - 1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i != index) {
      rest.push_back(nodes_[i]);
    }
  }
  return rest;
}

Matrix vandermonde(const NodeSet& x, int n) {
  const auto exps = monomial_exponents(n);
  Matrix m(x.size(), exps.size());
  for (std::size_t r = 0; r < x.size(); ++r) {
    std::vector<Rational> xp(n + 1, Rational(1)), yp(n + 1, Rational(1));
    for (int k = 1; k <= n; ++k) {
      xp[k] = xp[k - 1] * x[r].x;
      yp[k] = yp[k - 1] * x[r].y;
    }
    for (std::size_t c = 0; c < exps.size(); ++c) {
      m.at(r, c) = xp[exps[c].first] * yp[exps[c].second];
    }
  }
  return m;
}

bool is_n_independent(const NodeSet& x, int n) {
  if (x.size() > static_cast<std::size_t>(dim_pi(n))) {
    return false;
  }
  return mat_rank(vandermonde(x, n)) == x.size();
}

std::optional<BivariatePoly> fundamental(const Node& a, const NodeSet& x, int n) {
  const auto idx = x.index_of(a);
  if (!idx) {
    throw Error(errc::invalid_input, "node is not a member of the set");
  }
  Vec delta(x.size(), Rational(0));
  delta[*idx] = Rational(1);
  const auto solution = solve_consistent(vandermonde(x, n), delta);
  if (!solution) {
    return std::nullopt;
  }
  return BivariatePoly::from_coeffs(n, *solution);
}

bool satisfies_collinearity_bound(const NodeSet& x, int n) {
  if (x.size() > static_cast<std::size_t>(2 * n + 1)) {
    throw Error(errc::out_of_range, "criterion needs at most 2n+1 nodes");
  }
  return max_collinear(x.nodes()).first <= static_cast<std::size_t>(n + 1);
}

const char* witness_kind_name(DependenceWitness::Kind kind) {
  switch (kind) {
    case DependenceWitness::Kind::collinear_overload: return "collinear-overload";
    case DependenceWitness::Kind::conic_overload: return "conic-overload";
    case DependenceWitness::Kind::cubic_intersection: return "cubic-intersection";
    case DependenceWitness::Kind::unclassified: return "unclassified";
  }
  return "unclassified";
}

namespace {

// Largest node count on a single conic determined by a rank-5 subset of
// 5 nodes, with the witness. Degenerate families (every member through 4
// collinear points) contribute nothing here; the heavy-line path runs
// before this one in the classifier.
std::optional<std::pair<Conic, std::vector<Node>>> heaviest_unique_conic(
    const std::vector<Node>& nodes, std::size_t threshold) {
  if (nodes.size() < 5) {
    return std::nullopt;
  }
  std::optional<std::pair<Conic, std::vector<Node>>> best;
  std::set<Conic> seen;
  for (std::size_t a = 0; a + 4 < nodes.size(); ++a)
    for (std::size_t b = a + 1; b + 3 < nodes.size(); ++b)
      for (std::size_t c = b + 1; c + 2 < nodes.size(); ++c)
        for (std::size_t d = c + 1; d + 1 < nodes.size(); ++d)
          for (std::size_t e = d + 1; e < nodes.size(); ++e) {
            const std::vector<Node> sub = {nodes[a], nodes[b], nodes[c],
                                           nodes[d], nodes[e]};
            const auto family = conics_through(sub);
            if (family.size() != 1) {
              continue;
            }
            const Conic& conic = family.front();
            if (!seen.insert(conic).second) {
              continue;
            }
            auto incident = nodes_on_conic(conic, nodes);
            if (incident.size() < threshold) {
              continue;
            }
            if (!best || incident.size() > best->second.size() ||
                (incident.size() == best->second.size() && conic < best->first)) {
              best = {conic, std::move(incident)};
            }
          }
  return best;
}

}  // namespace

std::optional<DependenceWitness> classify_dependence(const NodeSet& x, int n) {
  if (x.size() > static_cast<std::size_t>(3 * n)) {
    throw Error(errc::out_of_range, "classifier needs at most 3n nodes");
  }
  if (is_n_independent(x, n)) {
    return std::nullopt;
  }
  DependenceWitness w;

  const auto [count, line] = max_collinear(x.nodes());
  if (count >= static_cast<std::size_t>(n + 2)) {
    w.kind = DependenceWitness::Kind::collinear_overload;
    w.line = line;
    for (const Node& p : x) {
      if (line->contains(p)) {
        w.nodes.push_back(p);
      }
    }
    return w;
  }

  const auto conic = heaviest_unique_conic(x.nodes(), 2 * n + 2);
  if (conic) {
    w.kind = DependenceWitness::Kind::conic_overload;
    w.conic = conic->first;
    w.nodes = conic->second;
    return w;
  }

  if (x.size() == static_cast<std::size_t>(3 * n)) {
    const auto cubics = nullspace(vandermonde(x, 3));
    const auto curves = nullspace(vandermonde(x, n));
    if (!cubics.empty() && !curves.empty()) {
      w.kind = DependenceWitness::Kind::cubic_intersection;
      w.cubic = BivariatePoly::from_coeffs(3, cubics.front());
      // prefer a degree-n curve distinct from the cubic when the space allows
      BivariatePoly curve = BivariatePoly::from_coeffs(n, curves.front());
      if (n == 3 && curve == *w.cubic && curves.size() > 1) {
        curve = BivariatePoly::from_coeffs(n, curves[1]);
      }
      w.curve = curve;
      return w;
    }
  }

  return w;  // unclassified: outside the characterized reasons
}

bool is_n_poised(const NodeSet& x, int n) {
  if (x.size() != static_cast<std::size_t>(dim_pi(n))) {
    return false;
  }
  return nullspace(vandermonde(x, n)).empty();
}

}  // namespace nfund
