#include "nfund/synthesis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nfund/error.hpp"
#include "nfund/linalg.hpp"

namespace nfund {

namespace {

struct Candidate {
  Factor factor;
  std::vector<std::size_t> covers;  // residual indices on the factor, ascending
};

std::vector<std::size_t> coverage_of(const std::vector<Node>& residual,
                                     const Factor& f) {
  std::vector<std::size_t> covers;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (f.contains(residual[i])) {
      covers.push_back(i);
    }
  }
  return covers;
}

// A deterministic line through `b` missing `a`: the perpendicular to the
// segment a-b at b. Used to cover residual nodes no pair line reaches.
Line free_line_at(const Node& a, const Node& b) {
  const Rational dx = b.x - a.x;
  const Rational dy = b.y - a.y;
  return Line(dx, dy, -(dx * b.x + dy * b.y));
}

std::vector<Line> line_pool(const Node& a, const std::vector<Node>& residual) {
  std::set<Line> pool;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    for (std::size_t j = i + 1; j < residual.size(); ++j) {
      const Line l = line_through(residual[i], residual[j]);
      if (!l.contains(a)) {
        pool.insert(l);
      }
    }
  }
  for (const Node& b : residual) {
    pool.insert(free_line_at(a, b));
  }
  return {pool.begin(), pool.end()};
}

bool any_three_collinear(const std::vector<Node>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (line_through(pts[i], pts[j]).contains(pts[k])) {
          return true;
        }
      }
  return false;
}

// Unique nondegenerate conics through 5-subsets of the residual, skipping
// any through `a`.
void collect_unique_conics(const Node& a, const std::vector<Node>& residual,
                           std::set<Conic>& out) {
  const std::size_t s = residual.size();
  if (s < 5) {
    return;
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      for (std::size_t k = j + 1; k < s; ++k)
        for (std::size_t l = k + 1; l < s; ++l)
          for (std::size_t m = l + 1; m < s; ++m) {
            const auto family = conics_through(
                {residual[i], residual[j], residual[k], residual[l], residual[m]});
            if (family.size() != 1) {
              continue;
            }
            const Conic& c = family.front();
            if (conic_is_nondegenerate(c) && !c.contains(a)) {
              out.insert(c);
            }
          }
}

// One nondegenerate conic through all of `pts` missing `a`, when the
// family of conics through `pts` holds such a member. Small integer
// combinations of the family basis are enough: the bad locus is cut out
// by a polynomial of total degree 4 in the combination coefficients, so
// a 5-value grid per axis cannot be fully contained in it.
std::optional<Conic> conic_representative(const Node& a, const std::vector<Node>& pts) {
  if (any_three_collinear(pts)) {
    return std::nullopt;  // every conic through 3 collinear points is a line pair
  }
  const auto basis = conics_through(pts);
  bool all_through_a = true;
  for (const Conic& c : basis) {
    if (!c.contains(a)) {
      all_through_a = false;
      break;
    }
  }
  if (all_through_a) {
    return std::nullopt;  // a lies in the family's base locus
  }
  static const int grid[5] = {0, 1, -1, 2, -2};
  const std::size_t k = basis.size();
  std::vector<std::size_t> odo(k, 0);
  while (true) {
    // advance the odometer, skipping the all-zero combination
    std::size_t pos = 0;
    while (pos < k && odo[pos] == 4) {
      odo[pos] = 0;
      ++pos;
    }
    if (pos == k) {
      return std::nullopt;
    }
    ++odo[pos];
    std::array<Rational, 6> q{};
    for (std::size_t b = 0; b < k; ++b) {
      if (grid[odo[b]] == 0) {
        continue;
      }
      const Rational w(grid[odo[b]]);
      const auto& coeffs = basis[b].coeffs();
      for (std::size_t t = 0; t < 6; ++t) {
        q[t] += w * Rational(coeffs[t]);
      }
    }
    if (std::all_of(q.begin(), q.end(), [](const Rational& r) { return r.is_zero(); })) {
      continue;
    }
    const Conic c(q[0], q[1], q[2], q[3], q[4], q[5]);
    if (conic_is_nondegenerate(c) && !c.contains(a)) {
      return c;
    }
  }
}

// Backstop candidates: conics through 3- and 4-subsets of the residual.
// Pair lines can be forced through `a` by adversarial configurations, so
// covers may need conics carrying fewer than 5 residual nodes.
void collect_small_subset_conics(const Node& a, const std::vector<Node>& residual,
                                 std::set<Conic>& out) {
  const std::size_t s = residual.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      for (std::size_t k = j + 1; k < s; ++k) {
        if (const auto c = conic_representative(a, {residual[i], residual[j], residual[k]})) {
          out.insert(*c);
        }
        for (std::size_t l = k + 1; l < s; ++l) {
          if (const auto c = conic_representative(
                  a, {residual[i], residual[j], residual[k], residual[l]})) {
            out.insert(*c);
          }
        }
      }
}

struct CoverSearch {
  const std::vector<Node>& residual;
  std::vector<Candidate> candidates;
  std::vector<std::vector<std::size_t>> covering;  // residual index -> candidate indices
  std::vector<char> covered;
  std::size_t uncovered = 0;
  std::vector<std::size_t> chosen;
  CoverSearchStats* stats = nullptr;

  explicit CoverSearch(const std::vector<Node>& res) : residual(res) {}

  void set_candidates(std::vector<Candidate> cands) {
    candidates = std::move(cands);
    covering.assign(residual.size(), {});
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      for (std::size_t ri : candidates[ci].covers) {
        covering[ri].push_back(ci);
      }
    }
    covered.assign(residual.size(), 0);
    uncovered = residual.size();
    chosen.clear();
  }

  std::size_t uncovered_count(const Candidate& c) const {
    std::size_t cnt = 0;
    for (std::size_t ri : c.covers) {
      if (!covered[ri]) ++cnt;
    }
    return cnt;
  }

  bool dfs(int budget) {
    if (stats) ++stats->steps;
    if (uncovered == 0) {
      return true;
    }
    if (budget <= 0) {
      return false;
    }
    // Feasibility bound: some candidate must cover at least
    // uncovered/budget nodes per unit of degree.
    bool feasible = false;
    for (const Candidate& c : candidates) {
      if (c.factor.degree() > budget) continue;
      if (static_cast<std::size_t>(budget) * uncovered_count(c) >=
          uncovered * static_cast<std::size_t>(c.factor.degree())) {
        feasible = true;
        break;
      }
    }
    if (!feasible) {
      return false;
    }
    std::size_t branch = 0;
    while (covered[branch]) ++branch;
    // Largest uncovered coverage first, canonical candidate order on ties.
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (count, index)
    for (std::size_t ci : covering[branch]) {
      if (candidates[ci].factor.degree() > budget) continue;
      order.emplace_back(uncovered_count(candidates[ci]), ci);
    }
    std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
      if (l.first != r.first) return l.first > r.first;
      return l.second < r.second;
    });
    for (const auto& [cnt, ci] : order) {
      (void)cnt;
      std::vector<std::size_t> newly;
      for (std::size_t ri : candidates[ci].covers) {
        if (!covered[ri]) {
          covered[ri] = 1;
          newly.push_back(ri);
        }
      }
      uncovered -= newly.size();
      chosen.push_back(ci);
      if (dfs(budget - candidates[ci].factor.degree())) {
        return true;
      }
      chosen.pop_back();
      uncovered += newly.size();
      for (std::size_t ri : newly) {
        covered[ri] = 0;
      }
    }
    return false;
  }
};

std::vector<Candidate> assemble(const std::vector<Node>& residual,
                                const std::vector<Line>& lines,
                                const std::set<Conic>& conics) {
  std::vector<Candidate> cands;
  cands.reserve(lines.size() + conics.size());
  for (const Line& l : lines) {
    Factor f{l};
    auto covers = coverage_of(residual, f);
    if (!covers.empty()) {
      cands.push_back({std::move(f), std::move(covers)});
    }
  }
  for (const Conic& c : conics) {
    Factor f{c};
    auto covers = coverage_of(residual, f);
    if (!covers.empty()) {
      cands.push_back({std::move(f), std::move(covers)});
    }
  }
  return cands;  // lines ascending then conics ascending = canonical factor order
}

}  // namespace

std::optional<std::vector<Factor>> find_factor_cover(
    const Node& a, const std::vector<Node>& residual, int degree_budget,
    bool allow_conics, CoverSearchStats* stats) {
  CoverSearch search(residual);
  search.stats = stats;

  // Cheapest candidate class first; widen only after a full failed search.
  const auto lines = line_pool(a, residual);
  std::set<Conic> conics;
  search.set_candidates(assemble(residual, lines, conics));
  if (stats) stats->candidates = search.candidates.size();
  bool found = search.dfs(degree_budget);

  if (!found && allow_conics && degree_budget >= 2 && !residual.empty()) {
    collect_unique_conics(a, residual, conics);
    search.set_candidates(assemble(residual, lines, conics));
    if (stats) stats->candidates = search.candidates.size();
    found = search.dfs(degree_budget);
    if (!found) {
      collect_small_subset_conics(a, residual, conics);
      search.set_candidates(assemble(residual, lines, conics));
      if (stats) stats->candidates = search.candidates.size();
      found = search.dfs(degree_budget);
    }
  }
  if (!found) {
    return std::nullopt;
  }
  std::vector<Factor> cover;
  cover.reserve(search.chosen.size());
  for (std::size_t ci : search.chosen) {
    cover.push_back(search.candidates[ci].factor);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

namespace {

std::size_t member_index(const Node& a, const NodeSet& x) {
  const auto idx = x.index_of(a);
  if (!idx) {
    throw Error(errc::invalid_input, "node is not a member of the set");
  }
  return *idx;
}

}  // namespace

bool line_synthesis_condition(const Node& a, const NodeSet& x, int n) {
  const auto residual = x.without(member_index(a, x));
  return heavy_lines_through(a, residual, n + 1).empty();
}

std::optional<FactoredPoly> synthesize_line_product(const Node& a, const NodeSet& x, int n) {
  const std::size_t idx = member_index(a, x);
  if (x.size() > static_cast<std::size_t>(2 * n + 1)) {
    throw Error(errc::out_of_range, "line synthesis needs at most 2n+1 nodes");
  }
  const auto cover = find_factor_cover(a, x.without(idx), n, false);
  if (!cover) {
    return std::nullopt;
  }
  return normalize_at(FactoredPoly(Rational(1), *cover), a);
}

ConditionReport line_conic_synthesis_conditions(const Node& a, const NodeSet& x, int n) {
  const auto residual = x.without(member_index(a, x));
  ConditionReport rep;

  const auto heavy = heavy_lines_through(a, residual, n + 1);
  if (!heavy.empty()) {
    rep.line_violation =
        ConditionReport::HeavyLineThroughNode{heavy.front().first, heavy.front().second};
  }

  // (b) applies to every line carrying >= n+1 residual nodes; such a line
  // is determined by two of its points once n >= 1.
  if (n >= 1) {
    std::set<Line> alphas;
    for (std::size_t i = 0; i < residual.size() && !rep.second_line_violation; ++i) {
      for (std::size_t j = i + 1; j < residual.size(); ++j) {
        const Line alpha = line_through(residual[i], residual[j]);
        if (!alphas.insert(alpha).second) {
          continue;
        }
        std::vector<Node> off_alpha;
        for (const Node& p : residual) {
          if (!alpha.contains(p)) {
            off_alpha.push_back(p);
          }
        }
        if (residual.size() - off_alpha.size() < static_cast<std::size_t>(n + 1)) {
          continue;
        }
        const auto second = heavy_lines_through(a, off_alpha, n);
        if (!second.empty()) {
          rep.second_line_violation = ConditionReport::HeavySecondLine{
              alpha, second.front().first, second.front().second};
          break;
        }
      }
    }
  }

  // (c) enumerates conics determined by `a` and four residual nodes; a
  // violating irreducible conic carries >= 2n+1 >= 4 residual nodes for
  // n >= 2 and is recovered from any four of them.
  std::optional<ConditionReport::HeavyConicThroughNode> worst;
  const std::size_t s = residual.size();
  std::set<Conic> seen;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      for (std::size_t k = j + 1; k < s; ++k)
        for (std::size_t l = k + 1; l < s; ++l) {
          const auto family =
              conics_through({a, residual[i], residual[j], residual[k], residual[l]});
          if (family.size() != 1) {
            continue;
          }
          const Conic& c = family.front();
          if (!conic_is_nondegenerate(c) || !seen.insert(c).second) {
            continue;
          }
          auto incident = nodes_on_conic(c, residual);
          if (incident.size() < static_cast<std::size_t>(2 * n + 1)) {
            continue;
          }
          if (!worst || incident.size() > worst->nodes.size() ||
              (incident.size() == worst->nodes.size() && c < worst->conic)) {
            worst = ConditionReport::HeavyConicThroughNode{c, std::move(incident)};
          }
        }
  rep.conic_violation = std::move(worst);

  return rep;
}

std::optional<FactoredPoly> synthesize_line_conic_product(const Node& a, const NodeSet& x,
                                                          int n) {
  const std::size_t idx = member_index(a, x);
  if (x.size() > static_cast<std::size_t>(2 * n + n / 2 + 1)) {
    throw Error(errc::out_of_range,
                "line/conic synthesis needs at most 2n + floor(n/2) + 1 nodes");
  }
  const auto cover = find_factor_cover(a, x.without(idx), n, true);
  if (!cover) {
    return std::nullopt;
  }
  return normalize_at(FactoredPoly(Rational(1), *cover), a);
}

}  // namespace nfund
