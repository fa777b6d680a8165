#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nfund/geometry.hpp"
#include "nfund/independence.hpp"
#include "nfund/polynomial.hpp"

namespace nfund {

/// Verdicts of the three geometric conditions that govern whether a node
/// admits a fundamental polynomial splitting into lines and conics.
/// A violation payload is present exactly when its condition fails.
struct ConditionReport {
  /// (a) a line through the distinguished node carrying >= n+1 of the rest.
  struct HeavyLineThroughNode {
    Line line;
    std::vector<Node> nodes;
  };
  /// (b) a line alpha carrying >= n+1 of the rest, and off alpha a line
  /// through the distinguished node carrying >= n more.
  struct HeavySecondLine {
    Line alpha;
    Line through_node;
    std::vector<Node> nodes;  // nodes on the second line, off alpha
  };
  /// (c) a nondegenerate conic through the distinguished node carrying
  /// >= 2n+1 of the rest.
  struct HeavyConicThroughNode {
    Conic conic;
    std::vector<Node> nodes;
  };

  std::optional<HeavyLineThroughNode> line_violation;
  std::optional<HeavySecondLine> second_line_violation;
  std::optional<HeavyConicThroughNode> conic_violation;

  bool line_ok() const { return !line_violation.has_value(); }
  bool second_line_ok() const { return !second_line_violation.has_value(); }
  bool conic_ok() const { return !conic_violation.has_value(); }
  bool all_ok() const { return line_ok() && second_line_ok() && conic_ok(); }
};

/// Condition for a line-product fundamental at `a`: no n+1 nodes of
/// x minus a are collinear together with a. Throws invalid_input when a
/// is not in x.
bool line_synthesis_condition(const Node& a, const NodeSet& x, int n);

/// A product of at most n lines, none through `a`, jointly vanishing on
/// the rest of x, scaled to value 1 at `a`; nullopt when no such product
/// exists. Requires a in x (invalid_input) and #X <= 2n+1 (out_of_range).
/// Succeeds exactly when line_synthesis_condition holds, which in turn
/// matches the existence of any fundamental at this cardinality.
std::optional<FactoredPoly> synthesize_line_product(const Node& a, const NodeSet& x, int n);

/// Evaluates all three line/conic factorability conditions at `a`.
/// Throws invalid_input when a is not in x.
ConditionReport line_conic_synthesis_conditions(const Node& a, const NodeSet& x, int n);

/// A product of lines and nondegenerate conics with total degree <= n,
/// none through `a`, jointly vanishing on the rest of x, scaled to 1 at
/// `a`; nullopt when none exists. Requires a in x and
/// #X <= 2n + floor(n/2) + 1 (out_of_range).
std::optional<FactoredPoly> synthesize_line_conic_product(const Node& a, const NodeSet& x, int n);

struct CoverSearchStats {
  std::size_t candidates = 0;  // distinct candidate factors considered
  std::size_t steps = 0;       // search-tree nodes visited
};

/// Complete backtracking search for a factor cover: lines (and, when
/// allowed, nondegenerate conics), none through `a`, whose zero sets
/// jointly contain `residual`, with total degree <= degree_budget.
/// Returns the first cover in canonical candidate order, factors sorted.
/// Deliberately ignores the cardinality preconditions of the synthesis
/// wrappers so it can probe sets beyond them.
std::optional<std::vector<Factor>> find_factor_cover(
    const Node& a, const std::vector<Node>& residual, int degree_budget,
    bool allow_conics, CoverSearchStats* stats = nullptr);

}  // namespace nfund
