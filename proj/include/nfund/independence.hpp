#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nfund/geometry.hpp"
#include "nfund/linalg.hpp"
#include "nfund/polynomial.hpp"

namespace nfund {

/// Ordered set of pairwise-distinct nodes. The order fixes the row
/// indices of every collocation system built from the set.
class NodeSet {
public:
  NodeSet() = default;
  explicit NodeSet(std::vector<Node> nodes);

  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }
  const Node& operator[](std::size_t i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  auto begin() const { return nodes_.begin(); }
  auto end() const { return nodes_.end(); }

  std::optional<std::size_t> index_of(const Node& p) const;
  bool contains(const Node& p) const { return index_of(p).has_value(); }

  /// All nodes except the one at `index`, in set order.
  std::vector<Node> without(std::size_t index) const;

  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.nodes_ == b.nodes_;
  }

private:
  std::vector<Node> nodes_;
};

/// Collocation matrix: one row per node, one column per monomial of
/// degree <= n in graded-lex order.
Matrix vandermonde(const NodeSet& x, int n);

/// True iff every node of x admits a polynomial of degree <= n equal to
/// 1 there and 0 on the rest; operationally #X <= dim and full row rank.
bool is_n_independent(const NodeSet& x, int n);

/// A polynomial of degree <= n with value 1 at `a` and 0 on the rest of
/// x, when one exists (deterministic free-variable convention). Throws
/// invalid_input when a is not in x.
std::optional<BivariatePoly> fundamental(const Node& a, const NodeSet& x, int n);

/// The collinearity side of the independence criterion for small sets:
/// true iff no n+2 nodes are collinear. Requires #X <= 2n+1
/// (out_of_range otherwise); at that size it matches is_n_independent.
bool satisfies_collinearity_bound(const NodeSet& x, int n);

/// Reason a set fails to be n-independent.
struct DependenceWitness {
  enum class Kind {
    collinear_overload,   // >= n+2 nodes on one line
    conic_overload,       // >= 2n+2 nodes on one conic
    cubic_intersection,   // #X = 3n cut out by a cubic and a degree-n curve
    unclassified,
  };

  Kind kind = Kind::unclassified;
  std::optional<Line> line;            // collinear_overload
  std::optional<Conic> conic;          // conic_overload
  std::vector<Node> nodes;             // incident nodes for the overloads
  std::optional<BivariatePoly> cubic;  // cubic_intersection
  std::optional<BivariatePoly> curve;  // cubic_intersection, degree n
};

const char* witness_kind_name(DependenceWitness::Kind kind);

/// nullopt when x is n-independent; otherwise a witness with kind chosen
/// by priority collinear_overload > conic_overload > cubic_intersection.
/// Requires #X <= 3n (out_of_range otherwise). An unclassified result
/// signals a bug: the characterization covers every case at this size.
std::optional<DependenceWitness> classify_dependence(const NodeSet& x, int n);

/// True iff #X equals the space dimension and no nonzero polynomial of
/// degree <= n vanishes on all of x (unique interpolation).
bool is_n_poised(const NodeSet& x, int n);

}  // namespace nfund
