#pragma once

#include <optional>
#include <vector>

#include "nfund/independence.hpp"
#include "nfund/polynomial.hpp"

namespace nfund {

/// Values c_i aligned with the node-set order.
using DataVector = std::vector<Rational>;

/// Degree <= n interpolant through (x_i, c_i) as the data-weighted sum of
/// per-node fundamental polynomials. When `basis` is given it must hold
/// one factored fundamental per node, in set order; otherwise the
/// fundamentals come from the rank oracle (deterministic free-variable
/// convention). Throws not_solvable when the set is n-dependent,
/// invalid_input on length mismatches.
BivariatePoly lagrange(const NodeSet& x, const DataVector& c, int n,
                       const std::vector<FactoredPoly>* basis = nullptr);

/// True iff p(x_i) = c_i exactly for every node.
bool verify_interpolant(const BivariatePoly& p, const NodeSet& x, const DataVector& c);

}  // namespace nfund
