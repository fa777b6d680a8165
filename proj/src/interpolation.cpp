#include "nfund/interpolation.hpp"

#include "nfund/error.hpp"

namespace nfund {

BivariatePoly lagrange(const NodeSet& x, const DataVector& c, int n,
                       const std::vector<FactoredPoly>* basis) {
  if (c.size() != x.size()) {
    throw Error(errc::invalid_input, "data vector length does not match the node count");
  }
  if (basis && basis->size() != x.size()) {
    throw Error(errc::invalid_input, "basis length does not match the node count");
  }
  BivariatePoly p(n);
  bool skipped = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (c[i].is_zero()) {
      skipped = true;
      continue;
    }
    if (basis) {
      p += c[i] * expand((*basis)[i], n);
    } else {
      const auto fi = fundamental(x[i], x, n);
      if (!fi) {
        throw Error(errc::not_solvable, "node set is not n-independent");
      }
      p += c[i] * *fi;
    }
  }
  // A dependent set must fail even when every weighted term vanished.
  if (!basis && skipped && !is_n_independent(x, n)) {
    throw Error(errc::not_solvable, "node set is not n-independent");
  }
  return p;
}

bool verify_interpolant(const BivariatePoly& p, const NodeSet& x, const DataVector& c) {
  if (c.size() != x.size()) {
    return false;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (p.eval(x[i]) != c[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace nfund
