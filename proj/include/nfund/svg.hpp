#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nfund/independence.hpp"
#include "nfund/polynomial.hpp"

namespace nfund {

/// Presentational sketch of the node set, the distinguished node and the
/// factor curves, sampled in floating point at fixed resolution.
void write_svg_sketch(std::ostream& os, const NodeSet& x,
                      std::optional<std::size_t> distinguished,
                      const std::vector<Factor>& curves);

}  // namespace nfund
