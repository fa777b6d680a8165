#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nfund/geometry.hpp"
#include "nfund/independence.hpp"

namespace nfund {

enum class CoverMode { lines, lines_and_conics };

const char* cover_mode_name(CoverMode mode);

struct WitnessCertificate {
  std::size_t rank = 0;          // exact collocation rank, equals #X
  std::size_t search_space = 0;  // candidate factors of the exhausted cover search
};

/// An n-independent node set of the threshold cardinality together with a
/// node whose fundamental polynomial exists but admits no factor cover of
/// the stated mode. Certifies that the factorability guarantee stops at
/// the cardinality bound.
struct Witness {
  NodeSet x;
  int n = 0;
  std::size_t node_index = 0;
  CoverMode mode = CoverMode::lines;
  WitnessCertificate certificate;

  const Node& node() const { return x[node_index]; }
};

/// The pairwise intersection points of n+2 lines, no two parallel and no
/// three concurrent: an n-poised set where every node's fundamental is the
/// product of the n lines missing it. Throws degenerate_input on parallel
/// or concurrent inputs.
NodeSet chung_yao_lattice(const std::vector<Line>& lines);

/// Searches structured configurations for a witness against line-only
/// factorability at #X = 2n+2. Requires n >= 2 (out_of_range). The budget
/// bounds both the configurations tried and their coordinate size; 0
/// means no enumeration.
std::optional<Witness> search_witness_lines(int n, std::size_t budget);

/// Same against line-and-conic factorability at #X = 2n+floor(n/2)+2.
/// Requires n >= 3 (out_of_range).
std::optional<Witness> search_witness_lines_conics(int n, std::size_t budget);

/// Re-derives every witness invariant from scratch: cardinality,
/// independence rank, fundamental existence at the node, and failure of
/// the exhaustive factor-cover search.
bool verify_witness(const Witness& w);

}  // namespace nfund
