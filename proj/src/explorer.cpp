#include "nfund/explorer.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nfund/error.hpp"
#include "nfund/synthesis.hpp"

namespace nfund {

const char* cover_mode_name(CoverMode mode) {
  return mode == CoverMode::lines ? "lines" : "lines-conics";
}

NodeSet chung_yao_lattice(const std::vector<Line>& lines) {
  if (lines.size() < 2) {
    throw Error(errc::degenerate_input, "lattice needs at least two lines");
  }
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rational ai(lines[i].a()), bi(lines[i].b()), ci(lines[i].c());
      const Rational aj(lines[j].a()), bj(lines[j].b()), cj(lines[j].c());
      const Rational det = ai * bj - aj * bi;
      if (det.is_zero()) {
        throw Error(errc::degenerate_input, "parallel lines have no intersection");
      }
      nodes.push_back(Node{(bi * cj - bj * ci) / det, (ci * aj - cj * ai) / det});
    }
  }
  {
    std::set<Node> seen(nodes.begin(), nodes.end());
    if (seen.size() != nodes.size()) {
      throw Error(errc::degenerate_input, "three lines are concurrent");
    }
  }
  return NodeSet(std::move(nodes));
}

namespace {

// Distinct rationals ordered by coordinate height max(|p|, q).
std::vector<Rational> rational_parameters(std::size_t count, std::size_t max_height) {
  std::vector<Rational> ts;
  for (long h = 1; ts.size() < count && h <= static_cast<long>(max_height); ++h) {
    for (long q = 1; q <= h; ++q) {
      for (long p = -h; p <= h; ++p) {
        if (std::max(std::abs(p), q) != h) continue;
        if (std::gcd(std::abs(p), q) != 1) continue;
        ts.emplace_back(p, q);
        if (ts.size() == count) return ts;
      }
    }
  }
  return ts;
}

// Rational points of the unit circle: the four axis points first, then the
// tangent-half-angle parameterization.
std::vector<Node> circle_points(std::size_t count, std::size_t max_height) {
  std::vector<Node> pts = {Node{Rational(1), Rational(0)}, Node{Rational(0), Rational(1)},
                           Node{Rational(-1), Rational(0)}, Node{Rational(0), Rational(-1)}};
  std::set<Node> seen(pts.begin(), pts.end());
  for (const Rational& t : rational_parameters(count * 2 + 8, max_height)) {
    const Rational d = Rational(1) + t * t;
    const Node p{(Rational(1) - t * t) / d, (Rational(2) * t) / d};
    if (seen.insert(p).second) {
      pts.push_back(p);
    }
    if (pts.size() >= count) break;
  }
  pts.resize(std::min(pts.size(), count));
  return pts;
}

std::vector<Node> parabola_points(std::size_t count, std::size_t max_height) {
  std::vector<Node> pts;
  for (const Rational& t : rational_parameters(count, max_height)) {
    pts.push_back(Node{t, t * t});
  }
  return pts;
}

// Candidate check shared by both searches: exact rank, then exhaustive
// failure of the mode's factor-cover search, then a from-scratch
// re-verification.
std::optional<Witness> try_candidate(std::vector<Node> pts, std::size_t node_index,
                                     int n, CoverMode mode) {
  {
    std::set<Node> seen(pts.begin(), pts.end());
    if (seen.size() != pts.size()) {
      return std::nullopt;
    }
  }
  Witness w;
  w.x = NodeSet(std::move(pts));
  w.n = n;
  w.node_index = node_index;
  w.mode = mode;
  if (w.x.size() > static_cast<std::size_t>(dim_pi(n))) {
    return std::nullopt;
  }
  const std::size_t rank = mat_rank(vandermonde(w.x, n));
  if (rank != w.x.size()) {
    return std::nullopt;
  }
  w.certificate.rank = rank;
  CoverSearchStats stats;
  const auto cover = find_factor_cover(w.node(), w.x.without(node_index), n,
                                       mode == CoverMode::lines_and_conics, &stats);
  if (cover) {
    return std::nullopt;
  }
  w.certificate.search_space = stats.candidates;
  if (!verify_witness(w)) {
    return std::nullopt;
  }
  return w;
}

}  // namespace

std::optional<Witness> search_witness_lines(int n, std::size_t budget) {
  if (n < 2) {
    throw Error(errc::out_of_range, "line witnesses need n >= 2");
  }
  const std::size_t residual_count = 2 * n + 1;
  const std::size_t max_height = std::max<std::size_t>(budget, 4);

  // Conic-supported families: enough nodes on an irreducible conic admit
  // no useful line, since a line meets the conic in at most two points.
  const auto circle = circle_points(residual_count + budget, max_height);
  const auto parabola = parabola_points(residual_count + budget, max_height);
  const Node origin{Rational(0), Rational(0)};
  const Node above{Rational(0), Rational(1)};

  std::size_t tried = 0;
  for (std::size_t offset = 0;; ++offset) {
    bool any_family_alive = false;
    for (int family = 0; family < 2; ++family) {
      const auto& stream = family == 0 ? circle : parabola;
      const Node& apex = family == 0 ? origin : above;
      if (offset + residual_count > stream.size()) {
        continue;
      }
      any_family_alive = true;
      if (tried >= budget) {
        return std::nullopt;
      }
      ++tried;
      std::vector<Node> pts = {apex};
      pts.insert(pts.end(), stream.begin() + offset,
                 stream.begin() + offset + residual_count);
      if (auto w = try_candidate(std::move(pts), 0, n, CoverMode::lines)) {
        return w;
      }
    }
    if (!any_family_alive) {
      return std::nullopt;
    }
  }
}

std::optional<Witness> search_witness_lines_conics(int n, std::size_t budget) {
  if (n < 3) {
    throw Error(errc::out_of_range, "line/conic witnesses need n >= 3");
  }
  const std::size_t residual_count = 2 * n + n / 2 + 1;

  // Nodes on the cubic y = x^3 at positive integer parameters: three
  // points are collinear only when their parameters sum to zero, and six
  // lie on a conic only when those six parameters sum to zero, so neither
  // happens here. Lines then cover at most 2 nodes and conics at most 5,
  // which cannot reach 2n + floor(n/2) + 1 within degree n.
  std::size_t tried = 0;
  for (std::size_t offset = 0; tried < budget; ++offset, ++tried) {
    std::vector<Node> pts = {Node{Rational(0), Rational(1)}};
    for (std::size_t k = 1; k <= residual_count; ++k) {
      const Rational t(static_cast<long>(offset + k));
      pts.push_back(Node{t, t * t * t});
    }
    if (auto w = try_candidate(std::move(pts), 0, n, CoverMode::lines_and_conics)) {
      return w;
    }
  }
  return std::nullopt;
}

bool verify_witness(const Witness& w) {
  const std::size_t expected = w.mode == CoverMode::lines
                                   ? static_cast<std::size_t>(2 * w.n + 2)
                                   : static_cast<std::size_t>(2 * w.n + w.n / 2 + 2);
  if (w.x.size() != expected || w.node_index >= w.x.size() || w.n < 0) {
    return false;
  }
  if (w.x.size() > static_cast<std::size_t>(dim_pi(w.n))) {
    return false;
  }
  const std::size_t rank = mat_rank(vandermonde(w.x, w.n));
  if (rank != w.x.size() || rank != w.certificate.rank) {
    return false;
  }
  const auto p = fundamental(w.node(), w.x, w.n);
  if (!p) {
    return false;
  }
  for (std::size_t i = 0; i < w.x.size(); ++i) {
    const Rational expect(i == w.node_index ? 1 : 0);
    if (p->eval(w.x[i]) != expect) {
      return false;
    }
  }
  const auto cover = find_factor_cover(w.node(), w.x.without(w.node_index), w.n,
                                       w.mode == CoverMode::lines_and_conics);
  return !cover.has_value();
}

}  // namespace nfund
