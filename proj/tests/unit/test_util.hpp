#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nfund/geometry.hpp"
#include "nfund/independence.hpp"

namespace nfund::testutil {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_abs_num = 20, long max_den = 20) {
  std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Node random_node(Rng& rng, long max_abs_num = 20, long max_den = 20) {
  return Node{random_rational(rng, max_abs_num, max_den),
              random_rational(rng, max_abs_num, max_den)};
}

inline std::vector<Node> random_distinct_nodes(Rng& rng, std::size_t count,
                                               long max_abs_num = 20, long max_den = 20) {
  std::set<Node> seen;
  std::vector<Node> nodes;
  while (nodes.size() < count) {
    const Node p = random_node(rng, max_abs_num, max_den);
    if (seen.insert(p).second) {
      nodes.push_back(p);
    }
  }
  return nodes;
}

/// `total` distinct nodes of which the first `on_line` lie on one random line.
inline std::vector<Node> nodes_with_collinear_subset(Rng& rng, std::size_t total,
                                                     std::size_t on_line) {
  while (true) {
    const Node p = random_node(rng, 5, 5);
    const Node q = random_node(rng, 5, 5);
    if (p == q) continue;
    std::set<Node> seen;
    std::vector<Node> nodes;
    std::uniform_int_distribution<long> tnum(-12, 12);
    std::uniform_int_distribution<long> tden(1, 6);
    while (nodes.size() < on_line) {
      const Rational t(tnum(rng), tden(rng));
      const Node r{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
      if (seen.insert(r).second) {
        nodes.push_back(r);
      }
    }
    while (nodes.size() < total) {
      const Node r = random_node(rng, 8, 8);
      if (seen.insert(r).second) {
        nodes.push_back(r);
      }
    }
    return nodes;
  }
}

/// Distinct rational points of the unit circle (axis points first).
inline std::vector<Node> unit_circle_points(std::size_t count) {
  std::vector<Node> pts = {Node{Rational(1), Rational(0)}, Node{Rational(0), Rational(1)},
                           Node{Rational(-1), Rational(0)}, Node{Rational(0), Rational(-1)}};
  std::set<Node> seen(pts.begin(), pts.end());
  for (long h = 1; pts.size() < count; ++h) {
    for (long q = 1; q <= h && pts.size() < count; ++q) {
      for (long p = -h; p <= h && pts.size() < count; ++p) {
        if (std::max(std::abs(p), q) != h || std::gcd(std::abs(p), q) != 1) continue;
        const Rational t(p, q);
        const Rational d = Rational(1) + t * t;
        const Node node{(Rational(1) - t * t) / d, (Rational(2) * t) / d};
        if (seen.insert(node).second) {
          pts.push_back(node);
        }
      }
    }
  }
  pts.resize(count);
  return pts;
}

}  // namespace nfund::testutil
