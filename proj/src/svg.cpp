#include "nfund/svg.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace nfund {

namespace {

constexpr double kCanvas = 640.0;
constexpr int kSamples = 512;

struct Viewport {
  double min_x, min_y, max_x, max_y;

  double sx(double x) const { return (x - min_x) / (max_x - min_x) * kCanvas; }
  double sy(double y) const { return kCanvas - (y - min_y) / (max_y - min_y) * kCanvas; }
  bool holds(double x, double y) const {
    return x >= min_x && x <= max_x && y >= min_y && y <= max_y;
  }
};

Viewport fit(const NodeSet& x) {
  double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
  if (!x.empty()) {
    min_x = max_x = x[0].x.to_double();
    min_y = max_y = x[0].y.to_double();
    for (const Node& p : x) {
      min_x = std::min(min_x, p.x.to_double());
      max_x = std::max(max_x, p.x.to_double());
      min_y = std::min(min_y, p.y.to_double());
      max_y = std::max(max_y, p.y.to_double());
    }
  }
  // square viewport around the bounding box
  const double half = 0.5 * std::max({max_x - min_x, max_y - min_y, 1.0}) * 1.35;
  const double cx = 0.5 * (min_x + max_x), cy = 0.5 * (min_y + max_y);
  return Viewport{cx - half, cy - half, cx + half, cy + half};
}

void draw_polyline(std::ostream& os, const std::vector<std::pair<double, double>>& pts,
                   const Viewport& vp, const char* color) {
  if (pts.size() < 2) return;
  os << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : pts) {
    os << vp.sx(x) << "," << vp.sy(y) << " ";
  }
  os << "\"/>\n";
}

void draw_line(std::ostream& os, const Line& l, const Viewport& vp, const char* color) {
  const double a = l.a().get_d(), b = l.b().get_d(), c = l.c().get_d();
  std::vector<std::pair<double, double>> pts;
  if (std::abs(b) >= std::abs(a)) {
    pts = {{vp.min_x, (-c - a * vp.min_x) / b}, {vp.max_x, (-c - a * vp.max_x) / b}};
  } else {
    pts = {{(-c - b * vp.min_y) / a, vp.min_y}, {(-c - b * vp.max_y) / a, vp.max_y}};
  }
  draw_polyline(os, pts, vp, color);
}

void draw_conic(std::ostream& os, const Conic& conic, const Viewport& vp, const char* color) {
  const double q20 = conic.q20().get_d(), q11 = conic.q11().get_d();
  const double q02 = conic.q02().get_d(), q10 = conic.q10().get_d();
  const double q01 = conic.q01().get_d(), q00 = conic.q00().get_d();
  std::vector<std::pair<double, double>> upper, lower;
  auto flush = [&](std::vector<std::pair<double, double>>& branch) {
    draw_polyline(os, branch, vp, color);
    branch.clear();
  };
  for (int s = 0; s <= kSamples; ++s) {
    const double x = vp.min_x + (vp.max_x - vp.min_x) * s / kSamples;
    // solve q02 y^2 + (q11 x + q01) y + (q20 x^2 + q10 x + q00) = 0
    const double biq = q11 * x + q01;
    const double ciq = q20 * x * x + q10 * x + q00;
    if (q02 == 0.0) {
      if (biq != 0.0) {
        const double y = -ciq / biq;
        if (vp.holds(x, y)) {
          upper.emplace_back(x, y);
        } else {
          flush(upper);
        }
      } else {
        flush(upper);
      }
      continue;
    }
    const double disc = biq * biq - 4 * q02 * ciq;
    if (disc < 0) {
      flush(upper);
      flush(lower);
      continue;
    }
    const double root = std::sqrt(disc);
    const double y1 = (-biq + root) / (2 * q02);
    const double y2 = (-biq - root) / (2 * q02);
    if (vp.holds(x, y1)) upper.emplace_back(x, y1); else flush(upper);
    if (vp.holds(x, y2)) lower.emplace_back(x, y2); else flush(lower);
  }
  flush(upper);
  flush(lower);
}

}  // namespace

void write_svg_sketch(std::ostream& os, const NodeSet& x,
                      std::optional<std::size_t> distinguished,
                      const std::vector<Factor>& curves) {
  const Viewport vp = fit(x);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kCanvas << " "
     << kCanvas << "\">\n";
  os << "  <rect width=\"" << kCanvas << "\" height=\"" << kCanvas
     << "\" fill=\"white\"/>\n";
  for (const Factor& f : curves) {
    if (f.kind() == Factor::Kind::line) {
      draw_line(os, f.line(), vp, "#2266cc");
    } else {
      draw_conic(os, f.conic(), vp, "#22aa66");
    }
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool special = distinguished && *distinguished == i;
    os << "  <circle cx=\"" << vp.sx(x[i].x.to_double()) << "\" cy=\""
       << vp.sy(x[i].y.to_double()) << "\" r=\"" << (special ? 6 : 4) << "\" fill=\""
       << (special ? "#cc2222" : "#222222") << "\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace nfund
