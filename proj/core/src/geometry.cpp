#include "ncpart/geometry.hpp"

#include <algorithm>
#include <array>
#include <boost/math/special_functions/legendre.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace ncpart {

Point circle_point(std::size_t l, std::size_t n) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

ChordSystem chord_system(const NCPartition& p) {
  ChordSystem cs;
  cs.n = p.n();
  cs.chords.reserve(p.n());
  for (const Block& b : p.blocks()) {
    for (std::size_t i = 0; i + 1 < b.size(); ++i) cs.chords.emplace_back(b[i], b[i + 1]);
    cs.chords.emplace_back(b.back(), b.front());
  }
  return cs;
}

double longest_chord(const NCPartition& p) {
  const std::size_t n = p.n();
  std::size_t best = 0;
  for (const auto& [a, b] : chord_system(p).chords) {
    const std::size_t d = a > b ? a - b : b - a;
    best = std::max(best, std::min(d, n - d));
  }
  return n == 0 ? 0.0 : static_cast<double>(best) / static_cast<double>(n);
}

double limit_chord_density(double x) {
  if (x <= 1.0 / 3.0 || x >= 0.5) return 0.0;
  return (3.0 * x - 1.0) / (x * x * (1.0 - x) * (1.0 - x) * std::sqrt(1.0 - 2.0 * x)) /
         std::numbers::pi;
}

namespace {

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int order) {
    for (double z : boost::math::legendre_p_zeros<double>(order)) {
      const double dp = boost::math::legendre_p_prime(order, z);
      const double w = 2.0 / ((1.0 - z * z) * dp * dp);
      nodes.push_back(z);
      weights.push_back(w);
      if (z != 0.0) {
        nodes.push_back(-z);
        weights.push_back(w);
      }
    }
  }
};

const GaussLegendre& gauss_128() {
  static const GaussLegendre rule(128);
  return rule;
}

// Integrand after x = (1 - u^2) / 2; smooth on [0, 1/sqrt(3)].
double transformed(double u) {
  const double x = 0.5 * (1.0 - u * u);
  return (3.0 * x - 1.0) / (x * x * (1.0 - x) * (1.0 - x)) / std::numbers::pi;
}

}  // namespace

double limit_chord_cdf(double x) {
  if (x <= 1.0 / 3.0) return 0.0;
  if (x >= 0.5) return 1.0;
  const double a = std::sqrt(1.0 - 2.0 * x);
  const double b = 1.0 / std::sqrt(3.0);
  const GaussLegendre& rule = gauss_128();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * transformed(mid + half * rule.nodes[i]);
  }
  return std::clamp(half * sum, 0.0, 1.0);
}

HullSet block_hulls(const NCPartition& p) {
  HullSet out;
  out.hulls.reserve(p.block_count());
  for (std::size_t i = 0; i < p.block_count(); ++i) {
    const Block& b = p.block(i);
    BlockHull h;
    h.block_index = i;
    for (std::size_t l : b) h.vertices.push_back(circle_point(l, p.n()));
    if (b.size() >= 3) {
      double twice = 0.0;
      for (std::size_t j = 0; j < h.vertices.size(); ++j) {
        const Point& u = h.vertices[j];
        const Point& v = h.vertices[(j + 1) % h.vertices.size()];
        twice += u.x * v.y - v.x * u.y;
      }
      h.area = std::abs(twice) / 2.0;
    }
    out.total_area += h.area;
    out.hulls.push_back(std::move(h));
  }
  return out;
}

namespace {

constexpr std::array<int, 8> kGrayRamp{0x20, 0x3c, 0x58, 0x74, 0x90, 0xac, 0xc8, 0xe4};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string gray(int level) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", level, level, level);
  return buf;
}

}  // namespace

std::string render_svg(const NCPartition& p, const RenderOptions& opts) {
  const double size = static_cast<double>(std::max(opts.size_px, 16));
  const double c = size / 2.0;
  const double radius = size * 0.45;
  const double stroke = std::max(0.5, size / 800.0);
  auto px = [&](const Point& q) { return fmt(c + radius * q.x) + "," + fmt(c + radius * q.y); };

  const HullSet hulls = block_hulls(p);
  // Rank polygons by area, largest first; the largest get the darkest fill.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < hulls.hulls.size(); ++i) {
    if (p.block(i).size() >= 3) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return hulls.hulls[a].area > hulls.hulls[b].area;
  });
  std::vector<std::string> fill(hulls.hulls.size(), gray(kGrayRamp[3]));
  if (opts.shade_by_area) {
    for (std::size_t r = 0; r < order.size(); ++r) {
      fill[order[r]] = gray(kGrayRamp[r * kGrayRamp.size() / order.size()]);
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(size) +
         "\" height=\"" + fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
  out += "<circle cx=\"" + fmt(c) + "\" cy=\"" + fmt(c) + "\" r=\"" + fmt(radius) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" + fmt(stroke) + "\"/>\n";
  for (std::size_t i = 0; i < hulls.hulls.size(); ++i) {
    const BlockHull& h = hulls.hulls[i];
    if (h.vertices.size() == 1) {
      const Point& q = h.vertices[0];
      out += "<circle cx=\"" + fmt(c + radius * q.x) + "\" cy=\"" + fmt(c + radius * q.y) +
             "\" r=\"" + fmt(2.0 * stroke) + "\" fill=\"#000000\"/>\n";
    } else if (h.vertices.size() == 2) {
      const Point& a = h.vertices[0];
      const Point& b = h.vertices[1];
      out += "<line x1=\"" + fmt(c + radius * a.x) + "\" y1=\"" + fmt(c + radius * a.y) +
             "\" x2=\"" + fmt(c + radius * b.x) + "\" y2=\"" + fmt(c + radius * b.y) +
             "\" stroke=\"#000000\" stroke-width=\"" + fmt(stroke) + "\"/>\n";
    } else {
      std::string points;
      for (const Point& q : h.vertices) {
        if (!points.empty()) points += ' ';
        points += px(q);
      }
      out += "<polygon points=\"" + points + "\" fill=\"" +
             (opts.fill_hulls ? fill[i] : std::string("none")) +
             "\" stroke=\"#000000\" stroke-width=\"" + fmt(stroke) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace ncpart
