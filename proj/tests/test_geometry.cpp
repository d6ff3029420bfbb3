#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <regex>

#include "ncpart/geometry.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/verify/oracles.hpp"

using namespace ncpart;

namespace {

NCPartition running_example() {
  return validate_partition({{1, 3, 5}, {2}, {4}, {6, 7, 11, 12}, {8}, {9, 10}}, 12);
}

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t c = 0;
  for (std::size_t pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++c;
  return c;
}

// Longest chord by scanning every pair of elements that share a block and are consecutive in it.
double longest_by_scan(const NCPartition& p) {
  double best = 0.0;
  const double n = static_cast<double>(p.n());
  for (const Block& b : p.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      const double d = static_cast<double>(b[(i + 1) % b.size()]) - static_cast<double>(b[i]);
      const double len = std::abs(d) / n;
      best = std::max(best, std::min(len, 1.0 - len));
    }
  }
  return best;
}

}  // namespace

TEST(Chords, RunningExample) {
  const ChordSystem c = chord_system(running_example());
  const auto has = [&](std::size_t a, std::size_t b) {
    return std::find(c.chords.begin(), c.chords.end(), std::make_pair(a, b)) != c.chords.end();
  };
  EXPECT_TRUE(has(1, 3));
  EXPECT_TRUE(has(3, 5));
  EXPECT_TRUE(has(5, 1));
  EXPECT_TRUE(has(9, 10));
  EXPECT_TRUE(has(10, 9));
  EXPECT_TRUE(has(12, 6));
  EXPECT_TRUE(has(2, 2));
  EXPECT_EQ(longest_chord(running_example()), 0.5);
}

TEST(Chords, Extremes) {
  EXPECT_EQ(chord_system(singletons(5)).chords.size(), 5u);
  EXPECT_EQ(longest_chord(singletons(5)), 0.0);
  EXPECT_EQ(longest_chord(validate_partition({{1, 2}}, 2)), 0.5);
  EXPECT_EQ(chord_system(single_block(6)).chords.size(), 6u);
  EXPECT_NEAR(longest_chord(single_block(6)), 1.0 / 6.0, 1e-15);
}

TEST(Chords, AgreesWithScanOnSamples) {
  const TiltedLaw law = equivalent_distribution(WeightSeq::membership(MembershipSet::odd()));
  const PartitionSampler s(law, 999);
  for (std::uint64_t i = 0; i < 30; ++i) {
    Rng rng(i);
    const NCPartition p = s.sample(rng);
    EXPECT_DOUBLE_EQ(longest_chord(p), longest_by_scan(p));
  }
}

TEST(Chords, CirclePoints) {
  const Point p = circle_point(3, 12);
  EXPECT_NEAR(p.x, 0.0, 1e-15);
  EXPECT_NEAR(p.y, -1.0, 1e-15);
}

TEST(LimitLaw, Cdf) {
  EXPECT_EQ(limit_chord_cdf(1.0 / 3.0), 0.0);
  EXPECT_EQ(limit_chord_cdf(0.2), 0.0);
  EXPECT_NEAR(limit_chord_cdf(0.5), 1.0, 1e-12);
  EXPECT_NEAR(limit_chord_cdf(0.4), verify::trapezoid_chord_cdf(0.4, 400000), 1e-7);
  double prev = 0.0;
  for (double x = 0.34; x < 0.5; x += 0.01) {
    const double f = limit_chord_cdf(x);
    EXPECT_GT(f, prev);
    EXPECT_NEAR(f, verify::trapezoid_chord_cdf(x, 400000), 1e-7) << x;
    prev = f;
  }
}

TEST(LimitLaw, DensityIsDerivative) {
  for (double x : {0.35, 0.4, 0.45, 0.49}) {
    const double h = 1e-6;
    EXPECT_NEAR((limit_chord_cdf(x + h) - limit_chord_cdf(x - h)) / (2 * h), limit_chord_density(x),
                1e-4 * limit_chord_density(x));
  }
  EXPECT_EQ(limit_chord_density(0.3), 0.0);
}

TEST(Hulls, Areas) {
  EXPECT_NEAR(block_hulls(single_block(3)).total_area, 3.0 * std::sqrt(3.0) / 4.0, 1e-12);
  EXPECT_NEAR(block_hulls(single_block(4000)).total_area, std::numbers::pi, 1e-5);
  EXPECT_EQ(block_hulls(singletons(7)).total_area, 0.0);
  const HullSet h = block_hulls(running_example());
  ASSERT_EQ(h.hulls.size(), 6u);
  // Triangle on 1,3,5 of the 12-gon: central angles 60, 60, 240 degrees.
  const double tri = 0.5 * (2 * std::sin(std::numbers::pi / 3) - std::sin(2 * std::numbers::pi / 3));
  EXPECT_NEAR(h.hulls[0].area, tri, 1e-12);
  // Quadrilateral on 6,7,11,12: central angles 30, 120, 30, 180 degrees.
  const double quad = 0.5 * (2 * std::sin(std::numbers::pi / 6) + std::sin(2 * std::numbers::pi / 3));
  EXPECT_NEAR(h.hulls[3].area, quad, 1e-12);
  EXPECT_NEAR(h.total_area, tri + quad, 1e-12);
}

TEST(Render, Census) {
  RenderOptions fill;
  fill.fill_hulls = true;
  const std::string svg = render_svg(running_example(), fill);
  EXPECT_EQ(count(svg, "<polygon"), 2u);
  EXPECT_EQ(count(svg, "<line"), 1u);
  EXPECT_EQ(count(svg, "<circle"), 4u);  // outline plus three dots
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  const std::string dots = render_svg(singletons(5));
  EXPECT_EQ(count(dots, "<circle"), 6u);
  EXPECT_EQ(count(dots, "<polygon"), 0u);
}

TEST(Render, SixDecimalCoordinates) {
  const std::string svg = render_svg(running_example());
  const std::regex number(R"((?:cx|cy|r|x1|y1|x2|y2)="(-?[0-9]+\.[0-9]+)\")");
  std::size_t seen = 0;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), number); it != std::sregex_iterator(); ++it) {
    const std::string v = (*it)[1];
    EXPECT_EQ(v.size() - v.find('.') - 1, 6u) << v;
    ++seen;
  }
  EXPECT_GT(seen, 10u);
}

TEST(Render, ShadingDarkestForLargest) {
  RenderOptions o;
  o.fill_hulls = true;
  o.shade_by_area = true;
  const std::string svg = render_svg(running_example(), o);
  // Polygons follow block order: the triangle {1,3,5}, then the larger quadrilateral.
  const std::size_t tri = svg.find("<polygon");
  const std::size_t quad = svg.find("<polygon", tri + 1);
  ASSERT_NE(quad, std::string::npos);
  auto fill_of = [&](std::size_t pos) {
    const std::size_t f = svg.find("fill=\"#", pos);
    return std::stoi(svg.substr(f + 7, 2), nullptr, 16);
  };
  EXPECT_LT(fill_of(quad), fill_of(tri));
}

TEST(Render, Deterministic) {
  RenderOptions o;
  o.fill_hulls = true;
  o.shade_by_area = true;
  EXPECT_EQ(render_svg(running_example(), o), render_svg(running_example(), o));
}
