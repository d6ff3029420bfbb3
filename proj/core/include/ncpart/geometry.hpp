#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncpart/partition.hpp"

namespace ncpart {

/// Element l of [n] sits at exp(-2 i pi l / n) on the unit circle.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

Point circle_point(std::size_t l, std::size_t n);

struct ChordSystem {
  std::size_t n = 0;
  /// Consecutive elements of each block plus the closing chord (last, first);
  /// singletons give the degenerate chord (x, x).
  std::vector<std::pair<std::size_t, std::size_t>> chords;
};

ChordSystem chord_system(const NCPartition& p);

/// Largest angular length min(d, n - d) / n over the chords; 0 if every block
/// is a singleton.
double longest_chord(const NCPartition& p);

/// Density (1/pi)(3x-1)/(x^2 (1-x)^2 sqrt(1-2x)) on [1/3, 1/2], 0 elsewhere.
double limit_chord_density(double x);

/// CDF of the density above, by 128-node Gauss-Legendre after u = sqrt(1-2x).
double limit_chord_cdf(double x);

struct BlockHull {
  std::size_t block_index = 0;
  std::vector<Point> vertices;
  double area = 0.0;
};

struct HullSet {
  std::vector<BlockHull> hulls;
  double total_area = 0.0;
};

/// Convex hull of every block on the circle with its shoelace area (zero for
/// blocks of size at most 2).
HullSet block_hulls(const NCPartition& p);

struct RenderOptions {
  bool fill_hulls = false;
  bool shade_by_area = false;
  int size_px = 512;
};

/// Deterministic SVG 1.1 drawing: the unit circle, a dot per singleton, a
/// line per pair and a polygon per larger block.
std::string render_svg(const NCPartition& p, const RenderOptions& opts = {});

}  // namespace ncpart
