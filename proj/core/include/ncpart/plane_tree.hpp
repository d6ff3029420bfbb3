#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace ncpart {

inline constexpr std::size_t kNoVertex = std::numeric_limits<std::size_t>::max();

/// Parent/children/depth tables for a plane tree, indexed by lexicographic
/// (depth-first) vertex number. Children of each vertex are stored
/// contiguously in lexicographic order.
struct TreeLinks {
  std::vector<std::size_t> parent;        // kNoVertex for the root
  std::vector<std::size_t> depth;
  std::vector<std::size_t> child_offset;  // size() + 1 entries
  std::vector<std::size_t> child_list;
  std::vector<std::size_t> sibling_rank;  // position among the parent's children

  std::span<const std::size_t> children(std::size_t v) const {
    return {child_list.data() + child_offset[v], child_offset[v + 1] - child_offset[v]};
  }
  bool is_last_child(std::size_t v) const {
    return parent[v] != kNoVertex &&
           sibling_rank[v] + 1 == child_offset[parent[v] + 1] - child_offset[parent[v]];
  }
};

/// Rooted ordered tree stored as the outdegree sequence of its vertices in
/// lexicographic order. Always valid: construction checks the ballot property.
class PlaneTree {
 public:
  /// Throws BallotViolation or SumMismatch.
  static PlaneTree from_degrees(std::vector<std::size_t> degrees);

  /// Single-vertex tree.
  PlaneTree() : degrees_{0} {}

  std::size_t vertex_count() const noexcept { return degrees_.size(); }
  std::size_t edge_count() const noexcept { return degrees_.size() - 1; }
  std::size_t degree(std::size_t v) const { return degrees_[v]; }
  std::span<const std::size_t> degrees() const noexcept { return degrees_; }
  std::size_t leaf_count() const noexcept;

  TreeLinks links() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;

 private:
  explicit PlaneTree(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {}

  std::vector<std::size_t> degrees_;
};

/// Canonical constructor (alias of PlaneTree::from_degrees).
PlaneTree make_tree(std::vector<std::size_t> degrees);

enum class Color { White, Black };

/// Plane tree whose vertices are two-coloured by generation parity; the root
/// colour fixes the rest.
struct TwoTypeTree {
  PlaneTree tree;
  Color root_color = Color::White;

  /// Colour of every vertex in lexicographic order.
  std::vector<Color> colors() const;

  friend bool operator==(const TwoTypeTree&, const TwoTypeTree&) = default;
};

}  // namespace ncpart
