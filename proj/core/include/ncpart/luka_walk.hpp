#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ncpart/plane_tree.hpp"

namespace ncpart {

/// Integer path W_0..W_{n+1} with W_0 = 0, steps >= -1, W_j >= 0 for j <= n
/// and W_{n+1} = -1. Encodes a plane tree with n+1 vertices.
class LukaWalk {
 public:
  /// Throws InvalidWalk.
  static LukaWalk from_values(std::vector<std::int64_t> values);

  /// Length parameter n (the walk has n+2 values).
  std::size_t n() const noexcept { return values_.size() - 2; }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::int64_t operator[](std::size_t j) const { return values_[j]; }

  friend bool operator==(const LukaWalk&, const LukaWalk&) = default;

 private:
  explicit LukaWalk(std::vector<std::int64_t> values) : values_(std::move(values)) {}
  friend LukaWalk lukasiewicz_path(const PlaneTree& tree);

  std::vector<std::int64_t> values_;
};

LukaWalk lukasiewicz_path(const PlaneTree& tree);

/// Inverse of lukasiewicz_path.
PlaneTree tree_from_walk(const LukaWalk& walk);

}  // namespace ncpart
