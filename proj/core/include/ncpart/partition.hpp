#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ncpart {

using Block = std::vector<std::size_t>;

/// Non-crossing partition of {1,...,n}. Blocks are strictly increasing and
/// kept in order of their smallest element.
class NCPartition {
 public:
  /// Empty partition of the empty ground set.
  NCPartition() = default;

  std::size_t n() const noexcept { return n_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(std::size_t i) const { return blocks_[i]; }

  /// Index (into blocks()) of the block containing each element; entry 0 unused.
  std::vector<std::size_t> block_labels() const;

  friend bool operator==(const NCPartition&, const NCPartition&) = default;

 private:
  NCPartition(std::size_t n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}
  friend NCPartition validate_partition(std::vector<Block> blocks, std::size_t n);
  friend NCPartition make_partition_unchecked(std::size_t n, std::vector<Block> blocks);

  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

/// Throws NotAPartition, or CrossingError with a witness a<b<c<d.
NCPartition validate_partition(std::vector<Block> blocks, std::size_t n);

/// For internal constructions already known to be valid; sorts blocks by minimum.
NCPartition make_partition_unchecked(std::size_t n, std::vector<Block> blocks);

/// Element groups of a block-label vector (labels[1..n]) as a partition.
NCPartition partition_from_labels(std::span<const std::size_t> labels);

NCPartition singletons(std::size_t n);
NCPartition single_block(std::size_t n);

}  // namespace ncpart
