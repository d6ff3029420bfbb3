#include "ncpart/partition.hpp"

#include <algorithm>
#include <string>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

void sort_by_minimum(std::vector<Block>& blocks) {
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

}  // namespace

std::vector<std::size_t> NCPartition::block_labels() const {
  std::vector<std::size_t> labels(n_ + 1, 0);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (std::size_t x : blocks_[b]) labels[x] = b;
  }
  return labels;
}

NCPartition validate_partition(std::vector<Block> blocks, std::size_t n) {
  std::vector<std::size_t> label(n + 1, blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    Block& block = blocks[b];
    if (block.empty()) throw Error(ErrorKind::NotAPartition, "empty block");
    std::sort(block.begin(), block.end());
    for (std::size_t x : block) {
      if (x < 1 || x > n) {
        throw Error(ErrorKind::NotAPartition,
                    "element " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
      }
      if (label[x] != blocks.size()) {
        throw Error(ErrorKind::NotAPartition, "element " + std::to_string(x) + " repeated");
      }
      label[x] = b;
    }
  }
  for (std::size_t x = 1; x <= n; ++x) {
    if (label[x] == blocks.size()) {
      throw Error(ErrorKind::NotAPartition, "element " + std::to_string(x) + " is missing");
    }
  }

  // Sweep 1..n keeping the blocks that are open (started, not finished) on a
  // stack. Revisiting a block that is not on top means an arc crosses it.
  std::vector<std::size_t> cursor(blocks.size(), 0);
  std::vector<std::size_t> stack;
  for (std::size_t x = 1; x <= n; ++x) {
    const std::size_t b = label[x];
    if (cursor[b] == 0) {
      stack.push_back(b);
    } else if (stack.back() != b) {
      const std::size_t c = stack.back();
      const std::size_t p = blocks[b][cursor[b] - 1];
      const std::size_t q = blocks[c][cursor[c] - 1];
      const std::size_t r = blocks[c][cursor[c]];
      throw CrossingError({p, q, x, r});
    }
    if (++cursor[b] == blocks[b].size()) stack.pop_back();
  }

  sort_by_minimum(blocks);
  return NCPartition(n, std::move(blocks));
}

NCPartition make_partition_unchecked(std::size_t n, std::vector<Block> blocks) {
  sort_by_minimum(blocks);
  return NCPartition(n, std::move(blocks));
}

NCPartition partition_from_labels(std::span<const std::size_t> labels) {
  const std::size_t n = labels.empty() ? 0 : labels.size() - 1;
  std::size_t count = 0;
  for (std::size_t x = 1; x <= n; ++x) count = std::max(count, labels[x] + 1);
  std::vector<Block> blocks(count);
  for (std::size_t x = 1; x <= n; ++x) blocks[labels[x]].push_back(x);
  std::erase_if(blocks, [](const Block& b) { return b.empty(); });
  return make_partition_unchecked(n, std::move(blocks));
}

NCPartition singletons(std::size_t n) {
  std::vector<Block> blocks(n);
  for (std::size_t x = 1; x <= n; ++x) blocks[x - 1] = {x};
  return make_partition_unchecked(n, std::move(blocks));
}

NCPartition single_block(std::size_t n) {
  if (n == 0) return {};
  Block all(n);
  for (std::size_t x = 1; x <= n; ++x) all[x - 1] = x;
  return make_partition_unchecked(n, {std::move(all)});
}

}  // namespace ncpart
