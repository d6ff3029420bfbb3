#include "ncpart/bijections.hpp"

#include <algorithm>

namespace ncpart {

namespace {

// Builds the dual tree in preorder. A white task is the open interval (lo, hi)
// of a face; its children are the outermost blocks inside that interval. A
// black task is a block; its children are the faces between consecutive elements.
class DualBuilder {
 public:
  explicit DualBuilder(const NCPartition& p) : p_(p), label_(p.block_labels()) {}

  std::vector<std::size_t> build_circ() {
    degrees_.reserve(p_.n() + 1);
    tasks_.push_back({Kind::White, 0, p_.n() + 1});
    run();
    return std::move(degrees_);
  }

  std::vector<std::size_t> build_bullet() {
    degrees_.reserve(p_.n() + 1);
    const Block& root = p_.block(label_[p_.n()]);
    degrees_.push_back(root.size());
    push_gaps(root);
    tasks_.push_back({Kind::White, 0, root.front()});
    run();
    return std::move(degrees_);
  }

 private:
  enum class Kind { White, Black };
  struct Task {
    Kind kind;
    std::size_t a;
    std::size_t b;
  };

  void push_gaps(const Block& block) {
    for (std::size_t i = block.size() - 1; i-- > 0;) {
      tasks_.push_back({Kind::White, block[i], block[i + 1]});
    }
  }

  void run() {
    std::vector<std::size_t> outer;
    while (!tasks_.empty()) {
      const Task task = tasks_.back();
      tasks_.pop_back();
      if (task.kind == Kind::Black) {
        const Block& block = p_.block(task.a);
        degrees_.push_back(block.size() - 1);
        push_gaps(block);
        continue;
      }
      outer.clear();
      for (std::size_t x = task.a + 1; x < task.b;) {
        const std::size_t b = label_[x];
        outer.push_back(b);
        x = p_.block(b).back() + 1;
      }
      degrees_.push_back(outer.size());
      for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
        tasks_.push_back({Kind::Black, *it, 0});
      }
    }
  }

  const NCPartition& p_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> degrees_;
  std::vector<Task> tasks_;
};

}  // namespace

TwoTypeTree dual_tree_circ(const NCPartition& p) {
  return {PlaneTree::from_degrees(DualBuilder(p).build_circ()), Color::White};
}

TwoTypeTree dual_tree_bullet(const NCPartition& p) {
  if (p.n() == 0) return {PlaneTree(), Color::Black};
  return {PlaneTree::from_degrees(DualBuilder(p).build_bullet()), Color::Black};
}

PlaneTree js_forward(const TwoTypeTree& t) {
  const PlaneTree& tree = t.tree;
  const std::size_t size = tree.vertex_count();
  if (size == 1) return PlaneTree();
  const TreeLinks links = tree.links();

  auto first_child_or_self = [&](std::size_t w) {
    return tree.degree(w) == 0 ? w : links.children(w)[0];
  };
  auto successor = [&](std::size_t v) {
    if (links.is_last_child(v)) return links.parent[v];
    return links.children(links.parent[v])[links.sibling_rank[v] + 1];
  };

  // Depth-first traversal of the image tree; only odd-generation vertices
  // have children there.
  std::vector<std::size_t> degrees;
  degrees.reserve(size);
  struct Frame {
    std::size_t vertex;
    std::size_t next;  // index of the next image child to visit
  };
  std::vector<Frame> stack;
  auto enter = [&](std::size_t v) {
    if (links.depth[v] % 2 == 0) {
      degrees.push_back(0);
    } else {
      degrees.push_back(tree.degree(v) + 1);
      stack.push_back({v, 0});
    }
  };
  enter(links.children(0)[0]);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::size_t v = top.vertex;
    const std::size_t k = tree.degree(v);
    if (top.next > k) {
      stack.pop_back();
      continue;
    }
    const std::size_t i = top.next++;
    enter(i < k ? first_child_or_self(links.children(v)[i]) : successor(v));
  }
  return PlaneTree::from_degrees(std::move(degrees));
}

PlaneTree t_circ(const NCPartition& p) { return js_forward(dual_tree_circ(p)); }

PlaneTree t_bullet(const NCPartition& p) { return js_forward(dual_tree_bullet(p)); }

NCPartition p_circ(const PlaneTree& t) {
  const TreeLinks links = t.links();
  std::vector<Block> blocks;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    const auto children = links.children(v);
    if (!children.empty()) blocks.emplace_back(children.begin(), children.end());
  }
  return make_partition_unchecked(t.vertex_count() - 1, std::move(blocks));
}

NCPartition p_bullet(const PlaneTree& t) {
  const TreeLinks links = t.links();
  const std::size_t size = t.vertex_count();
  std::vector<std::size_t> labels(size, 0);
  std::size_t next_label = 0;
  for (std::size_t v = 1; v < size; ++v) {
    const std::size_t parent = links.parent[v];
    labels[v] = (parent != 0 && links.is_last_child(v)) ? labels[parent] : next_label++;
  }
  return partition_from_labels(labels);
}

PlaneTree b_transform(const PlaneTree& t) {
  const TreeLinks links = t.links();
  const std::size_t size = t.vertex_count();
  std::vector<std::size_t> top(size, 0);
  std::vector<std::size_t> degrees(size, 0);
  for (std::size_t v = 0; v < size; ++v) {
    const std::size_t parent = links.parent[v];
    top[v] = (v == 0 || !links.is_last_child(v)) ? v : top[parent];
    if (v == 0) continue;
    const std::size_t rank = links.sibling_rank[v];
    const std::size_t partner = rank > 0 ? links.children(parent)[rank - 1] : top[parent];
    ++degrees[partner];
  }
  return PlaneTree::from_degrees(std::move(degrees));
}

NCPartition kreweras(const NCPartition& p) { return p_bullet(t_circ(p)); }

NCPartition partition_from_walk(const LukaWalk& w) {
  const auto values = w.values();
  const std::size_t n = w.n();
  std::vector<std::size_t> labels(n + 1, 0);
  std::vector<std::size_t> stack{0};
  for (std::size_t m = 1; m <= n; ++m) {
    while (values[stack.back()] > values[m]) stack.pop_back();
    labels[m] = stack.back();
    stack.push_back(m);
  }
  return partition_from_labels(labels);
}

}  // namespace ncpart
