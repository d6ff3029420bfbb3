#include "ncpart/plane_tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ncpart/error.hpp"

namespace ncpart {

PlaneTree PlaneTree::from_degrees(std::vector<std::size_t> degrees) {
  if (degrees.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a plane tree has at least one vertex");
  }
  const std::size_t total = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0});
  if (total != degrees.size() - 1) {
    throw Error(ErrorKind::SumMismatch, "outdegrees sum to " + std::to_string(total) +
                                            " but a tree with " + std::to_string(degrees.size()) +
                                            " vertices has " + std::to_string(degrees.size() - 1) +
                                            " edges");
  }
  // Partial sums of (k - 1) must stay >= 0 until the final vertex.
  long long walk = 0;
  for (std::size_t j = 0; j + 1 < degrees.size(); ++j) {
    walk += static_cast<long long>(degrees[j]) - 1;
    if (walk < 0) {
      throw Error(ErrorKind::BallotViolation,
                  "Lukasiewicz walk drops below zero after vertex " + std::to_string(j));
    }
  }
  return PlaneTree(std::move(degrees));
}

PlaneTree make_tree(std::vector<std::size_t> degrees) {
  return PlaneTree::from_degrees(std::move(degrees));
}

std::size_t PlaneTree::leaf_count() const noexcept {
  return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), std::size_t{0}));
}

TreeLinks PlaneTree::links() const {
  const std::size_t n = degrees_.size();
  TreeLinks links;
  links.parent.assign(n, kNoVertex);
  links.depth.assign(n, 0);
  links.sibling_rank.assign(n, 0);
  links.child_offset.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    links.child_offset[v + 1] = links.child_offset[v] + degrees_[v];
  }
  links.child_list.resize(n - 1);

  // Stack of vertices that still expect children, with the number already seen.
  struct Open {
    std::size_t vertex;
    std::size_t seen;
  };
  std::vector<Open> stack;
  if (degrees_[0] > 0) stack.push_back({0, 0});
  for (std::size_t v = 1; v < n; ++v) {
    Open& top = stack.back();
    const std::size_t p = top.vertex;
    links.parent[v] = p;
    links.depth[v] = links.depth[p] + 1;
    links.sibling_rank[v] = top.seen;
    links.child_list[links.child_offset[p] + top.seen] = v;
    if (++top.seen == degrees_[p]) stack.pop_back();
    if (degrees_[v] > 0) stack.push_back({v, 0});
  }
  return links;
}

std::vector<Color> TwoTypeTree::colors() const {
  const TreeLinks links = tree.links();
  const Color other = root_color == Color::White ? Color::Black : Color::White;
  std::vector<Color> out(tree.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = links.depth[v] % 2 == 0 ? root_color : other;
  }
  return out;
}

}  // namespace ncpart
