#include "ncpart/luka_walk.hpp"

#include <string>

#include "ncpart/error.hpp"

namespace ncpart {

LukaWalk LukaWalk::from_values(std::vector<std::int64_t> values) {
  if (values.size() < 2) {
    throw Error(ErrorKind::InvalidWalk, "a walk has at least two values");
  }
  if (values.front() != 0) throw Error(ErrorKind::InvalidWalk, "walk must start at 0");
  if (values.back() != -1) throw Error(ErrorKind::InvalidWalk, "walk must end at -1");
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    if (values[j + 1] - values[j] < -1) {
      throw Error(ErrorKind::InvalidWalk, "step " + std::to_string(j) + " -> " +
                                              std::to_string(j + 1) + " is below -1");
    }
    if (values[j] < 0) {
      throw Error(ErrorKind::InvalidWalk,
                  "walk is negative at index " + std::to_string(j) + " before the end");
    }
  }
  return LukaWalk(std::move(values));
}

LukaWalk lukasiewicz_path(const PlaneTree& tree) {
  const auto degrees = tree.degrees();
  std::vector<std::int64_t> values(degrees.size() + 1);
  values[0] = 0;
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    values[j + 1] = values[j] + static_cast<std::int64_t>(degrees[j]) - 1;
  }
  return LukaWalk(std::move(values));
}

PlaneTree tree_from_walk(const LukaWalk& walk) {
  const auto values = walk.values();
  std::vector<std::size_t> degrees(values.size() - 1);
  for (std::size_t j = 0; j < degrees.size(); ++j) {
    degrees[j] = static_cast<std::size_t>(values[j + 1] - values[j] + 1);
  }
  return PlaneTree::from_degrees(std::move(degrees));
}

}  // namespace ncpart
