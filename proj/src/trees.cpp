#include "chebsym/trees.hpp"

#include <stdexcept>

namespace chebsym {

namespace {

// Extends `forest` (non-decreasing tree indices) until its orders sum to
// `remaining`, appending each completed forest to `out`.
void forests(const std::vector<RootedTree>& trees, int remaining, int min_index,
             std::vector<int>& forest, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(forest);
    return;
  }
  for (int idx = min_index; idx < static_cast<int>(trees.size()); ++idx) {
    if (trees[idx].order > remaining) continue;
    forest.push_back(idx);
    forests(trees, remaining - trees[idx].order, idx, forest, out);
    forest.pop_back();
  }
}

}  // namespace

std::vector<RootedTree> rooted_trees(int max_order) {
  if (max_order < 1) throw std::invalid_argument("tree order must be positive");
  std::vector<RootedTree> trees{{1, {}, 1.0, "t"}};
  for (int order = 2; order <= max_order; ++order) {
    // Only trees of order < `order` can be children; they are all present.
    const std::vector<RootedTree> smaller = trees;
    std::vector<std::vector<int>> found;
    std::vector<int> forest;
    forests(smaller, order - 1, 0, forest, found);
    for (auto& children : found) {
      RootedTree t;
      t.order = order;
      t.density = order;
      t.label = "[";
      for (std::size_t c = 0; c < children.size(); ++c) {
        t.density *= smaller[children[c]].density;
        if (c > 0) t.label += ",";
        t.label += smaller[children[c]].label;
      }
      t.label += "]";
      t.children = std::move(children);
      trees.push_back(std::move(t));
    }
  }
  return trees;
}

}  // namespace chebsym
