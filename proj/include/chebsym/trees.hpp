#pragma once

#include <string>
#include <vector>

namespace chebsym {

// A rooted tree stored as a forest of child indices into the enclosing
// TreeSet, sorted so that each unordered tree has exactly one representation.
struct RootedTree {
  int order = 1;
  std::vector<int> children;
  double density = 1.0;  // gamma(t)
  std::string label;     // bracket notation, "t" for the single node
};

// All rooted trees with order <= max_order, grouped by ascending order.
// Child indices always refer to earlier entries.
std::vector<RootedTree> rooted_trees(int max_order);

}  // namespace chebsym
