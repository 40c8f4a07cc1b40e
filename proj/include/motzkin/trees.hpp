#ifndef MOTZKIN_TREES_HPP
#define MOTZKIN_TREES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/rational.hpp"

namespace motzkin {

/// Ternary tree stored as an index arena (iterative algorithms stay safe on
/// chains tens of thousands of nodes deep). Index kNone marks an empty slot;
/// an empty arena is the empty tree, otherwise index 0 is the root.
class TernaryTree {
 public:
  static constexpr std::int32_t kNone = -1;
  struct Node {
    std::int32_t left = kNone;
    std::int32_t middle = kNone;
    std::int32_t right = kNone;
  };

  TernaryTree() = default;

  bool empty() const { return nodes_.empty(); }
  std::size_t node_count() const { return nodes_.size(); }
  std::int32_t root() const { return nodes_.empty() ? kNone : 0; }
  const Node& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }

  std::int32_t add_node() {
    nodes_.push_back(Node{});
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }
  Node& node_mutable(std::int32_t i) { return nodes_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Node> nodes_;
};

/// Structural equality (layout-independent).
bool operator==(const TernaryTree& a, const TernaryTree& b);
inline bool operator!=(const TernaryTree& a, const TernaryTree& b) { return !(a == b); }

std::size_t node_count(const TernaryTree& t);

struct TreePair {
  TernaryTree first;
  TernaryTree second;
};

/// Non-crossing tree in the left/right-marker representation: the root holds
/// one undivided child list; every other node splits its children at the
/// marker. Stored as an index arena like TernaryTree.
class NonCrossingTree {
 public:
  struct Node {
    std::vector<std::int32_t> left;
    std::vector<std::int32_t> right;
  };

  NonCrossingTree() = default;

  const std::vector<std::int32_t>& root_children() const { return root_children_; }
  std::vector<std::int32_t>& root_children_mutable() { return root_children_; }
  std::size_t edge_count() const { return nodes_.size(); }
  const Node& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
  Node& node_mutable(std::int32_t i) { return nodes_[static_cast<std::size_t>(i)]; }

  std::int32_t add_node() {
    nodes_.push_back(Node{});
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

 private:
  std::vector<std::int32_t> root_children_;
  std::vector<Node> nodes_;
};

bool operator==(const NonCrossingTree& a, const NonCrossingTree& b);
inline bool operator!=(const NonCrossingTree& a, const NonCrossingTree& b) { return !(a == b); }

/// (child count, left child count) per non-root node, in leftmost-leaf
/// removal order. "Leftmost leaf" descends first children, left list first.
std::vector<std::pair<int, int>> nc_degree_pairs(const NonCrossingTree& t);

/// Nested 3-arrays with null for the empty subtree; "[null,null,null]" is a
/// single node.
std::string encode_tree(const TernaryTree& t);
TernaryTree decode_ternary(const std::string& text);

/// {"children":[node...]} with node = {"left":[...],"right":[...]}.
std::string encode_tree(const NonCrossingTree& t);
NonCrossingTree decode_noncrossing(const std::string& text);

}  // namespace motzkin

#endif
