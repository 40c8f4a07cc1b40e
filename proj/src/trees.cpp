#include "motzkin/trees.hpp"

#include <json.hpp>

namespace motzkin {

using nlohmann::json;

bool operator==(const TernaryTree& a, const TernaryTree& b) {
  if (a.node_count() != b.node_count()) return false;
  if (a.empty()) return true;
  std::vector<std::pair<std::int32_t, std::int32_t>> work{{a.root(), b.root()}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if ((x == TernaryTree::kNone) != (y == TernaryTree::kNone)) return false;
    if (x == TernaryTree::kNone) continue;
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    work.push_back({nx.left, ny.left});
    work.push_back({nx.middle, ny.middle});
    work.push_back({nx.right, ny.right});
  }
  return true;
}

std::size_t node_count(const TernaryTree& t) { return t.node_count(); }

bool operator==(const NonCrossingTree& a, const NonCrossingTree& b) {
  if (a.edge_count() != b.edge_count()) return false;
  if (a.root_children().size() != b.root_children().size()) return false;
  std::vector<std::pair<std::int32_t, std::int32_t>> work;
  for (std::size_t i = 0; i < a.root_children().size(); ++i) {
    work.push_back({a.root_children()[i], b.root_children()[i]});
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.left.size() != ny.left.size() || nx.right.size() != ny.right.size()) {
      return false;
    }
    for (std::size_t i = 0; i < nx.left.size(); ++i) work.push_back({nx.left[i], ny.left[i]});
    for (std::size_t i = 0; i < nx.right.size(); ++i) work.push_back({nx.right[i], ny.right[i]});
  }
  return true;
}

std::vector<std::pair<int, int>> nc_degree_pairs(const NonCrossingTree& t) {
  // Simulate leftmost-leaf removal on a mutable copy of the child lists.
  std::vector<std::vector<std::int32_t>> kids(t.edge_count() + 1);
  // slot 0 holds the root list; node i lives in slot i+1 with left++right merged
  kids[0] = t.root_children();
  std::vector<std::pair<int, int>> pairs(t.edge_count());
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    const auto& n = t.node(static_cast<std::int32_t>(i));
    pairs[i] = {static_cast<int>(n.left.size() + n.right.size()),
                static_cast<int>(n.left.size())};
    auto& k = kids[i + 1];
    k.insert(k.end(), n.left.begin(), n.left.end());
    k.insert(k.end(), n.right.begin(), n.right.end());
  }
  std::vector<std::pair<int, int>> out;
  out.reserve(t.edge_count());
  while (!kids[0].empty()) {
    // walk first-child links down to a leaf
    std::size_t parent = 0;
    std::int32_t cur = kids[0].front();
    while (!kids[cur + 1].empty()) {
      parent = static_cast<std::size_t>(cur) + 1;
      cur = kids[cur + 1].front();
    }
    out.push_back(pairs[static_cast<std::size_t>(cur)]);
    kids[parent].erase(kids[parent].begin());
  }
  return out;
}

namespace {

json ternary_to_json(const TernaryTree& t) {
  if (t.empty()) return nullptr;
  // bottom-up over the arena: children always have larger indices is NOT
  // guaranteed, so resolve with an explicit two-phase stack instead
  struct Item {
    std::int32_t idx;
    bool expanded;
  };
  std::vector<Item> work{{t.root(), false}};
  std::vector<std::pair<std::int32_t, json>> done;  // idx -> built value
  auto find_done = [&done](std::int32_t idx) -> json {
    for (auto it = done.rbegin(); it != done.rend(); ++it) {
      if (it->first == idx) {
        json v = std::move(it->second);
        done.erase(std::next(it).base());
        return v;
      }
    }
    return nullptr;
  };
  while (!work.empty()) {
    Item item = work.back();
    work.pop_back();
    if (item.idx == TernaryTree::kNone) {
      done.push_back({TernaryTree::kNone, nullptr});
      continue;
    }
    const auto& n = t.node(item.idx);
    if (!item.expanded) {
      work.push_back({item.idx, true});
      work.push_back({n.left, false});
      work.push_back({n.middle, false});
      work.push_back({n.right, false});
    } else {
      // children were pushed right-to-left onto `done`
      json left = find_done(n.left);
      json middle = find_done(n.middle);
      json right = find_done(n.right);
      done.push_back({item.idx, json::array({std::move(left), std::move(middle),
                                             std::move(right)})});
    }
  }
  return std::move(done.back().second);
}

}  // namespace

std::string encode_tree(const TernaryTree& t) { return ternary_to_json(t).dump(); }

namespace {

void decode_ternary_into(const json& j, TernaryTree& out, std::int32_t slot_of,
                         int which, const std::string& path);

struct DecodeItem {
  const json* value;
  std::int32_t parent;  // kNone for root
  int which;            // 0=left 1=middle 2=right
  std::string path;
};

}  // namespace

TernaryTree decode_ternary(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  TernaryTree out;
  std::vector<DecodeItem> work{{&j, TernaryTree::kNone, 0, "$"}};
  while (!work.empty()) {
    DecodeItem item = work.back();
    work.pop_back();
    const json& v = *item.value;
    if (v.is_null()) continue;
    if (!v.is_array() || v.size() != 3) {
      throw ParseError("ternary tree node must be null or a 3-array at " + item.path);
    }
    std::int32_t idx = out.add_node();
    if (item.parent != TernaryTree::kNone) {
      auto& p = out.node_mutable(item.parent);
      (item.which == 0 ? p.left : item.which == 1 ? p.middle : p.right) = idx;
    }
    work.push_back({&v[2], idx, 2, item.path + "[2]"});
    work.push_back({&v[1], idx, 1, item.path + "[1]"});
    work.push_back({&v[0], idx, 0, item.path + "[0]"});
  }
  return out;
}

std::string encode_tree(const NonCrossingTree& t) {
  // serialize by building json bottom-up over node indices; children lists
  // reference nodes, so fill a per-node json table in dependency order
  std::vector<json> table(t.edge_count());
  std::vector<char> built(t.edge_count(), 0);
  std::vector<std::pair<std::int32_t, bool>> work;
  for (auto c : t.root_children()) work.push_back({c, false});
  while (!work.empty()) {
    auto [idx, expanded] = work.back();
    work.pop_back();
    const auto& n = t.node(idx);
    if (!expanded) {
      work.push_back({idx, true});
      for (auto c : n.left) work.push_back({c, false});
      for (auto c : n.right) work.push_back({c, false});
    } else {
      json left = json::array();
      json right = json::array();
      for (auto c : n.left) left.push_back(table[static_cast<std::size_t>(c)]);
      for (auto c : n.right) right.push_back(table[static_cast<std::size_t>(c)]);
      table[static_cast<std::size_t>(idx)] = json{{"left", std::move(left)},
                                                  {"right", std::move(right)}};
      built[static_cast<std::size_t>(idx)] = 1;
    }
  }
  json children = json::array();
  for (auto c : t.root_children()) children.push_back(table[static_cast<std::size_t>(c)]);
  return json{{"children", std::move(children)}}.dump();
}

NonCrossingTree decode_noncrossing(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("children") || !j["children"].is_array()) {
    throw ParseError("non-crossing tree must be {\"children\":[...]} at $");
  }
  NonCrossingTree out;
  struct Item {
    const json* value;
    std::int32_t parent;  // kNone: root list
    bool left_side;
    std::string path;
  };
  std::vector<Item> work;
  const json& rc = j["children"];
  for (std::size_t i = rc.size(); i-- > 0;) {
    work.push_back({&rc[i], TernaryTree::kNone, false,
                    "$.children[" + std::to_string(i) + "]"});
  }
  while (!work.empty()) {
    Item item = work.back();
    work.pop_back();
    const json& v = *item.value;
    if (!v.is_object() || !v.contains("left") || !v.contains("right") ||
        !v["left"].is_array() || !v["right"].is_array()) {
      throw ParseError(
          "non-crossing node must be {\"left\":[...],\"right\":[...]} at " +
          item.path);
    }
    std::int32_t idx = out.add_node();
    if (item.parent == TernaryTree::kNone) {
      out.root_children_mutable().push_back(idx);
    } else {
      auto& p = out.node_mutable(item.parent);
      (item.left_side ? p.left : p.right).push_back(idx);
    }
    const json& l = v["left"];
    const json& r = v["right"];
    for (std::size_t i = r.size(); i-- > 0;) {
      work.push_back({&r[i], idx, false, item.path + ".right[" + std::to_string(i) + "]"});
    }
    for (std::size_t i = l.size(); i-- > 0;) {
      work.push_back({&l[i], idx, true, item.path + ".left[" + std::to_string(i) + "]"});
    }
  }
  return out;
}

}  // namespace motzkin
