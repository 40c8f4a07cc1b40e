#include "motzkin/bijections.hpp"

#include <algorithm>
#include <optional>

namespace motzkin {

namespace {

// Longest window steps[s..end) that starts with a Flat step, never drops
// below its start height, and ends back at it. Returns the start index, or
// nullopt. `end` is exclusive, 0-based.
std::optional<std::size_t> maximal_flat_led_window(const LatticePath& p,
                                                   std::size_t end) {
  const int base = p.height_after(end);
  std::size_t lo = end;
  while (lo > 0 && p.height_after(lo - 1) >= base) --lo;
  for (std::size_t s = lo; s < end; ++s) {
    if (p[s] == Step::Flat && p.height_after(s) == base) return s;
  }
  return std::nullopt;
}

void append_range(std::vector<Step>& out, const LatticePath& p,
                  std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) out.push_back(p[i]);
}

LatticePath slice(const LatticePath& p, std::size_t from, std::size_t to) {
  std::vector<Step> v;
  v.reserve(to - from);
  append_range(v, p, from, to);
  return LatticePath(std::move(v));
}

}  // namespace

PhiTriple phi_decompose(const LatticePath& m) {
  if (m.empty() || !classify(m).s_motzkin) {
    throw DomainError("phi_decompose requires a nonempty S-Motzkin path");
  }
  const std::size_t len = m.size();
  // penultimate axis contact (start point excluded)
  std::size_t pen = 0;
  for (std::size_t i = len - 1; i >= 1; --i) {
    if (m.height_after(i) == 0) { pen = i; break; }
  }
  const std::size_t up = pen;  // 0-based index of the region's opening Up
  PhiTriple out;
  out.c = slice(m, pen + 1, len - 1);
  // x: nearest Flat left of the removed Up
  std::size_t x = up;
  while (x > 0 && m[x - 1] != Step::Flat) --x;
  --x;
  auto s = maximal_flat_led_window(m, x);
  std::vector<Step> b;
  if (s) {
    out.a = slice(m, *s, x);
    append_range(b, m, 0, *s);
  } else {
    append_range(b, m, 0, x);
  }
  append_range(b, m, x + 1, up);
  out.b = LatticePath(std::move(b));
  return out;
}

LatticePath phi_compose(const PhiTriple& t) {
  std::vector<Step> out;
  out.reserve(t.a.size() + t.b.size() + t.c.size() + 3);
  std::size_t b1_end = 0;
  for (std::size_t i = t.b.size(); i-- > 0;) {
    if (t.b[i] == Step::Up) { b1_end = i + 1; break; }
  }
  append_range(out, t.b, 0, b1_end);
  append_range(out, t.a, 0, t.a.size());
  out.push_back(Step::Flat);
  append_range(out, t.b, b1_end, t.b.size());
  out.push_back(Step::Up);
  append_range(out, t.c, 0, t.c.size());
  out.push_back(Step::Down);
  return LatticePath(std::move(out));
}

TernaryTree s_to_ternary(const LatticePath& m) {
  if (!m.empty() && !classify(m).s_motzkin) {
    throw DomainError("s_to_ternary requires an S-Motzkin path");
  }
  TernaryTree tree;
  if (m.empty()) return tree;
  struct Item {
    LatticePath path;
    std::int32_t parent;
    int slot;  // 0=left 1=middle 2=right
  };
  std::vector<Item> work;
  work.push_back({m, TernaryTree::kNone, 0});
  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();
    if (item.path.empty()) continue;
    std::int32_t idx = tree.add_node();
    if (item.parent != TernaryTree::kNone) {
      auto& p = tree.node_mutable(item.parent);
      (item.slot == 0 ? p.left : item.slot == 1 ? p.middle : p.right) = idx;
    }
    PhiTriple t = phi_decompose(item.path);
    work.push_back({std::move(t.a), idx, 0});
    work.push_back({std::move(t.b), idx, 1});
    work.push_back({std::move(t.c), idx, 2});
  }
  return tree;
}

LatticePath ternary_to_s(const TernaryTree& t) {
  if (t.empty()) return LatticePath();
  // post-order over the arena; child paths are consumed as parents compose
  std::vector<LatticePath> built(t.node_count());
  std::vector<std::pair<std::int32_t, bool>> work{{t.root(), false}};
  while (!work.empty()) {
    auto [idx, expanded] = work.back();
    work.pop_back();
    const auto& n = t.node(idx);
    if (!expanded) {
      work.push_back({idx, true});
      if (n.left != TernaryTree::kNone) work.push_back({n.left, false});
      if (n.middle != TernaryTree::kNone) work.push_back({n.middle, false});
      if (n.right != TernaryTree::kNone) work.push_back({n.right, false});
    } else {
      auto take = [&](std::int32_t c) {
        return c == TernaryTree::kNone ? LatticePath()
                                       : std::move(built[static_cast<std::size_t>(c)]);
      };
      built[static_cast<std::size_t>(idx)] =
          phi_compose(PhiTriple{take(n.left), take(n.middle), take(n.right)});
    }
  }
  return std::move(built[static_cast<std::size_t>(t.root())]);
}

OmegaPair omega_split(const LatticePath& n) {
  if (!classify(n).t_motzkin) {
    throw DomainError("omega_split requires a T-Motzkin path");
  }
  OmegaPair out;
  if (n.empty()) return out;
  std::size_t x = n.size();
  while (x > 0 && n[x - 1] != Step::Flat) --x;
  --x;  // rightmost Flat; exists in any nonempty T-Motzkin path
  if (x == n.size() - 1) {
    // terminal-Flat case: map to (empty, Flat . rest)
    std::vector<Step> b{Step::Flat};
    append_range(b, n, 0, x);
    out.b = LatticePath(std::move(b));
    return out;
  }
  auto s = maximal_flat_led_window(n, x);
  std::vector<Step> a{Step::Flat};
  if (s) {
    out.b = slice(n, *s, x);
    append_range(a, n, 0, *s);
  } else {
    append_range(a, n, 0, x);
  }
  append_range(a, n, x + 1, n.size());
  out.a = LatticePath(std::move(a));
  return out;
}

LatticePath omega_join(const OmegaPair& p) {
  if (!p.a.empty() && !classify(p.a).s_motzkin) {
    throw DomainError("omega_join: first component must be empty or S-Motzkin");
  }
  if (!p.b.empty() && !classify(p.b).s_motzkin) {
    throw DomainError("omega_join: second component must be empty or S-Motzkin");
  }
  if (p.a.empty() && p.b.empty()) return LatticePath();
  std::vector<Step> out;
  if (p.a.empty()) {
    append_range(out, p.b, 1, p.b.size());
    out.push_back(Step::Flat);
    return LatticePath(std::move(out));
  }
  std::size_t last_up = 0;
  for (std::size_t i = p.a.size(); i-- > 1;) {
    if (p.a[i] == Step::Up) { last_up = i; break; }
  }
  append_range(out, p.a, 1, last_up + 1);
  append_range(out, p.b, 0, p.b.size());
  out.push_back(Step::Flat);
  append_range(out, p.a, last_up + 1, p.a.size());
  return LatticePath(std::move(out));
}

TreePair t_to_tree_pair(const LatticePath& n) {
  OmegaPair p = omega_split(n);
  return TreePair{s_to_ternary(p.a), s_to_ternary(p.b)};
}

LatticePath tree_pair_to_t(const TreePair& p) {
  return omega_join(OmegaPair{ternary_to_s(p.first), ternary_to_s(p.second)});
}

NonCrossingTree s_to_noncrossing(const LatticePath& m) {
  NonCrossingTree tree;
  if (m.empty()) return tree;
  PieceDecomposition d = decompose_pieces(m);
  // nodes still awaiting their characteristic pair; most recently drawn
  // (rightmost) is served first
  std::vector<std::int32_t> open;
  for (int i = 0; i < d.trailing_downs; ++i) {
    std::int32_t c = tree.add_node();
    tree.root_children_mutable().push_back(c);
    open.push_back(c);
  }
  for (auto it = d.pieces.rbegin(); it != d.pieces.rend(); ++it) {
    std::int32_t v = open.back();
    open.pop_back();
    auto& node = tree.node_mutable(v);
    for (int k = 0; k < it->flat_position - 1; ++k) {
      std::int32_t c = tree.add_node();
      tree.node_mutable(v).left.push_back(c);
    }
    for (int k = 0; k < it->down_count - it->flat_position + 1; ++k) {
      std::int32_t c = tree.add_node();
      tree.node_mutable(v).right.push_back(c);
    }
    (void)node;
    const auto& nv = tree.node(v);
    open.insert(open.end(), nv.left.begin(), nv.left.end());
    open.insert(open.end(), nv.right.begin(), nv.right.end());
  }
  return tree;
}

LatticePath noncrossing_to_s(const NonCrossingTree& t) {
  if (t.root_children().empty()) {
    if (t.edge_count() != 0) {
      throw DomainError("non-crossing tree has nodes unreachable from the root");
    }
    return LatticePath();
  }
  // characteristic pair of each node from the original structure
  std::vector<std::pair<int, int>> pair(t.edge_count());
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    const auto& n = t.node(static_cast<std::int32_t>(i));
    pair[i] = {static_cast<int>(n.left.size() + n.right.size()),
               static_cast<int>(n.left.size())};
  }
  // mutable child lists for leftmost-leaf removal
  std::vector<std::vector<std::int32_t>> kids(t.edge_count() + 1);
  kids[0] = t.root_children();
  for (std::size_t i = 0; i < t.edge_count(); ++i) {
    const auto& n = t.node(static_cast<std::int32_t>(i));
    auto& k = kids[i + 1];
    k.insert(k.end(), n.left.begin(), n.left.end());
    k.insert(k.end(), n.right.begin(), n.right.end());
  }
  const int c = static_cast<int>(t.root_children().size());
  std::vector<Step> out;
  bool first = true;
  while (!kids[0].empty()) {
    std::size_t parent = 0;
    std::int32_t cur = kids[0].front();
    while (!kids[static_cast<std::size_t>(cur) + 1].empty()) {
      parent = static_cast<std::size_t>(cur) + 1;
      cur = kids[parent].front();
    }
    kids[parent].erase(kids[parent].begin());
    if (first) {
      // the first leaf is discarded; it contributes the initial Flat only
      out.push_back(Step::Flat);
      first = false;
      continue;
    }
    auto [u, j] = pair[static_cast<std::size_t>(cur)];
    out.push_back(Step::Up);
    out.insert(out.end(), static_cast<std::size_t>(j), Step::Down);
    out.push_back(Step::Flat);
    out.insert(out.end(), static_cast<std::size_t>(u - j), Step::Down);
  }
  out.push_back(Step::Up);
  out.insert(out.end(), static_cast<std::size_t>(c), Step::Down);
  return LatticePath(std::move(out));
}

}  // namespace motzkin
