#include "minmax/tree.hpp"

#include <bit>
#include <string>

namespace minmax {

namespace {

// Chosen root of a subword and whether that root carries the span minimum.
struct RootChoice {
  int pos = 0;
  bool is_min = false;
};

// Sparse argmin/argmax tables over the 1-based entry array. Queries are
// inclusive on both ends.
class RangeExtrema {
 public:
  explicit RangeExtrema(const std::vector<int>& entry)
      : e_(&entry), n_(static_cast<int>(entry.size()) - 1) {
    levels_ = static_cast<int>(std::bit_width(static_cast<unsigned>(n_)));
    const size_t row = static_cast<size_t>(n_) + 1;
    min_.assign(static_cast<size_t>(levels_) * row, 0);
    max_.assign(static_cast<size_t>(levels_) * row, 0);
    for (int i = 1; i <= n_; ++i)
      min_[static_cast<size_t>(i)] = max_[static_cast<size_t>(i)] = i;
    for (int l = 1; l < levels_; ++l) {
      const int len = 1 << l;
      const int half = len >> 1;
      const size_t cur = static_cast<size_t>(l) * row;
      const size_t prev = cur - row;
      for (int i = 1; i + len - 1 <= n_; ++i) {
        min_[cur + static_cast<size_t>(i)] =
            lesser(min_[prev + static_cast<size_t>(i)],
                   min_[prev + static_cast<size_t>(i + half)]);
        max_[cur + static_cast<size_t>(i)] =
            greater(max_[prev + static_cast<size_t>(i)],
                    max_[prev + static_cast<size_t>(i + half)]);
      }
    }
  }

  int min_pos(int lo, int hi) const {
    const int k =
        static_cast<int>(std::bit_width(static_cast<unsigned>(hi - lo + 1))) - 1;
    const size_t cur = static_cast<size_t>(k) * (static_cast<size_t>(n_) + 1);
    return lesser(min_[cur + static_cast<size_t>(lo)],
                  min_[cur + static_cast<size_t>(hi - (1 << k) + 1)]);
  }

  int max_pos(int lo, int hi) const {
    const int k =
        static_cast<int>(std::bit_width(static_cast<unsigned>(hi - lo + 1))) - 1;
    const size_t cur = static_cast<size_t>(k) * (static_cast<size_t>(n_) + 1);
    return greater(max_[cur + static_cast<size_t>(lo)],
                   max_[cur + static_cast<size_t>(hi - (1 << k) + 1)]);
  }

  // Position of the second-smallest entry on [lo, hi]; needs hi > lo. The
  // runner-up is the minimum of the range with the minimum's position cut out.
  int second_min_pos(int lo, int hi) const {
    const int m = min_pos(lo, hi);
    int best = 0;
    if (lo <= m - 1) best = min_pos(lo, m - 1);
    if (m + 1 <= hi) {
      const int c = min_pos(m + 1, hi);
      best = best ? lesser(best, c) : c;
    }
    return best;
  }

 private:
  int lesser(int a, int b) const {
    return (*e_)[static_cast<size_t>(a)] < (*e_)[static_cast<size_t>(b)] ? a : b;
  }
  int greater(int a, int b) const {
    return (*e_)[static_cast<size_t>(a)] > (*e_)[static_cast<size_t>(b)] ? a : b;
  }

  const std::vector<int>* e_;
  int n_;
  int levels_;
  std::vector<int> min_, max_;
};

// Linear scan for the variant's two competing positions; hi > lo.
RootChoice scan_root(const std::vector<int>& e, int lo, int hi,
                     TreeVariant variant) {
  if (variant == TreeVariant::MinMax) {
    int pmin = lo, pmax = lo;
    for (int j = lo + 1; j <= hi; ++j) {
      if (e[static_cast<size_t>(j)] < e[static_cast<size_t>(pmin)]) pmin = j;
      if (e[static_cast<size_t>(j)] > e[static_cast<size_t>(pmax)]) pmax = j;
    }
    const int r = pmin < pmax ? pmin : pmax;
    return {r, r == pmin};
  }
  int p1 = lo;  // minimum
  int p2 = 0;   // second minimum
  for (int j = lo + 1; j <= hi; ++j) {
    if (e[static_cast<size_t>(j)] < e[static_cast<size_t>(p1)]) {
      p2 = p1;
      p1 = j;
    } else if (p2 == 0 ||
               e[static_cast<size_t>(j)] < e[static_cast<size_t>(p2)]) {
      p2 = j;
    }
  }
  const int r = p1 < p2 ? p1 : p2;
  return {r, r == p1};
}

RootChoice query_root(const RangeExtrema& ex, int lo, int hi,
                      TreeVariant variant) {
  const int p1 = ex.min_pos(lo, hi);
  const int p2 = variant == TreeVariant::MinMax ? ex.max_pos(lo, hi)
                                                : ex.second_min_pos(lo, hi);
  const int r = p1 < p2 ? p1 : p2;
  return {r, r == p1};
}

MinMaxTree make_skeleton(const Permutation& p, TreeVariant variant) {
  MinMaxTree t;
  t.n = p.size();
  t.variant = variant;
  t.entry.assign(static_cast<size_t>(t.n) + 1, 0);
  for (int i = 1; i <= t.n; ++i)
    t.entry[static_cast<size_t>(i)] = p.entries()[static_cast<size_t>(i - 1)];
  t.node.assign(static_cast<size_t>(t.n) + 1, {});
  return t;
}

// Explicit stack instead of recursion: a monotone permutation makes the tree
// a chain, so the recursion depth would be n.
template <typename RootFn>
void fill_nodes(MinMaxTree& t, RootFn root_of) {
  struct Frame {
    int lo, hi, parent, depth;
    bool as_left;
  };
  std::vector<Frame> stack;
  stack.push_back({1, t.n, 0, 0, false});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const RootChoice c =
        f.lo == f.hi ? RootChoice{f.lo, true} : root_of(f.lo, f.hi);
    const int r = c.pos;
    auto& nd = t.node[static_cast<size_t>(r)];
    nd.parent = f.parent;
    nd.lo = f.lo;
    nd.hi = f.hi;
    nd.depth = f.depth;
    if (f.parent == 0) {
      t.root = r;
    } else if (f.as_left) {
      t.node[static_cast<size_t>(f.parent)].left = r;
    } else {
      t.node[static_cast<size_t>(f.parent)].right = r;
    }
    if (f.lo == f.hi) continue;  // kind stays Leaf
    nd.kind = c.is_min ? NodeKind::MinRoot : NodeKind::MaxRoot;
    if (f.lo <= r - 1) stack.push_back({f.lo, r - 1, r, f.depth + 1, true});
    if (r + 1 <= f.hi) stack.push_back({r + 1, f.hi, r, f.depth + 1, false});
  }
}

}  // namespace

std::string_view kind_label(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "Leaf";
    case NodeKind::MinRoot: return "Min";
    case NodeKind::MaxRoot: return "Max";
  }
  return "?";
}

std::string_view kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::MinRoot: return "min";
    case NodeKind::MaxRoot: return "max";
  }
  return "?";
}

std::string_view variant_name(TreeVariant variant) {
  return variant == TreeVariant::MinMax ? "minmax" : "min12";
}

NodeKind MinMaxTree::node_kind(int pos) const {
  if (pos < 1 || pos > n)
    throw PositionOutOfRange("position " + std::to_string(pos) +
                             " outside 1.." + std::to_string(n));
  return node[static_cast<size_t>(pos)].kind;
}

int MinMaxTree::children_count(int pos) const {
  if (pos < 1 || pos > n)
    throw PositionOutOfRange("position " + std::to_string(pos) +
                             " outside 1.." + std::to_string(n));
  const auto& nd = node[static_cast<size_t>(pos)];
  return (nd.left != 0 ? 1 : 0) + (nd.right != 0 ? 1 : 0);
}

std::vector<int> MinMaxTree::leaf_positions() const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (node[static_cast<size_t>(i)].kind == NodeKind::Leaf) out.push_back(i);
  return out;
}

int MinMaxTree::local_extremum(int i) const {
  if (n < 3 || i < 1 || i > n - 2)
    throw PositionOutOfRange("local extremum needs 1 <= i <= n-2, got i=" +
                             std::to_string(i) + ", n=" + std::to_string(n));
  int best = i;
  for (int j = i + 1; j <= i + 2; ++j)
    if (node[static_cast<size_t>(j)].depth <
        node[static_cast<size_t>(best)].depth)
      best = j;
  return best;
}

bool MinMaxTree::is_andre() const {
  if (variant != TreeVariant::MinMax)
    throw WrongVariant("is_andre is defined for the MinMax variant only");
  for (int i = 1; i <= n; ++i)
    if (node[static_cast<size_t>(i)].kind == NodeKind::MaxRoot) return false;
  return true;
}

ShapeSignature MinMaxTree::shape_signature() const {
  ShapeSignature sig;
  sig.children.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i)
    sig.children.emplace_back(node[static_cast<size_t>(i)].left,
                              node[static_cast<size_t>(i)].right);
  return sig;
}

bool MinMaxTree::is_ancestor(int a, int b) const {
  for (int cur = node[static_cast<size_t>(b)].parent; cur != 0;
       cur = node[static_cast<size_t>(cur)].parent)
    if (cur == a) return true;
  return false;
}

MinMaxTree build_tree(const Permutation& p, TreeVariant variant) {
  MinMaxTree t = make_skeleton(p, variant);
  fill_nodes(t, [&](int lo, int hi) {
    return scan_root(t.entry, lo, hi, variant);
  });
  return t;
}

MinMaxTree build_tree_fast(const Permutation& p, TreeVariant variant) {
  MinMaxTree t = make_skeleton(p, variant);
  const RangeExtrema ex(t.entry);
  fill_nodes(t, [&](int lo, int hi) { return query_root(ex, lo, hi, variant); });
  return t;
}

}  // namespace minmax
