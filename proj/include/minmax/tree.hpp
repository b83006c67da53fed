#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "minmax/perm.hpp"

namespace minmax {

enum class TreeVariant { MinMax, Min1Min2 };

/// For the MinMax variant an internal node is a MinRoot when its entry is the
/// minimum of its span and a MaxRoot when it is the maximum. The Min1Min2
/// variant reuses the same tags with MaxRoot meaning "second minimum".
enum class NodeKind : std::uint8_t { Leaf, MinRoot, MaxRoot };

std::string_view kind_label(NodeKind kind);         // "Leaf" / "Min" / "Max"
std::string_view kind_name(NodeKind kind);          // "leaf" / "min" / "max"
std::string_view variant_name(TreeVariant variant); // "minmax" / "min12"

/// Encodes the position-tree shape only. Two trees compare equal exactly when
/// their left/right child arrays coincide positionwise.
struct ShapeSignature {
  std::vector<std::pair<int, int>> children;  // (left, right) per position, 0 = none
  friend bool operator==(const ShapeSignature&, const ShapeSignature&) = default;
};

/// Position-indexed binary tree of a permutation. In the MinMax variant the
/// root of every subword is the leftmost of that subword's minimum and
/// maximum entries; in Min1Min2 it is the leftmost of the minimum and the
/// second minimum. Index 0 of the arrays is unused and a child/parent value
/// of 0 means "none".
struct MinMaxTree {
  struct Node {
    int parent = 0;
    int left = 0;
    int right = 0;
    int lo = 0, hi = 0;  // span: contiguous position interval of the subtree
    int depth = 0;       // root has depth 0
    NodeKind kind = NodeKind::Leaf;
    friend bool operator==(const Node&, const Node&) = default;
  };

  int n = 0;
  TreeVariant variant = TreeVariant::MinMax;
  int root = 0;
  std::vector<int> entry;   // entry[i] = p_i
  std::vector<Node> node;

  NodeKind node_kind(int pos) const;
  int children_count(int pos) const;

  /// Positions with no children, ascending.
  std::vector<int> leaf_positions() const;

  /// Among positions {i, i+1, i+2}, the one of strictly minimal depth. It is
  /// always a strict ancestor of the other two. Requires n >= 3, i <= n-2.
  int local_extremum(int i) const;

  /// True when every internal node is a minimum node. MinMax variant only.
  bool is_andre() const;

  ShapeSignature shape_signature() const;

  /// True when a is a strict ancestor of b.
  bool is_ancestor(int a, int b) const;

  friend bool operator==(const MinMaxTree&, const MinMaxTree&) = default;
};

/// Reference builder: direct recursion with linear extremum scans, worst-case
/// quadratic. Kept permanently as the oracle for the fast builder.
MinMaxTree build_tree(const Permutation& p, TreeVariant variant);

/// Same output as build_tree for every input; precomputed sparse tables make
/// every range-extremum lookup constant time after O(n log n) setup.
MinMaxTree build_tree_fast(const Permutation& p, TreeVariant variant);

inline MinMaxTree build_minmax(const Permutation& p) {
  return build_tree(p, TreeVariant::MinMax);
}
inline MinMaxTree build_minmax_fast(const Permutation& p) {
  return build_tree_fast(p, TreeVariant::MinMax);
}
inline MinMaxTree build_min12(const Permutation& p) {
  return build_tree(p, TreeVariant::Min1Min2);
}
inline MinMaxTree build_min12_fast(const Permutation& p) {
  return build_tree_fast(p, TreeVariant::Min1Min2);
}

}  // namespace minmax
