#pragma once

#include <vector>

#include "minmax/perm.hpp"
#include "minmax/tree.hpp"

namespace minmax {

/// Generator indices for the psi involutions; a subset of {1,...,n}. psi_n is
/// always the identity (the last position is always a leaf), so at most n-1
/// generators ever act nontrivially.
using GeneratorSet = std::vector<int>;

/// The involution psi_i: within the subtree rooted at position i, the root
/// entry switches between the subtree minimum and maximum while the other
/// entries are relabeled so their pattern is unchanged. Entries outside the
/// subtree's span are untouched; when position i is a leaf, p is returned
/// unchanged.
Permutation psi(const Permutation& p, int i);

/// Composition of psi over the indices of gens in ascending order. The
/// generators commute, so the order is a reproducibility convention, not a
/// semantic choice. An empty set returns p.
Permutation psi_set(const Permutation& p, const GeneratorSet& gens);

/// Positions i with psi(p, i) == p; identical to the leaf set of the tree.
std::vector<int> fixed_positions(const Permutation& p);

struct OrbitRecord {
  Permutation base;
  std::vector<int> generators;       // sorted, deduplicated
  std::vector<Permutation> members;  // lexicographically sorted, contains base
};

/// Breadth-first closure of {p} under the chosen generators. The closure size
/// is at most 2^|gens|; more than 25 generators are rejected.
OrbitRecord orbit(const Permutation& p, const GeneratorSet& gens);

}  // namespace minmax
