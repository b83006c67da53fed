#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minmax/errors.hpp"

namespace minmax {

/// A permutation of {1,...,n}. Positions and values are both 1-based; the
/// underlying storage is 0-based and reachable through entries().
class Permutation {
 public:
  /// Validates that the entries are a bijection on {1,...,n}, n >= 1.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);

  /// Wraps entries the caller already knows to be a valid permutation.
  static Permutation unchecked(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }

  /// Entry at 1-based position pos.
  int at(int pos) const;

  const std::vector<int>& entries() const { return entries_; }

  /// Space-separated entries, e.g. "3 6 7 1".
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct unchecked_tag {};
  Permutation(std::vector<int> entries, unchecked_tag)
      : entries_(std::move(entries)) {}

  std::vector<int> entries_;
};

/// Parses whitespace- or comma-separated integers into a permutation.
/// Throws Empty when there are no tokens, NotAPermutation otherwise.
Permutation parse_permutation(std::string_view text);

/// The permutation whose entry at position i is n+1-p_i. An involution.
Permutation complement(const Permutation& p);

// Words are sequences of pairwise-distinct integers, not necessarily 1..k.

/// The unique permutation with the same pairwise order relations as the word:
/// result_i < result_j exactly when word_i < word_j.
Permutation pattern_of(std::span<const int> word);

/// Rewrites the word onto the given value set so the pattern is unchanged:
/// the k-th smallest value lands at the position of the word's k-th smallest.
std::vector<int> relabel_order_isomorphic(std::span<const int> word,
                                          std::vector<int> values);

/// n! as a 64-bit count; n must be at most 20.
std::uint64_t factorial(int n);

/// Lexicographic index of p within S_n, in [0, n!). Inverse of unrank.
std::uint64_t rank(const Permutation& p);

/// The index-th permutation of S_n in lexicographic order, via the factorial
/// number system.
Permutation unrank(int n, std::uint64_t index);

/// Next permutation in lexicographic order, or nullopt at the last one.
std::optional<Permutation> successor(const Permutation& p);

/// Uniform draw from S_n by an unbiased shuffle over a counter-based
/// generator: the result is a pure function of (n, seed, stream), so streams
/// are replayable and can be consumed in parallel.
Permutation random_permutation(int n, std::uint64_t seed, std::uint64_t stream);

}  // namespace minmax
