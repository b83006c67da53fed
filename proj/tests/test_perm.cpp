#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "minmax/perm.hpp"

using namespace minmax;

namespace {

std::vector<int> figure_perm() { return {3, 6, 7, 1, 5, 2, 10, 4, 9, 8}; }

// Apply fn to every permutation of S_n in lexicographic order.
template <typename Fn>
void for_all(int n, Fn&& fn) {
  Permutation p = Permutation::identity(n);
  while (true) {
    fn(p);
    auto next = successor(p);
    if (!next) break;
    p = *next;
  }
}

}  // namespace

TEST_CASE("parse accepts spaces and commas") {
  CHECK(parse_permutation("3 6 7 1 5 2 10 4 9 8").entries() == figure_perm());
  CHECK(parse_permutation("1").entries() == std::vector<int>{1});
  CHECK(parse_permutation("3,1,2").entries() == std::vector<int>{3, 1, 2});
  CHECK(parse_permutation(" 2,\t1 ,3\n").entries() ==
        std::vector<int>{2, 1, 3});
}

TEST_CASE("parse rejects bad input") {
  CHECK_THROWS_AS(parse_permutation("1 1 2"), NotAPermutation);
  CHECK_THROWS_AS(parse_permutation("2 3"), NotAPermutation);   // gap
  CHECK_THROWS_AS(parse_permutation("0 1"), NotAPermutation);   // non-positive
  CHECK_THROWS_AS(parse_permutation("1 x"), NotAPermutation);   // non-integer
  CHECK_THROWS_AS(parse_permutation("1.5"), NotAPermutation);
  CHECK_THROWS_AS(parse_permutation(""), Empty);
  CHECK_THROWS_AS(parse_permutation(" , \t"), Empty);
}

TEST_CASE("permutation accessors") {
  const Permutation p = parse_permutation("3 1 2");
  CHECK(p.size() == 3);
  CHECK(p.at(1) == 3);
  CHECK(p.at(3) == 2);
  CHECK_THROWS_AS(p.at(0), PositionOutOfRange);
  CHECK_THROWS_AS(p.at(4), PositionOutOfRange);
  CHECK(p.to_string() == "3 1 2");
  CHECK(parse_permutation(p.to_string()) == p);  // round trip
  CHECK(Permutation::identity(4).entries() == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(Permutation::identity(0), NTooSmall);
  CHECK_THROWS_AS(Permutation({1, 3}), NotAPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), NotAPermutation);
}

TEST_CASE("complement golden values") {
  CHECK(complement(Permutation(figure_perm())).entries() ==
        std::vector<int>{8, 5, 4, 10, 6, 9, 1, 7, 2, 3});
  CHECK(complement(Permutation({1})).entries() == std::vector<int>{1});
  const Permutation p({2, 1, 3});
  CHECK(complement(complement(p)) == p);
}

TEST_CASE("complement is an involution on all of S_5") {
  for_all(5, [](const Permutation& p) {
    CHECK(complement(complement(p)) == p);
  });
}

TEST_CASE("pattern_of golden values") {
  const std::vector<int> a{3, 6, 7, 1};
  CHECK(pattern_of(a).entries() == std::vector<int>{2, 3, 4, 1});
  const std::vector<int> b{4, 9, 8};
  CHECK(pattern_of(b).entries() == std::vector<int>{1, 3, 2});
  const std::vector<int> c{5};
  CHECK(pattern_of(c).entries() == std::vector<int>{1});
  const std::vector<int> dup{4, 4};
  CHECK_THROWS_AS(pattern_of(dup), DuplicateValues);
  CHECK_THROWS_AS(pattern_of(std::vector<int>{}), Empty);
}

TEST_CASE("pattern_of is idempotent on permutations") {
  for (int n = 1; n <= 5; ++n)
    for_all(n, [](const Permutation& p) {
      CHECK(pattern_of(p.entries()) == p);
    });
}

TEST_CASE("pattern_of commutes with complement") {
  // Complementing a word of distinct values flips every comparison, and the
  // pattern of the flipped word is the complement of the original pattern.
  const std::vector<int> words[] = {
      {3, 6, 7, 1}, {4, 9, 8}, {12, -3, 7, 0}, {5}};
  for (const auto& w : words) {
    const int hi = *std::max_element(w.begin(), w.end());
    const int lo = *std::min_element(w.begin(), w.end());
    std::vector<int> flipped;
    for (int v : w) flipped.push_back(hi + lo - v);
    CHECK(pattern_of(flipped) == complement(pattern_of(w)));
  }
}

TEST_CASE("relabel_order_isomorphic golden values") {
  CHECK(relabel_order_isomorphic(std::vector<int>{4, 9, 8}, {8, 9, 10}) ==
        std::vector<int>{8, 10, 9});
  CHECK(relabel_order_isomorphic(std::vector<int>{2, 3}, {1, 2}) ==
        std::vector<int>{1, 2});
  CHECK(relabel_order_isomorphic(std::vector<int>{7, 5, 6}, {1, 2, 3}) ==
        std::vector<int>{3, 1, 2});
  CHECK_THROWS_AS(relabel_order_isomorphic(std::vector<int>{1, 2}, {5}),
                  SizeMismatch);
}

TEST_CASE("relabel preserves the pattern") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const Permutation base = random_permutation(9, 99, s);
    std::vector<int> word;
    for (int v : base.entries()) word.push_back(3 * v - 7);  // arbitrary values
    std::vector<int> values;
    for (int v : base.entries()) values.push_back(v * v + 1);  // distinct
    const std::vector<int> out = relabel_order_isomorphic(word, values);
    std::vector<int> sorted_out = out;
    std::sort(sorted_out.begin(), sorted_out.end());
    std::vector<int> sorted_values = values;
    std::sort(sorted_values.begin(), sorted_values.end());
    CHECK(sorted_out == sorted_values);  // uses exactly the given values
    CHECK(pattern_of(out) == pattern_of(word));
  }
}

TEST_CASE("factorial values and limits") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), NTooLarge);
  CHECK_THROWS_AS(factorial(-1), NTooSmall);
}

TEST_CASE("rank and unrank golden values") {
  CHECK(rank(Permutation({1, 2, 3})) == 0);
  CHECK(rank(Permutation({1, 3, 2})) == 1);
  CHECK(rank(Permutation({3, 2, 1})) == 5);
  CHECK(unrank(3, 0).entries() == std::vector<int>{1, 2, 3});
  CHECK(unrank(3, 5).entries() == std::vector<int>{3, 2, 1});
  const Permutation p({2, 1, 3, 4});
  CHECK(unrank(4, rank(p)) == p);
  CHECK_THROWS_AS(unrank(3, 6), IndexOutOfRange);
  CHECK_THROWS_AS(unrank(21, 0), NTooLarge);
  CHECK_THROWS_AS(unrank(0, 0), NTooSmall);
}

TEST_CASE("rank is the lexicographic index, exhaustively") {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t k = 0;
    for_all(n, [&](const Permutation& p) {
      CHECK(rank(p) == k);
      CHECK(unrank(n, k) == p);
      ++k;
    });
    CHECK(k == factorial(n));
  }
}

TEST_CASE("successor golden values") {
  CHECK(successor(Permutation({1, 3, 2}))->entries() ==
        std::vector<int>{2, 1, 3});
  CHECK(!successor(Permutation({3, 2, 1})).has_value());
  CHECK(successor(Permutation({1, 2, 3, 4}))->entries() ==
        std::vector<int>{1, 2, 4, 3});
}

TEST_CASE("successor agrees with unrank stepping") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = factorial(n);
    for (std::uint64_t k = 0; k + 1 < total; ++k)
      CHECK(*successor(unrank(n, k)) == unrank(n, k + 1));
    CHECK(!successor(unrank(n, total - 1)).has_value());
  }
}

TEST_CASE("random_permutation determinism and trivial cases") {
  CHECK(random_permutation(1, 123, 0).entries() == std::vector<int>{1});
  CHECK(random_permutation(9, 7, 0) == random_permutation(9, 7, 0));
  CHECK(random_permutation(9, 7, 1) != random_permutation(9, 7, 0));
  CHECK(random_permutation(9, 8, 0) != random_permutation(9, 7, 0));
  CHECK_THROWS_AS(random_permutation(0, 1, 0), NTooSmall);
}

TEST_CASE("random_permutation is uniform within 5 standard errors") {
  const int n = 5;
  const std::uint64_t trials = 100000;
  std::map<std::vector<int>, std::uint64_t> freq;
  for (std::uint64_t t = 0; t < trials; ++t)
    ++freq[random_permutation(n, 12345, t).entries()];
  CHECK(freq.size() == 120);
  const double expect = 1.0 / 120.0;
  const double se = std::sqrt(expect * (1.0 - expect) /
                              static_cast<double>(trials));
  for (const auto& [perm, count] : freq) {
    const double f = static_cast<double>(count) / static_cast<double>(trials);
    CHECK(std::abs(f - expect) <= 5.0 * se);
  }
}
