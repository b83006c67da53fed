#include "minmax/perm.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace minmax {

namespace {

void validate(const std::vector<int>& entries) {
  if (entries.empty())
    throw NotAPermutation("a permutation needs at least one entry");
  const int n = static_cast<int>(entries.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : entries) {
    if (v < 1 || v > n)
      throw NotAPermutation("entry " + std::to_string(v) +
                            " outside 1.." + std::to_string(n));
    if (seen[static_cast<size_t>(v)])
      throw NotAPermutation("duplicate entry " + std::to_string(v));
    seen[static_cast<size_t>(v)] = 1;
  }
}

// Positions of the word sorted by value; throws on a repeated value.
std::vector<int> order_by_value(std::span<const int> word) {
  std::vector<int> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[static_cast<size_t>(a)] <
                                       word[static_cast<size_t>(b)]; });
  for (size_t k = 1; k < order.size(); ++k)
    if (word[static_cast<size_t>(order[k - 1])] ==
        word[static_cast<size_t>(order[k])])
      throw DuplicateValues("word values are not pairwise distinct");
  return order;
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Every output is mix64 of a distinct counter value; streams start one apart
// and steps advance by a huge odd constant, so windows of different streams
// never collide.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : counter_(mix64(seed) + stream) {}

  std::uint64_t next() {
    counter_ += kGolden;
    return mix64(counter_);
  }

  // Uniform on [0, bound), exact: mask to the next power of two and reject.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t mask = std::bit_ceil(bound) - 1;
    std::uint64_t r;
    do {
      r = next() & mask;
    } while (r >= bound);
    return r;
  }

 private:
  std::uint64_t counter_;
};

}  // namespace

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  validate(entries_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw NTooSmall("permutation length must be at least 1");
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e), unchecked_tag{});
}

Permutation Permutation::unchecked(std::vector<int> entries) {
  return Permutation(std::move(entries), unchecked_tag{});
}

int Permutation::at(int pos) const {
  if (pos < 1 || pos > size())
    throw PositionOutOfRange("position " + std::to_string(pos) +
                             " outside 1.." + std::to_string(size()));
  return entries_[static_cast<size_t>(pos - 1)];
}

std::string Permutation::to_string() const {
  std::string out;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  const auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',';
  };
  std::vector<int> values;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(),
                                           token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw NotAPermutation("not an integer: '" + std::string(token) + "'");
    values.push_back(v);
    i = j;
  }
  if (values.empty()) throw Empty("no permutation entries in input");
  return Permutation(std::move(values));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (int v : p.entries()) out.push_back(n + 1 - v);
  return Permutation::unchecked(std::move(out));
}

Permutation pattern_of(std::span<const int> word) {
  if (word.empty()) throw Empty("pattern of an empty word");
  const std::vector<int> order = order_by_value(word);
  std::vector<int> out(word.size());
  for (size_t r = 0; r < order.size(); ++r)
    out[static_cast<size_t>(order[r])] = static_cast<int>(r) + 1;
  return Permutation::unchecked(std::move(out));
}

std::vector<int> relabel_order_isomorphic(std::span<const int> word,
                                          std::vector<int> values) {
  if (values.size() != word.size())
    throw SizeMismatch("value set size " + std::to_string(values.size()) +
                       " does not match word length " +
                       std::to_string(word.size()));
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw SizeMismatch("replacement values are not pairwise distinct");
  const std::vector<int> order = order_by_value(word);
  std::vector<int> out(word.size());
  for (size_t r = 0; r < order.size(); ++r)
    out[static_cast<size_t>(order[r])] = values[r];
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw NTooSmall("factorial of a negative number");
  if (n > 20) throw NTooLarge("n! overflows 64 bits for n > 20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  if (n > 20) throw NTooLarge("rank requires n <= 20");
  const auto& e = p.entries();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (e[static_cast<size_t>(j)] < e[static_cast<size_t>(i)]) ++smaller;
    r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

Permutation unrank(int n, std::uint64_t index) {
  if (n < 1) throw NTooSmall("unrank needs n >= 1");
  if (n > 20) throw NTooLarge("unrank requires n <= 20");
  if (index >= factorial(n))
    throw IndexOutOfRange("index " + std::to_string(index) + " not below " +
                          std::to_string(n) + "!");
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto digit = static_cast<size_t>(index / f);
    index %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation::unchecked(std::move(out));
}

std::optional<Permutation> successor(const Permutation& p) {
  std::vector<int> e = p.entries();
  if (!std::next_permutation(e.begin(), e.end())) return std::nullopt;
  return Permutation::unchecked(std::move(e));
}

Permutation random_permutation(int n, std::uint64_t seed,
                               std::uint64_t stream) {
  if (n < 1) throw NTooSmall("permutation length must be at least 1");
  std::vector<int> e(static_cast<size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  CounterRng rng(seed, stream);
  for (int i = n - 1; i > 0; --i) {
    const auto j = rng.next_below(static_cast<std::uint64_t>(i) + 1);
    std::swap(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)]);
  }
  return Permutation::unchecked(std::move(e));
}

}  // namespace minmax
