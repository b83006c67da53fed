#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minmax/perm.hpp"
#include "minmax/tree.hpp"

namespace minmax {

/// Exact counts over all of S_n. d[i-1][j] is the number of n-permutations in
/// which position i has exactly j children; leaf_counts[i-1] duplicates
/// d[i-1][0] for convenience. For every i, the three d entries sum to n!.
struct CensusTable {
  int n = 0;
  TreeVariant variant = TreeVariant::MinMax;
  std::uint64_t total = 0;  // n!
  std::vector<std::uint64_t> leaf_counts;
  std::vector<std::array<std::uint64_t, 3>> d;
  friend bool operator==(const CensusTable&, const CensusTable&) = default;
};

/// Streams all n! permutations in lexicographic order, building each tree and
/// tallying children counts. Work is split into balanced contiguous rank
/// intervals, one per worker; the merged table is identical for every worker
/// count. n is capped at 13 unless allow_large raises the cap to 20.
CensusTable census_exact(int n, TreeVariant variant, int workers,
                         bool allow_large = false);

/// Hardware-derived worker count used when the caller does not pick one:
/// hardware_concurrency clamped to [1, 8].
int default_census_workers();

/// Monte Carlo leaf-probability estimates for sizes where exhaustion is out
/// of reach. Deterministic for fixed (n, trials, seed): trial t consumes
/// stream t of the seeded generator.
struct EstimateTable {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> leaf_probability;  // per position
  std::vector<double> standard_error;    // sqrt(q(1-q)/trials)
};

EstimateTable estimate_leaf_probabilities(int n, std::uint64_t trials,
                                          std::uint64_t seed);

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = true;
  std::string counterexample;  // reproducible witness, empty when passing
};

struct VerifyReport {
  int n_max = 0;
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* first_failure() const;  // nullptr when clean
};

using PsiFn = std::function<Permutation(const Permutation&, int)>;

/// One-shot verification: for every n up to n_max (3 <= n_max <= 10) runs the
/// exact-count checks, the structural tree invariants, the psi action
/// invariants (pair commutativity up to n = 6), builder agreement for both
/// variants, and the variant census equality. The psi overload lets tests
/// feed a deliberately broken operator and watch the suite catch it.
VerifyReport verify_suite(int n_max);
VerifyReport verify_suite(int n_max, const PsiFn& psi_fn);

}  // namespace minmax
