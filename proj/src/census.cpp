#include "minmax/census.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>

#include "minmax/action.hpp"

namespace minmax {

int default_census_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

namespace {

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
  Permutation p = Permutation::identity(n);
  while (true) {
    fn(p);
    auto next = successor(p);
    if (!next) break;
    p = std::move(*next);
  }
}

// Tallies children counts for the rank interval [first, first + count).
void scan_interval(int n, TreeVariant variant, std::uint64_t first,
                   std::uint64_t count,
                   std::vector<std::array<std::uint64_t, 3>>& d) {
  if (count == 0) return;
  Permutation p = unrank(n, first);
  for (std::uint64_t step = 0;;) {
    const MinMaxTree t = build_tree_fast(p, variant);
    for (int i = 1; i <= n; ++i) {
      const auto& nd = t.node[static_cast<size_t>(i)];
      const int children = (nd.left != 0 ? 1 : 0) + (nd.right != 0 ? 1 : 0);
      ++d[static_cast<size_t>(i - 1)][static_cast<size_t>(children)];
    }
    if (++step == count) break;
    p = std::move(*successor(p));
  }
}

// First-violation tracker: one named check over a whole scan of S_n.
struct Violation {
  bool pass = true;
  std::string witness;
  void record(const std::string& w) {
    if (pass) {
      pass = false;
      witness = w;
    }
  }
};

}  // namespace

CensusTable census_exact(int n, TreeVariant variant, int workers,
                         bool allow_large) {
  if (n < 3) throw NTooSmall("census needs n >= 3");
  const int cap = allow_large ? 20 : 13;
  if (n > cap)
    throw NTooLarge(allow_large
                        ? "census counters are 64-bit; n is capped at 20"
                        : "census is capped at n = 13 by default; the large "
                          "override raises the cap to 20");
  if (workers < 1) workers = 1;
  const std::uint64_t total = factorial(n);
  const int w = static_cast<std::uint64_t>(workers) > total
                    ? static_cast<int>(total)
                    : workers;

  std::vector<std::vector<std::array<std::uint64_t, 3>>> parts(
      static_cast<size_t>(w),
      std::vector<std::array<std::uint64_t, 3>>(static_cast<size_t>(n),
                                                {0, 0, 0}));
  const std::uint64_t base = total / static_cast<std::uint64_t>(w);
  const std::uint64_t extra = total % static_cast<std::uint64_t>(w);
  const auto interval = [&](int k) {
    const auto uk = static_cast<std::uint64_t>(k);
    const std::uint64_t first = uk * base + std::min(uk, extra);
    const std::uint64_t count = base + (uk < extra ? 1 : 0);
    return std::pair{first, count};
  };

  if (w == 1) {
    scan_interval(n, variant, 0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(w));
    for (int k = 0; k < w; ++k)
      pool.emplace_back([&, k] {
        const auto [first, count] = interval(k);
        scan_interval(n, variant, first, count, parts[static_cast<size_t>(k)]);
      });
    for (auto& th : pool) th.join();
  }

  CensusTable table;
  table.n = n;
  table.variant = variant;
  table.total = total;
  table.d.assign(static_cast<size_t>(n), {0, 0, 0});
  for (const auto& part : parts)
    for (size_t i = 0; i < part.size(); ++i)
      for (size_t j = 0; j < 3; ++j) table.d[i][j] += part[i][j];
  table.leaf_counts.reserve(static_cast<size_t>(n));
  for (const auto& row : table.d) table.leaf_counts.push_back(row[0]);
  return table;
}

EstimateTable estimate_leaf_probabilities(int n, std::uint64_t trials,
                                          std::uint64_t seed) {
  if (n < 3) throw NTooSmall("estimator needs n >= 3");
  if (trials < 1) throw NTooSmall("estimator needs at least one trial");
  std::vector<std::uint64_t> hits(static_cast<size_t>(n), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Permutation p = random_permutation(n, seed, t);
    const MinMaxTree tree = build_minmax_fast(p);
    for (int i = 1; i <= n; ++i)
      if (tree.node[static_cast<size_t>(i)].kind == NodeKind::Leaf)
        ++hits[static_cast<size_t>(i - 1)];
  }
  EstimateTable est;
  est.n = n;
  est.trials = trials;
  est.seed = seed;
  est.leaf_probability.reserve(static_cast<size_t>(n));
  est.standard_error.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double q = static_cast<double>(hits[static_cast<size_t>(i)]) /
                     static_cast<double>(trials);
    est.leaf_probability.push_back(q);
    est.standard_error.push_back(
        std::sqrt(q * (1.0 - q) / static_cast<double>(trials)));
  }
  return est;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

class VerifyRun {
 public:
  VerifyRun(int n_max, const PsiFn& psi_fn) : psi_fn_(psi_fn) {
    report_.n_max = n_max;
  }

  VerifyReport run(int n_max) {
    for (int n = 1; n <= n_max; ++n) {
      structural_checks(n);
      action_checks(n);
      if (n >= 3) count_checks(n);
    }
    return std::move(report_);
  }

 private:
  void add(const std::string& name, int n, const Violation& v) {
    report_.checks.push_back(
        {name, "n=" + std::to_string(n), v.pass, v.witness});
  }

  // One pass over S_n: builder agreement for both variants plus the tree
  // invariants that hold permutation by permutation.
  void structural_checks(int n) {
    Violation builder_minmax, builder_min12, ancestry, adjacent_leaves,
        last_leaf, root_rule, laminar, complement_iso;
    for_each_permutation(n, [&](const Permutation& p) {
      const MinMaxTree ref = build_minmax(p);
      const MinMaxTree fast = build_minmax_fast(p);
      if (!(ref == fast)) builder_minmax.record("p=" + p.to_string());
      if (!(build_min12(p) == build_min12_fast(p)))
        builder_min12.record("p=" + p.to_string());

      for (int i = 1; i + 1 <= n; ++i) {
        if (!ref.is_ancestor(i, i + 1) && !ref.is_ancestor(i + 1, i))
          ancestry.record("p=" + p.to_string() + " i=" + std::to_string(i));
        if (ref.node_kind(i) == NodeKind::Leaf &&
            ref.node_kind(i + 1) == NodeKind::Leaf)
          adjacent_leaves.record("p=" + p.to_string() +
                                 " i=" + std::to_string(i));
      }
      if (n >= 2) {
        if (ref.node_kind(n) != NodeKind::Leaf ||
            ref.node[static_cast<size_t>(n)].parent != n - 1)
          last_leaf.record("p=" + p.to_string());
      }

      for (int r = 1; r <= n; ++r) {
        const auto& nd = ref.node[static_cast<size_t>(r)];
        int pmin = nd.lo, pmax = nd.lo;
        for (int j = nd.lo + 1; j <= nd.hi; ++j) {
          if (ref.entry[static_cast<size_t>(j)] <
              ref.entry[static_cast<size_t>(pmin)])
            pmin = j;
          if (ref.entry[static_cast<size_t>(j)] >
              ref.entry[static_cast<size_t>(pmax)])
            pmax = j;
        }
        const std::string witness =
            "p=" + p.to_string() + " pos=" + std::to_string(r);
        if (r != std::min(pmin, pmax)) root_rule.record(witness);
        const NodeKind expected = nd.lo == nd.hi ? NodeKind::Leaf
                                  : r == pmin    ? NodeKind::MinRoot
                                                 : NodeKind::MaxRoot;
        if (nd.kind != expected) root_rule.record(witness);
        // Children spans must tile [lo, hi] around r.
        if (nd.lo > r || r > nd.hi) laminar.record(witness);
        if (nd.left != 0) {
          const auto& l = ref.node[static_cast<size_t>(nd.left)];
          if (l.lo != nd.lo || l.hi != r - 1) laminar.record(witness);
        } else if (nd.lo != r) {
          laminar.record(witness);
        }
        if (nd.right != 0) {
          const auto& rt = ref.node[static_cast<size_t>(nd.right)];
          if (rt.lo != r + 1 || rt.hi != nd.hi) laminar.record(witness);
        } else if (nd.hi != r) {
          laminar.record(witness);
        }
      }

      const MinMaxTree comp = build_minmax_fast(complement(p));
      if (comp.shape_signature() != ref.shape_signature()) {
        complement_iso.record("p=" + p.to_string());
      } else {
        for (int i = 1; i <= n; ++i) {
          const NodeKind a = ref.node[static_cast<size_t>(i)].kind;
          const NodeKind b = comp.node[static_cast<size_t>(i)].kind;
          const NodeKind swapped = a == NodeKind::MinRoot ? NodeKind::MaxRoot
                                   : a == NodeKind::MaxRoot
                                       ? NodeKind::MinRoot
                                       : NodeKind::Leaf;
          if (b != swapped)
            complement_iso.record("p=" + p.to_string() +
                                  " pos=" + std::to_string(i));
        }
      }
    });
    add("builder-agreement-minmax", n, builder_minmax);
    add("builder-agreement-min12", n, builder_min12);
    add("adjacent-ancestry", n, ancestry);
    add("no-adjacent-leaves", n, adjacent_leaves);
    if (n >= 2) add("last-position-leaf", n, last_leaf);
    add("root-rule", n, root_rule);
    add("laminar-spans", n, laminar);
    add("complement-isomorphism", n, complement_iso);
  }

  void action_checks(int n) {
    Violation involution, fixed_iff_leaf, shape, commute;
    for_each_permutation(n, [&](const Permutation& p) {
      const MinMaxTree t = build_minmax_fast(p);
      for (int i = 1; i <= n; ++i) {
        const std::string witness =
            "p=" + p.to_string() + " i=" + std::to_string(i);
        const Permutation image = psi_fn_(p, i);
        if (!(psi_fn_(image, i) == p)) involution.record(witness);
        const bool fixed = image == p;
        const bool leaf = t.node_kind(i) == NodeKind::Leaf;
        if (fixed != leaf) fixed_iff_leaf.record(witness);
        if (!fixed) {
          const MinMaxTree u = build_minmax_fast(image);
          if (u.shape_signature() != t.shape_signature()) {
            shape.record(witness);
          } else {
            for (int pos = 1; pos <= n; ++pos) {
              const NodeKind a = t.node[static_cast<size_t>(pos)].kind;
              const NodeKind b = u.node[static_cast<size_t>(pos)].kind;
              if (pos == i) {
                const NodeKind flipped = a == NodeKind::MinRoot
                                             ? NodeKind::MaxRoot
                                             : NodeKind::MinRoot;
                if (b != flipped) shape.record(witness);
              } else if (a != b) {
                shape.record(witness);
              }
            }
          }
        }
      }
      if (n <= 6) {
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j)
            if (!(psi_fn_(psi_fn_(p, i), j) == psi_fn_(psi_fn_(p, j), i)))
              commute.record("p=" + p.to_string() + " i=" + std::to_string(i) +
                             " j=" + std::to_string(j));
      }
    });
    add("psi-involution", n, involution);
    add("psi-fixed-iff-leaf", n, fixed_iff_leaf);
    add("psi-shape-preservation", n, shape);
    if (n <= 6) add("psi-commutativity", n, commute);
  }

  void count_checks(int n) {
    const int workers = default_census_workers();
    const CensusTable table =
        census_exact(n, TreeVariant::MinMax, workers);
    const std::uint64_t third = table.total / 3;

    Violation theorem;
    const auto expect_leaf = [&](int i, std::uint64_t want) {
      const std::uint64_t got = table.leaf_counts[static_cast<size_t>(i - 1)];
      if (got != want)
        theorem.record("i=" + std::to_string(i) + " expected=" +
                       std::to_string(want) + " actual=" + std::to_string(got));
    };
    for (int i = 1; i <= n - 2; ++i) expect_leaf(i, third);
    expect_leaf(n - 1, 0);
    expect_leaf(n, table.total);
    add("theorem-leaf-counts", n, theorem);

    Violation edges;
    const auto expect_d = [&](Violation& v, int i, int j, std::uint64_t want) {
      const std::uint64_t got =
          table.d[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
      if (got != want)
        v.record("i=" + std::to_string(i) + " j=" + std::to_string(j) +
                 " expected=" + std::to_string(want) +
                 " actual=" + std::to_string(got));
    };
    expect_d(edges, 1, 0, third);
    expect_d(edges, 1, 1, 2 * third);
    expect_d(edges, 1, 2, 0);
    expect_d(edges, n - 1, 0, 0);
    expect_d(edges, n - 1, 1, 2 * third);
    expect_d(edges, n - 1, 2, third);
    expect_d(edges, n, 0, table.total);
    expect_d(edges, n, 1, 0);
    expect_d(edges, n, 2, 0);
    add("edge-identities", n, edges);

    if (n >= 4) {
      Violation corollary;
      for (int i = 2; i <= n - 2; ++i)
        for (int j = 0; j < 3; ++j) expect_d(corollary, i, j, third);
      add("corollary-d-counts", n, corollary);
    }

    Violation equality;
    const CensusTable m12 = census_exact(n, TreeVariant::Min1Min2, workers);
    if (m12.leaf_counts != table.leaf_counts || m12.d != table.d ||
        m12.total != table.total)
      equality.record("min12 census differs from minmax census");
    add("variant-census-equality", n, equality);
  }

  PsiFn psi_fn_;
  VerifyReport report_;
};

}  // namespace

VerifyReport verify_suite(int n_max, const PsiFn& psi_fn) {
  if (n_max < 3) throw NTooSmall("verify needs n_max >= 3");
  if (n_max > 10) throw NTooLarge("verify is capped at n_max = 10");
  VerifyRun run(n_max, psi_fn);
  return run.run(n_max);
}

VerifyReport verify_suite(int n_max) {
  return verify_suite(n_max,
                      [](const Permutation& p, int i) { return psi(p, i); });
}

}  // namespace minmax
