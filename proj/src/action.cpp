#include "minmax/action.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <string>

namespace minmax {

namespace {

std::vector<int> checked_generators(const GeneratorSet& gens, int n) {
  std::vector<int> g(gens);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  for (int i : g)
    if (i < 1 || i > n)
      throw PositionOutOfRange("generator index " + std::to_string(i) +
                               " outside 1.." + std::to_string(n));
  return g;
}

#ifndef NDEBUG
// The image must keep the tree shape and flip only the kind at i.
bool preserves_shape(const MinMaxTree& before, const Permutation& image,
                     int i) {
  const MinMaxTree after = build_minmax_fast(image);
  if (after.shape_signature() != before.shape_signature()) return false;
  for (int pos = 1; pos <= before.n; ++pos) {
    const NodeKind a = before.node[static_cast<size_t>(pos)].kind;
    const NodeKind b = after.node[static_cast<size_t>(pos)].kind;
    if (pos == i) {
      if (a == NodeKind::MinRoot ? b != NodeKind::MaxRoot
                                 : b != NodeKind::MinRoot)
        return false;
    } else if (a != b) {
      return false;
    }
  }
  return true;
}
#endif

}  // namespace

Permutation psi(const Permutation& p, int i) {
  const int n = p.size();
  if (i < 1 || i > n)
    throw PositionOutOfRange("psi index " + std::to_string(i) +
                             " outside 1.." + std::to_string(n));
  const MinMaxTree t = build_minmax_fast(p);
  const auto& nd = t.node[static_cast<size_t>(i)];
  if (nd.kind == NodeKind::Leaf) return p;

  // Non-root subsequence of the span and the span's extreme values.
  std::vector<int> word;
  word.reserve(static_cast<size_t>(nd.hi - nd.lo));
  int min_v = t.entry[static_cast<size_t>(nd.lo)];
  int max_v = min_v;
  for (int pos = nd.lo; pos <= nd.hi; ++pos) {
    const int v = t.entry[static_cast<size_t>(pos)];
    min_v = std::min(min_v, v);
    max_v = std::max(max_v, v);
    if (pos != i) word.push_back(v);
  }
  const int new_root = nd.kind == NodeKind::MinRoot ? max_v : min_v;

  std::vector<int> values;
  values.reserve(word.size());
  for (int pos = nd.lo; pos <= nd.hi; ++pos) {
    const int v = t.entry[static_cast<size_t>(pos)];
    if (v != new_root) values.push_back(v);
  }
  const std::vector<int> relabeled = relabel_order_isomorphic(word, values);

  std::vector<int> out = p.entries();
  out[static_cast<size_t>(i - 1)] = new_root;
  size_t k = 0;
  for (int pos = nd.lo; pos <= nd.hi; ++pos)
    if (pos != i) out[static_cast<size_t>(pos - 1)] = relabeled[k++];
  Permutation image = Permutation::unchecked(std::move(out));
  assert(preserves_shape(t, image, i));
  return image;
}

Permutation psi_set(const Permutation& p, const GeneratorSet& gens) {
  const std::vector<int> g = checked_generators(gens, p.size());
  Permutation q = p;
  for (int i : g) q = psi(q, i);
  return q;
}

std::vector<int> fixed_positions(const Permutation& p) {
  return build_minmax_fast(p).leaf_positions();
}

OrbitRecord orbit(const Permutation& p, const GeneratorSet& gens) {
  const std::vector<int> g = checked_generators(gens, p.size());
  if (g.size() > 25)
    throw OrbitTooLarge("orbit closure under " + std::to_string(g.size()) +
                        " generators may reach 2^" + std::to_string(g.size()) +
                        " members; at most 25 generators are supported");
  std::set<std::vector<int>> seen;
  std::deque<Permutation> frontier;
  seen.insert(p.entries());
  frontier.push_back(p);
  while (!frontier.empty()) {
    const Permutation q = std::move(frontier.front());
    frontier.pop_front();
    for (int i : g) {
      Permutation r = psi(q, i);
      if (seen.insert(r.entries()).second) frontier.push_back(std::move(r));
    }
  }
  OrbitRecord rec{p, g, {}};
  rec.members.reserve(seen.size());
  for (const auto& e : seen) rec.members.push_back(Permutation::unchecked(e));
  return rec;
}

}  // namespace minmax
