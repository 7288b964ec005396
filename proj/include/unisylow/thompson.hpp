#pragma once

// p-rank and the Thompson subgroup J(G): the subgroup generated by all
// elementary abelian subgroups of maximal rank.
//
// The search works on cyclic subgroups of order p, each represented by its
// smallest-index generator. An elementary abelian subgroup is grown one
// generator at a time; a child is only expanded from the first sibling able
// to produce it, so every subgroup is visited once without a visited set.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"
#include "group.hpp"

namespace unisylow {

struct ElementaryAbelianReport {
  unsigned rank = 0;
  /// Every elementary abelian subgroup of rank `rank`, in discovery order.
  std::vector<Subgroup> maximal_subgroups;
  std::uint64_t order_p_elements = 0;
  std::uint64_t cyclic_subgroups = 0;
  std::uint64_t nodes = 0;
};

struct ThompsonResult {
  Subgroup j;
  ElementaryAbelianReport report;
};

struct ThompsonLimits {
  /// Largest number of order-p cyclic subgroups for which the commuting graph
  /// is built.
  std::uint64_t max_cyclic_subgroups = std::uint64_t{1} << 14;
  std::uint64_t max_nodes = std::uint64_t{1} << 22;
};

namespace detail {

template <FiniteGroup G>
class ElementaryAbelianSearch {
 public:
  using E = typename G::element_type;

  ElementaryAbelianSearch(const G& g, const ThompsonLimits& limits) : g_(g), limits_(limits), p_(g.prime()) {}

  ElementaryAbelianReport run() {
    collect_cyclic();
    build_graph();
    Node root;
    root.elems = {kIdentityIndex};
    root.reps = Bitset(reps_.size());
    Bitset cand = Bitset::full(reps_.size());
    visit(root, cand);
    report_.rank = best_;
    for (auto& n : found_) report_.maximal_subgroups.push_back(Subgroup(to_bits(n.elems), n.witness));
    return std::move(report_);
  }

 private:
  struct Node {
    std::vector<Index> elems;
    std::vector<Index> witness;
    Bitset reps;
    unsigned rank = 0;
  };

  void collect_cyclic() {
    const auto id = g_.identity();
    const std::uint64_t n = g_.order();
    const Bitset order_p = parallel_filter(n, [&](Index i) {
      return i != kIdentityIndex && power(g_, g_.element(i), p_) == id;
    });
    report_.order_p_elements = order_p.count();
    rep_of_.assign(n, UINT32_MAX);
    std::vector<Index> reps;
    order_p.for_each([&](Index i) {
      if (rep_of_[i] != UINT32_MAX) return;
      const auto id32 = static_cast<std::uint32_t>(reps.size());
      if (reps.size() >= limits_.max_cyclic_subgroups)
        throw budget_exceeded("elementary abelian search: too many cyclic subgroups of order p",
                              report_.order_p_elements / (p_ - 1));
      reps.push_back(i);
      const E x = g_.element(i);
      E y = x;
      for (std::uint32_t j = 1; j < p_; ++j) {
        rep_of_[g_.index_of(y)] = id32;
        y = g_.mul(y, x);
      }
    });
    report_.cyclic_subgroups = reps.size();
    reps_ = std::move(reps);
  }

  // Commuting graph, relabelled so that higher degree means smaller label.
  void build_graph() {
    const std::size_t r = reps_.size();
    std::vector<E> elems;
    elems.reserve(r);
    for (Index i : reps_) elems.push_back(g_.element(i));
    std::vector<Bitset> adj(r, Bitset(r));
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = a + 1; b < r; ++b)
        if (commutes(g_, elems[a], elems[b])) {
          adj[a].set(b);
          adj[b].set(a);
        }
    std::vector<std::uint32_t> order(r);
    std::iota(order.begin(), order.end(), 0u);
    std::vector<std::uint64_t> deg(r);
    for (std::size_t a = 0; a < r; ++a) deg[a] = adj[a].count();
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return deg[x] > deg[y]; });
    std::vector<std::uint32_t> label(r);
    for (std::size_t i = 0; i < r; ++i) label[order[i]] = static_cast<std::uint32_t>(i);
    adj_.assign(r, Bitset(r));
    for (std::size_t a = 0; a < r; ++a) adj[a].for_each([&](Index b) { adj_[label[a]].set(label[b]); });
    std::vector<Index> relabelled(r);
    for (std::size_t a = 0; a < r; ++a) relabelled[label[a]] = reps_[a];
    reps_ = std::move(relabelled);
    for (auto& x : rep_of_)
      if (x != UINT32_MAX) x = label[x];
  }

  /// Largest rank whose (p^r - 1)/(p - 1) cyclic subgroups fit into `avail`.
  unsigned rank_bound(std::uint64_t avail) const {
    unsigned r = 0;
    std::uint64_t cyclic = 0, pr = 1;
    for (;;) {
      cyclic += pr;
      if (cyclic > avail) return r;
      pr *= p_;
      ++r;
    }
  }

  void visit(const Node& node, Bitset cand) {
    if (++report_.nodes > limits_.max_nodes)
      throw budget_exceeded("elementary abelian search exceeded its node budget", report_.nodes);
    if (node.rank > best_) {
      best_ = node.rank;
      found_.clear();
    }
    if (node.rank == best_) found_.push_back(node);
    const unsigned bound = rank_bound(node.reps.count() + cand.count());
    if (bound < best_ || bound <= node.rank) return;
    const std::vector<Index> order = cand.indices();
    for (Index c : order) {
      if (!cand.test(c)) continue;
      const E gen = g_.element(reps_[c]);
      Node child;
      child.rank = node.rank + 1;
      child.reps = node.reps;
      child.witness = node.witness;
      child.witness.push_back(reps_[c]);
      child.elems = node.elems;
      std::vector<std::uint32_t> fresh;
      for (Index e : node.elems) {
        E y = g_.element(e);
        for (std::uint32_t j = 1; j < p_; ++j) {
          y = g_.mul(y, gen);
          const Index yi = g_.index_of(y);
          child.elems.push_back(yi);
          const std::uint32_t rep = rep_of_[yi];
          if (!child.reps.test(rep)) {
            child.reps.set(rep);
            fresh.push_back(rep);
          }
        }
      }
      bool first = true;
      for (auto rep : fresh)
        if (!cand.test(rep)) first = false;
      for (auto rep : fresh) cand.reset(rep);
      if (!first) continue;
      Bitset next = cand;
      next &= adj_[c];
      visit(child, std::move(next));
    }
  }

  Bitset to_bits(const std::vector<Index>& elems) const {
    Bitset b(g_.order());
    for (Index i : elems) b.set(i);
    return b;
  }

  const G& g_;
  ThompsonLimits limits_;
  std::uint32_t p_;
  std::vector<std::uint32_t> rep_of_;
  std::vector<Index> reps_;
  std::vector<Bitset> adj_;
  unsigned best_ = 0;
  std::vector<Node> found_;
  ElementaryAbelianReport report_;
};

}  // namespace detail

/// All elementary abelian subgroups of maximal rank.
template <FiniteGroup G>
ElementaryAbelianReport maximal_elementary_abelian(const G& g, const ThompsonLimits& limits = {}) {
  return detail::ElementaryAbelianSearch<G>(g, limits).run();
}

template <FiniteGroup G>
ThompsonResult thompson_subgroup(const G& g, const ThompsonLimits& limits = {}) {
  ThompsonResult r;
  r.report = maximal_elementary_abelian(g, limits);
  Closure<G> c(g);
  for (const auto& e : r.report.maximal_subgroups)
    for (Index w : e.witness()) c.add(w);
  r.j = std::move(c).finish();
  return r;
}

}  // namespace unisylow
