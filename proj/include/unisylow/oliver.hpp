#pragma once

// Q-series, the Oliver subgroup X(S) and the conjecture J(S) <= X(S).
//
// A Q-series is a chain 1 = Q_0 <= Q_1 <= ... <= Q_n of normal subgroups
// with [Omega_1(C_S(Q_{i-1})), Q_i; p-1] = 1 at every step; X(S) is the
// largest normal subgroup at the top of such a chain.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "group.hpp"
#include "random.hpp"
#include "thompson.hpp"

namespace unisylow {

struct QStep {
  Subgroup q;
  Subgroup omega_centralizer;  // Omega_1(C_S(Q_{i-1}))
  Subgroup commutator;         // [Omega_1(C_S(Q_{i-1})), Q_i; p-1]
  bool normal = false;
  bool pass = false;
};

struct QSeries {
  std::vector<Subgroup> chain;
  std::vector<QStep> steps;

  bool pass() const {
    return std::all_of(steps.begin(), steps.end(), [](const QStep& s) { return s.pass; });
  }
  const Subgroup& top() const { return chain.back(); }
};

/// Evaluates normality and the Q-series condition at every step of chain.
template <FiniteGroup G>
QSeries verify_qseries(const G& g, const std::vector<Subgroup>& chain,
                       CommutatorRoute route = CommutatorRoute::automatic) {
  if (chain.empty() || !chain.front().is_trivial()) throw invalid_parameter("a Q-series starts at the trivial subgroup");
  for (const auto& q : chain)
    if (q.parent_order() != g.order()) throw invalid_parameter("chain entry is not a subgroup of this group");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!chain[i - 1].is_subgroup_of(chain[i])) throw invalid_parameter("chain is not ascending");
  QSeries out;
  out.chain = chain;
  const unsigned t = g.prime() - 1;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    QStep s;
    s.q = chain[i];
    s.omega_centralizer = omega1(g, centralizer(g, chain[i - 1]));
    s.commutator = iterated_commutator(g, s.omega_centralizer, chain[i], t, route);
    s.normal = is_normal(g, chain[i]);
    s.pass = s.normal && s.commutator.is_trivial();
    out.steps.push_back(std::move(s));
  }
  return out;
}

/// Given passing chains ending at K and L, the chain through K followed by
/// K R_1 <= K R_2 <= ... <= K L, re-verified from scratch.
template <FiniteGroup G>
QSeries concat_qseries(const G& g, const QSeries& c1, const QSeries& c2,
                       CommutatorRoute route = CommutatorRoute::automatic) {
  if (!c1.pass() || !c2.pass()) throw invalid_parameter("concatenation needs two passing Q-series");
  std::vector<Subgroup> chain = c1.chain;
  const Subgroup k = c1.top();
  for (std::size_t j = 1; j < c2.chain.size(); ++j) {
    Subgroup kr = product_subgroup(g, k, c2.chain[j]);
    if (!(kr == chain.back())) chain.push_back(std::move(kr));
  }
  return verify_qseries(g, chain, route);
}

struct Rejection {
  Index candidate = 0;
  std::uint64_t closure_size = 0;
  std::uint64_t commutator_size = 0;
};

struct OliverOptions {
  /// Candidates are scanned in index order unless a seed is given, in which
  /// case the order is a seeded shuffle.
  std::optional<std::uint64_t> shuffle_seed;
  CommutatorRoute route = CommutatorRoute::generators;
};

struct OliverResult {
  Subgroup subgroup;
  QSeries certificate;
  /// Extensions attempted and rejected in the final round.
  std::vector<Rejection> maximality_evidence;
  std::optional<bool> oracle_agreement;
  std::uint64_t candidates_tested = 0;
};

/// Greedy fixed point: starting from X = 1, replace X by the normal closure
/// N = <X, g^S> of any element g for which [Omega_1(C_S(X)), N; p-1] = 1,
/// until no element extends X.
template <FiniteGroup G>
OliverResult compute_oliver(const G& g, const OliverOptions& opt = {}) {
  const std::uint64_t n = g.order();
  const std::uint32_t p = g.prime();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  if (opt.shuffle_seed) {
    Rng rng(*opt.shuffle_seed);
    rng.shuffle(order);
  }
  OliverResult res;
  Subgroup x = trivial_subgroup(g);
  std::vector<Subgroup> chain{x};
  for (;;) {
    Subgroup c = omega1(g, centralizer(g, x));
    bool grew = false;
    std::vector<Rejection> rejected;
    Bitset skip(n);
    std::unordered_map<Bitset, bool, BitsetHash> seen;
    for (Index cand : order) {
      if (x.contains(cand) || skip.test(cand)) continue;
      const Index seed[] = {cand};
      Subgroup nc = normal_closure(g, seed, &x);
      ++res.candidates_tested;
      bool ok;
      std::uint64_t ksize = 1;
      if (auto it = seen.find(nc.bits()); it != seen.end()) {
        ok = it->second;
      } else {
        const Subgroup k = iterated_commutator(g, c, nc, p - 1, opt.route);
        ok = k.is_trivial();
        ksize = k.size();
        seen.emplace(nc.bits(), ok);
      }
      if (ok) {
        x = std::move(nc);
        chain.push_back(x);
        c = omega1(g, centralizer(g, x));
        grew = true;
        rejected.clear();
        skip = Bitset(n);
        seen.clear();
        continue;
      }
      rejected.push_back({cand, nc.size(), ksize});
      // Every element of the cosets cand^j X gives the same closure.
      const auto ce = g.element(cand);
      auto pw = ce;
      const auto xm = x.members();
      for (std::uint32_t j = 1; j < p; ++j) {
        for (Index m : xm) skip.set(g.index_of(g.mul(pw, g.element(m))));
        pw = g.mul(pw, ce);
      }
    }
    if (!grew) {
      res.maximality_evidence = std::move(rejected);
      break;
    }
  }
  res.subgroup = x;
  res.certificate = verify_qseries(g, chain, opt.route);
  if (!res.certificate.pass()) throw internal_error("greedy Q-series failed re-verification");
  return res;
}

struct BruteforceResult {
  Subgroup subgroup;
  std::size_t normal_subgroups = 0;
  std::size_t admitting = 0;
  /// Every admitting normal subgroup lies in the largest one.
  bool unique_maximum = false;
};

inline constexpr std::uint64_t kBruteforceMaxOrder = 625;

/// Every normal subgroup of a p-group, found as <N, g^S> over normal N
/// starting from 1. A nontrivial normal M contains a normal N of index p
/// in M, and then M = <N, g^S> for any g in M outside N.
template <FiniteGroup G>
std::vector<Subgroup> normal_subgroups(const G& g) {
  const std::uint64_t n = g.order();
  std::vector<Subgroup> out{trivial_subgroup(g)};
  std::unordered_map<Bitset, std::size_t, BitsetHash> index{{out[0].bits(), 0}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Subgroup base = out[i];
    Bitset skip = base.bits();
    for (Index cand = 0; cand < n; ++cand) {
      if (skip.test(cand)) continue;
      const Index seed[] = {cand};
      Subgroup m = normal_closure(g, seed, &base);
      // Members of the cosets cand^j N give the same closure.
      const auto ce = g.element(cand);
      auto pw = ce;
      for (std::uint32_t j = 1; j < g.prime(); ++j) {
        base.bits().for_each([&](Index b) { skip.set(g.index_of(g.mul(pw, g.element(b)))); });
        pw = g.mul(pw, ce);
      }
      if (!index.count(m.bits())) {
        index.emplace(m.bits(), out.size());
        out.push_back(std::move(m));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() < b.size(); });
  return out;
}

/// Exhaustive oracle: dynamic programming over all normal subgroups, where
/// N admits a Q-series iff some admitting normal M < N has
/// [Omega_1(C_S(M)), N; p-1] = 1. Commutators use the member route.
template <FiniteGroup G>
BruteforceResult oliver_bruteforce(const G& g) {
  if (g.order() > kBruteforceMaxOrder)
    throw budget_exceeded("brute-force Oliver oracle is limited to groups of order at most 625", g.order());
  const std::vector<Subgroup> normals = normal_subgroups(g);
  const unsigned t = g.prime() - 1;
  std::vector<char> admits(normals.size(), 0);
  std::vector<std::optional<Subgroup>> omega(normals.size());
  admits[0] = 1;
  for (std::size_t i = 1; i < normals.size(); ++i)
    for (std::size_t j = 0; j < i && !admits[i]; ++j) {
      if (!admits[j] || normals[j].size() >= normals[i].size() || !normals[j].is_subgroup_of(normals[i])) continue;
      if (!omega[j]) omega[j] = omega1(g, centralizer(g, normals[j]));
      if (iterated_commutator(g, *omega[j], normals[i], t, CommutatorRoute::members).is_trivial()) admits[i] = 1;
    }
  BruteforceResult r;
  r.normal_subgroups = normals.size();
  std::size_t best = 0;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (admits[i]) {
      ++r.admitting;
      if (normals[i].size() > normals[best].size()) best = i;
    }
  r.subgroup = normals[best];
  r.unique_maximum = true;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (admits[i] && !normals[i].is_subgroup_of(r.subgroup)) r.unique_maximum = false;
  return r;
}

struct LemmaReport {
  /// C_S(X) = Z(X).
  bool centralizer_is_center = false;
  std::uint64_t closures_scanned = 0;
  /// Closures Q = <g^S> with [Omega_1(Z(X)), Q; p-1] = 1.
  std::uint64_t qualifying = 0;
  /// Qualifying closures not contained in X, by generating element.
  std::vector<Index> violations;

  bool pass() const { return centralizer_is_center && violations.empty(); }
};

/// Post-hoc checks on a computed Oliver subgroup X: C_S(X) = Z(X), and every
/// normal closure <g^S> with [Omega_1(Z(X)), <g^S>; p-1] = 1 lies in X.
template <FiniteGroup G>
LemmaReport lemma_checks(const G& g, const Subgroup& x, CommutatorRoute route = CommutatorRoute::generators) {
  LemmaReport r;
  const Subgroup z = center(g, x);
  r.centralizer_is_center = centralizer(g, x) == z;
  const Subgroup oz = omega1(g, z);
  const std::uint64_t n = g.order();
  Bitset skip(n);
  for (Index cand = 0; cand < n; ++cand) {
    if (x.contains(cand) || skip.test(cand)) continue;
    const auto ce = g.element(cand);
    auto pw = ce;
    for (std::uint32_t j = 1; j < g.prime(); ++j) {
      skip.set(g.index_of(pw));
      pw = g.mul(pw, ce);
    }
    const Index seed[] = {cand};
    const Subgroup q = normal_closure(g, seed);
    ++r.closures_scanned;
    if (!iterated_commutator(g, oz, q, g.prime() - 1, route).is_trivial()) continue;
    ++r.qualifying;
    if (!q.is_subgroup_of(x)) r.violations.push_back(cand);
  }
  return r;
}

struct ConjectureVerdict {
  ThompsonResult thompson;
  OliverResult oliver;
  bool holds = false;
};

template <FiniteGroup G>
ConjectureVerdict check_conjecture(const G& g, const ThompsonLimits& limits = {}, const OliverOptions& opt = {}) {
  ConjectureVerdict v;
  v.thompson = thompson_subgroup(g, limits);
  v.oliver = compute_oliver(g, opt);
  v.holds = v.thompson.j.is_subgroup_of(v.oliver.subgroup);
  return v;
}

}  // namespace unisylow
