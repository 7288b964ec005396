#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "unisylow/group.hpp"
#include "unisylow/random.hpp"
#include "unisylow/small_groups.hpp"
#include "unisylow/unitary.hpp"

using namespace unisylow;

namespace {

// Subgroup generated by a set, computed naively: repeatedly multiply all
// pairs of members until nothing new appears.
std::set<Index> naive_span(const TableGroup& g, const std::vector<Index>& gens) {
  std::set<Index> s{kIdentityIndex};
  s.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Index> cur(s.begin(), s.end());
    for (Index a : cur)
      for (Index b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return s;
}

std::set<Index> as_set(const Subgroup& h) {
  const auto m = h.members();
  return {m.begin(), m.end()};
}

// [A, B] from the definition: the naive span of all commutators.
std::set<Index> naive_commutator(const TableGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Index> comms;
  for (Index x : a.members())
    for (Index y : b.members()) comms.push_back(commutator(g, x, y));
  return naive_span(g, comms);
}

}  // namespace

TEST(Group, CorpusTablesAreGroups) {
  for (const auto& g : corpus_groups()) {
    EXPECT_TRUE(g.is_group()) << g.name();
    EXPECT_TRUE(is_p_power(g, g.order())) << g.name();
  }
}

TEST(Group, CorpusOrders) {
  std::vector<std::uint64_t> orders;
  for (const auto& g : corpus_groups()) orders.push_back(g.order());
  const std::vector<std::uint64_t> expected{1,   5,   25,  125, 25, 125, 125, 625, 625, 625, 625,
                                            625, 125, 125, 25,  625, 625, 81,  243, 27,  81};
  EXPECT_EQ(orders, expected);
}

TEST(Group, BitsetBasics) {
  Bitset b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 3u);
  EXPECT_EQ(b.indices(), (std::vector<Index>{0, 64, 129}));
  b.reset(64);
  EXPECT_FALSE(b.test(64));
  EXPECT_TRUE(b.is_subset_of(Bitset::full(130)));
  EXPECT_EQ(Bitset::full(130).count(), 130u);
}

TEST(Group, GeneratedSubgroupMatchesNaiveSpan) {
  Rng rng(5);
  for (const auto& g : corpus_groups()) {
    if (g.order() < 2) continue;
    for (int s = 0; s < 6; ++s) {
      std::vector<Index> gens;
      const int k = 1 + static_cast<int>(rng.below(3));
      for (int i = 0; i < k; ++i) gens.push_back(static_cast<Index>(rng.below(g.order())));
      const Subgroup h = generated_subgroup(g, gens);
      EXPECT_EQ(as_set(h), naive_span(g, gens)) << g.name();
      EXPECT_EQ(g.order() % h.size(), 0u);
      EXPECT_TRUE(is_p_power(g, h.size()));
      // The witness generates the same subgroup.
      EXPECT_EQ(generated_subgroup_exact(g, h.witness()), h);
    }
  }
}

TEST(Group, CentralizerFromWitnessMatchesDefinition) {
  Rng rng(9);
  for (const auto& g : corpus_groups()) {
    if (g.order() < 2) continue;
    for (int s = 0; s < 4; ++s) {
      const Index seed[] = {static_cast<Index>(rng.below(g.order())), static_cast<Index>(rng.below(g.order()))};
      const Subgroup h = generated_subgroup(g, seed);
      EXPECT_EQ(centralizer(g, h).bits(), centralizer_by_members(g, h)) << g.name();
    }
  }
}

TEST(Group, CommutatorRoutesAgreeWithDefinition) {
  Rng rng(21);
  for (const auto& g : corpus_groups()) {
    if (g.order() < 2) continue;
    for (int s = 0; s < 4; ++s) {
      const Index sa[] = {static_cast<Index>(rng.below(g.order()))};
      const Index sb[] = {static_cast<Index>(rng.below(g.order())), static_cast<Index>(rng.below(g.order()))};
      // B normal, A arbitrary, and both arbitrary
      const Subgroup a = generated_subgroup(g, sa);
      const Subgroup bn = normal_closure(g, sb);
      const Subgroup b = generated_subgroup(g, sb);
      for (const Subgroup* bb : {&bn, &b}) {
        const auto expected = naive_commutator(g, a, *bb);
        EXPECT_EQ(as_set(commutator_subgroup(g, a, *bb, CommutatorRoute::members)), expected) << g.name();
        EXPECT_EQ(as_set(commutator_subgroup(g, a, *bb, CommutatorRoute::generators)), expected) << g.name();
      }
      for (unsigned t = 1; t <= 4; ++t)
        EXPECT_EQ(iterated_commutator(g, a, bn, t, CommutatorRoute::members),
                  iterated_commutator(g, a, bn, t, CommutatorRoute::generators))
            << g.name() << " t=" << t;
    }
  }
}

TEST(Group, IteratedCommutatorIsMonotone) {
  for (const auto& g : corpus_groups()) {
    const Subgroup s = whole_group(g);
    Subgroup prev = s;
    for (unsigned t = 1; t <= 5; ++t) {
      const Subgroup k = iterated_commutator(g, s, s, t);
      EXPECT_TRUE(k.is_subgroup_of(prev)) << g.name();
      prev = k;
    }
  }
  EXPECT_THROW(iterated_commutator(corpus_groups()[1], Subgroup::trivial(5), Subgroup::trivial(5), 0),
               invalid_parameter);
}

TEST(Group, NormalClosureIsSmallestNormalSubgroup) {
  for (const auto& g : corpus_groups()) {
    if (g.order() < 2) continue;
    for (Index i = 0; i < g.order(); i += std::max<Index>(1, static_cast<Index>(g.order() / 17))) {
      const Index seed[] = {i};
      const Subgroup n = normal_closure(g, seed);
      EXPECT_TRUE(is_normal(g, n));
      // All conjugates of i, spanned naively.
      std::vector<Index> conj;
      for (Index x = 0; x < g.order(); ++x) conj.push_back(g.mul(g.mul(g.inv(x), i), x));
      EXPECT_EQ(as_set(n), naive_span(g, conj)) << g.name();
    }
  }
}

TEST(Group, PredicatesByDefinition) {
  for (const auto& g : corpus_groups()) {
    const Subgroup s = whole_group(g);
    bool abelian = true, exponent_p = true;
    for (Index a = 0; a < g.order(); ++a) {
      if (power(g, a, g.prime()) != kIdentityIndex) exponent_p = false;
      for (Index b = 0; b < g.order(); ++b)
        if (g.mul(a, b) != g.mul(b, a)) abelian = false;
    }
    EXPECT_EQ(is_abelian(g, s), abelian) << g.name();
    EXPECT_EQ(is_elementary_abelian(g, s), abelian && exponent_p) << g.name();
    std::vector<Index> central;
    for (Index a = 0; a < g.order(); ++a) {
      bool c = true;
      for (Index b = 0; b < g.order() && c; ++b) c = g.mul(a, b) == g.mul(b, a);
      if (c) central.push_back(a);
    }
    EXPECT_EQ(center(g, s).members(), central) << g.name();
    if (abelian) {
      EXPECT_EQ(center(g, s), s);
    }
    // Omega_1 is generated by the elements of order dividing p.
    std::vector<Index> small;
    for (Index a = 0; a < g.order(); ++a)
      if (power(g, a, g.prime()) == kIdentityIndex) small.push_back(a);
    EXPECT_EQ(as_set(omega1(g, s)), naive_span(g, small)) << g.name();
  }
}

TEST(Group, ProductSubgroupOfNormalSubgroupsIsTheProductSet) {
  for (const auto& g : corpus_groups()) {
    if (g.order() < 25) continue;
    const Index s1[] = {1}, s2[] = {static_cast<Index>(g.order() - 1)};
    const Subgroup h = normal_closure(g, s1), k = normal_closure(g, s2);
    const Subgroup hk = product_subgroup(g, h, k);
    EXPECT_EQ(hk.size(), product_set_size(h, k)) << g.name();
    std::set<Index> set;
    for (Index a : h.members())
      for (Index b : k.members()) set.insert(g.mul(a, b));
    EXPECT_EQ(as_set(hk), set) << g.name();
  }
}

TEST(Group, ElementOrders) {
  const TableGroup c125 = abelian_group(5, {3});
  EXPECT_EQ(element_order(c125, 1), 125u);
  EXPECT_EQ(element_order(c125, 25), 5u);
  EXPECT_EQ(element_order(c125, 0), 1u);
}

TEST(Group, GeneratedByAbelianNormalSubgroups) {
  for (const auto& g : corpus_groups()) {
    // Every group of order at most p^4 is; check against the definition via
    // a product of abelian normal closures.
    std::vector<Index> gens;
    for (Index i = 0; i < g.order(); ++i) {
      const Index seed[] = {i};
      const Subgroup n = normal_closure(g, seed);
      if (is_abelian(g, n)) gens.push_back(i);
    }
    EXPECT_EQ(generated_by_abelian_normal_subgroups(g), naive_span(g, gens).size() == g.order()) << g.name();
  }
  const SylowGroup s(UnitaryParams::make(5, 5, 2));
  EXPECT_TRUE(generated_by_abelian_normal_subgroups(s));
}

TEST(Group, OmegaOneOfHeisenbergGroupIsEverything) {
  const SylowGroup s(UnitaryParams::make(5, 5, 3));
  EXPECT_EQ(omega1(s, whole_group(s)).size(), 125u);
}

TEST(Group, ResultsDoNotDependOnGeneratorOrder) {
  Rng rng(77);
  for (const auto& g : corpus_groups()) {
    if (g.order() < 2) continue;
    std::vector<Index> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(static_cast<Index>(rng.below(g.order())));
    const Subgroup h = generated_subgroup(g, gens);
    const Subgroup c = centralizer(g, h);
    for (int r = 0; r < 3; ++r) {
      rng.shuffle(gens);
      const Subgroup h2 = generated_subgroup(g, gens);
      EXPECT_EQ(h2, h);
      EXPECT_EQ(centralizer(g, h2), c);
      EXPECT_EQ(normal_closure(g, gens), normal_closure(g, std::vector<Index>(gens.rbegin(), gens.rend())));
    }
  }
}

TEST(Group, ClosureRejectsGeneratorsOutsideTheAmbient) {
  const TableGroup g = abelian_group(5, {1, 1});
  const Index seed[] = {1};
  const Subgroup h = generated_subgroup(g, seed);
  const Index bad[] = {5};
  EXPECT_THROW(generated_subgroup(g, bad, &h), invalid_parameter);
  const Index out_of_range[] = {25};
  EXPECT_THROW(generated_subgroup(g, out_of_range), invalid_parameter);
}

TEST(Group, MetacyclicRejectsBadAction) {
  EXPECT_THROW(metacyclic_group(5, 2, 1, 2), invalid_parameter);
  EXPECT_THROW(metacyclic_group(3, 3, 1, 4), invalid_parameter);
}
