#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "unisylow/small_groups.hpp"
#include "unisylow/thompson.hpp"
#include "unisylow/unitary.hpp"

using namespace unisylow;

namespace {

// Every elementary abelian subgroup, grown breadth-first one element at a
// time and deduplicated by member set.
struct EaOracle {
  unsigned rank = 0;
  std::set<std::set<Index>> maximal;
  std::set<Index> j;
};

template <FiniteGroup G>
EaOracle ea_oracle(const G& g) {
  const std::uint32_t p = g.prime();
  std::vector<Index> order_p;
  for (Index i = 1; i < g.order(); ++i)
    if (power(g, g.element(i), p) == g.identity()) order_p.push_back(i);
  std::map<unsigned, std::set<std::set<Index>>> by_rank;
  by_rank[0].insert({kIdentityIndex});
  for (unsigned r = 0; by_rank.count(r); ++r)
    for (const auto& e : by_rank[r])
      for (Index x : order_p) {
        if (e.count(x)) continue;
        bool ok = true;
        for (Index y : e)
          if (!commutes(g, g.element(x), g.element(y))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        std::set<Index> bigger;
        auto xp = g.identity();
        for (std::uint32_t k = 0; k < p; ++k) {
          for (Index y : e) bigger.insert(g.index_of(g.mul(g.element(y), xp)));
          xp = g.mul(xp, g.element(x));
        }
        by_rank[r + 1].insert(bigger);
      }
  EaOracle out;
  out.rank = by_rank.rbegin()->first;
  out.maximal = by_rank.rbegin()->second;
  std::vector<Index> gens;
  for (const auto& e : out.maximal) gens.insert(gens.end(), e.begin(), e.end());
  const Subgroup j = generated_subgroup_exact(g, gens);
  for (Index i : j.members()) out.j.insert(i);
  return out;
}

std::set<Index> as_set(const Subgroup& h) {
  const auto m = h.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST(Thompson, MatchesBruteForceOnCorpus) {
  for (const auto& g : corpus_groups()) {
    const ThompsonResult r = thompson_subgroup(g);
    const EaOracle o = ea_oracle(g);
    EXPECT_EQ(r.report.rank, o.rank) << g.name();
    std::set<std::set<Index>> found;
    for (const auto& e : r.report.maximal_subgroups) {
      EXPECT_TRUE(is_elementary_abelian(g, e)) << g.name();
      found.insert(as_set(e));
    }
    EXPECT_EQ(found.size(), r.report.maximal_subgroups.size()) << g.name() << ": duplicate visit";
    EXPECT_EQ(found, o.maximal) << g.name();
    EXPECT_EQ(as_set(r.j), o.j) << g.name();
    EXPECT_TRUE(is_normal(g, r.j)) << g.name();
  }
}

TEST(Thompson, ElementaryAbelianGroupIsItsOwnThompsonSubgroup) {
  for (std::uint32_t rank = 1; rank <= 4; ++rank) {
    const TableGroup g = abelian_group(5, std::vector<std::uint32_t>(rank, 1));
    const ThompsonResult r = thompson_subgroup(g);
    EXPECT_EQ(r.report.rank, rank);
    EXPECT_EQ(r.j.size(), g.order());
    EXPECT_EQ(r.report.maximal_subgroups.size(), 1u);
  }
}

TEST(Thompson, CyclicGroupOfOrder25) {
  const TableGroup g = abelian_group(5, {2});
  const ThompsonResult r = thompson_subgroup(g);
  EXPECT_EQ(r.report.rank, 1u);
  EXPECT_EQ(r.j.size(), 5u);
  EXPECT_EQ(r.j.members(), (std::vector<Index>{0, 5, 10, 15, 20}));
}

TEST(Thompson, HeisenbergSylowSubgroup) {
  // At (5,5,3) the Sylow subgroup has exponent 5 and centre of order 5, so
  // its maximal elementary abelian subgroups are the 6 subgroups of order 25
  // containing the centre.
  const SylowGroup s(UnitaryParams::make(5, 5, 3));
  const ThompsonResult r = thompson_subgroup(s);
  const EaOracle o = ea_oracle(s);
  EXPECT_EQ(r.report.rank, 2u);
  EXPECT_EQ(o.rank, 2u);
  EXPECT_EQ(r.report.maximal_subgroups.size(), 6u);
  EXPECT_EQ(o.maximal.size(), 6u);
  EXPECT_EQ(r.report.order_p_elements, 124u);
  EXPECT_EQ(r.report.cyclic_subgroups, 31u);
  EXPECT_EQ(r.j.size(), 125u);
  // Every one of them contains the centre A0.
  const Subgroup z = s.distinguished_subgroup({SubgroupKind::A0});
  EXPECT_EQ(z.size(), 5u);
  EXPECT_EQ(center(s, whole_group(s)), z);
  for (const auto& e : r.report.maximal_subgroups) {
    EXPECT_EQ(e.size(), 25u);
    EXPECT_TRUE(z.is_subgroup_of(e));
  }
}

TEST(Thompson, SylowSubgroupOfDegreeFour) {
  const SylowGroup s(UnitaryParams::make(5, 5, 4));
  const ThompsonResult r = thompson_subgroup(s);
  // A is elementary abelian of order 625; J is normal and contains it.
  const Subgroup a = s.distinguished_subgroup({SubgroupKind::A});
  EXPECT_TRUE(is_elementary_abelian(s, a));
  EXPECT_GE(r.report.rank, 4u);
  EXPECT_TRUE(is_normal(s, r.j));
  if (r.report.rank == 4) {
    bool found = false;
    for (const auto& e : r.report.maximal_subgroups) found = found || e == a;
    EXPECT_TRUE(found);
    EXPECT_TRUE(a.is_subgroup_of(r.j));
  }
  for (const auto& e : r.report.maximal_subgroups) EXPECT_TRUE(is_elementary_abelian(s, e));
}

TEST(Thompson, BudgetIsEnforced) {
  const SylowGroup s(UnitaryParams::make(5, 5, 4));
  ThompsonLimits tight;
  tight.max_cyclic_subgroups = 10;
  EXPECT_THROW(thompson_subgroup(s, tight), budget_exceeded);
  ThompsonLimits few_nodes;
  few_nodes.max_nodes = 3;
  EXPECT_THROW(thompson_subgroup(s, few_nodes), budget_exceeded);
}
