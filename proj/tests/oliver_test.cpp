#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "unisylow/oliver.hpp"
#include "unisylow/small_groups.hpp"
#include "unisylow/unitary.hpp"

using namespace unisylow;

namespace {

// Passing chains on a group: the one-step chains 1 <= <g^S> that pass, and
// the greedy certificate.
template <FiniteGroup G>
std::vector<QSeries> chain_corpus(const G& g, std::size_t limit) {
  std::vector<QSeries> out;
  std::set<std::vector<Index>> seen;
  for (Index i = 1; i < g.order() && out.size() < limit; ++i) {
    const Index seed[] = {i};
    const Subgroup n = normal_closure(g, seed);
    if (!seen.insert(n.members()).second) continue;
    QSeries q = verify_qseries(g, {trivial_subgroup(g), n});
    if (q.pass()) out.push_back(std::move(q));
  }
  out.push_back(compute_oliver(g).certificate);
  return out;
}

}  // namespace

TEST(QSeries, AbelianOneStepChainPasses) {
  for (const auto& g : corpus_groups()) {
    if (!is_abelian(g, whole_group(g)) || g.order() == 1) continue;
    const QSeries q = verify_qseries(g, {trivial_subgroup(g), whole_group(g)});
    EXPECT_TRUE(q.pass()) << g.name();
    ASSERT_EQ(q.steps.size(), 1u);
    EXPECT_TRUE(q.steps[0].commutator.is_trivial());
    EXPECT_TRUE(q.steps[0].normal);
  }
}

TEST(QSeries, RejectsMalformedChains) {
  const TableGroup g = abelian_group(5, {2});
  const Index five[] = {5};
  const Subgroup small = generated_subgroup(g, five);
  EXPECT_THROW(verify_qseries(g, {}), invalid_parameter);
  EXPECT_THROW(verify_qseries(g, {small}), invalid_parameter);
  EXPECT_THROW(verify_qseries(g, {trivial_subgroup(g), whole_group(g), small}), invalid_parameter);
  EXPECT_THROW(verify_qseries(g, {trivial_subgroup(g), Subgroup::trivial(125)}), invalid_parameter);
}

TEST(QSeries, NonNormalStepFails) {
  const SylowGroup s(UnitaryParams::make(5, 5, 4));
  const Subgroup d = s.distinguished_subgroup({SubgroupKind::Dpart});
  EXPECT_EQ(d.size(), 25u);
  EXPECT_FALSE(is_normal(s, d));
  const QSeries q = verify_qseries(s, {trivial_subgroup(s), d});
  EXPECT_FALSE(q.steps[0].normal);
  EXPECT_FALSE(q.pass());
}

TEST(QSeries, ClassThreeGroupFailsOneStep) {
  // C3 wr C3 has class 3 and is generated by elements of order 3, so
  // [Omega_1(S), S; 2] = gamma_3(S) is nontrivial.
  const TableGroup g = TableGroup::from(WreathGroup({3, 1, 1}), "C3 wr C3");
  const QSeries q = verify_qseries(g, {trivial_subgroup(g), whole_group(g)});
  EXPECT_FALSE(q.pass());
  EXPECT_EQ(q.steps[0].omega_centralizer.size(), 81u);
  EXPECT_EQ(q.steps[0].commutator.size(), 3u);
}

TEST(QSeries, AbelianNormalChainAtDegreeFour) {
  const SylowGroup s(UnitaryParams::make(5, 5, 4));
  const Subgroup a = s.distinguished_subgroup({SubgroupKind::A});
  const Subgroup n21 = s.distinguished_subgroup(SubgroupTag::ntilde(2, 1));
  const QSeries q = verify_qseries(s, {trivial_subgroup(s), a, n21});
  EXPECT_TRUE(q.pass());
  EXPECT_EQ(q.steps[1].omega_centralizer, a);
  // Re-verification from scratch is repeatable.
  const QSeries again = verify_qseries(s, q.chain);
  ASSERT_EQ(again.steps.size(), q.steps.size());
  for (std::size_t i = 0; i < q.steps.size(); ++i) {
    EXPECT_EQ(again.steps[i].commutator, q.steps[i].commutator);
    EXPECT_EQ(again.steps[i].pass, q.steps[i].pass);
  }
  // Concatenating the chain with itself ends where it started.
  const QSeries cc = concat_qseries(s, q, q);
  EXPECT_TRUE(cc.pass());
  EXPECT_EQ(cc.top(), n21);
  EXPECT_EQ(cc.chain.size(), q.chain.size());
}

TEST(QSeries, ConcatenationWithTrivialChainIsIdentity) {
  const SylowGroup s(UnitaryParams::make(5, 5, 3));
  const QSeries c1 = compute_oliver(s).certificate;
  const QSeries c2 = verify_qseries(s, {trivial_subgroup(s)});
  const QSeries cc = concat_qseries(s, c1, c2);
  ASSERT_EQ(cc.chain.size(), c1.chain.size());
  for (std::size_t i = 0; i < cc.chain.size(); ++i) EXPECT_EQ(cc.chain[i], c1.chain[i]);
}

TEST(QSeries, ConcatenationRejectsFailingInput) {
  const TableGroup g = TableGroup::from(WreathGroup({3, 1, 1}), "C3 wr C3");
  const QSeries bad = verify_qseries(g, {trivial_subgroup(g), whole_group(g)});
  const QSeries good = verify_qseries(g, {trivial_subgroup(g)});
  EXPECT_THROW(concat_qseries(g, bad, good), invalid_parameter);
  EXPECT_THROW(concat_qseries(g, good, bad), invalid_parameter);
}

TEST(QSeries, ConcatenationOfPassingChainsPassesOnCorpus) {
  std::size_t pairs = 0;
  for (const auto& g : corpus_groups()) {
    const std::vector<QSeries> chains = chain_corpus(g, 12);
    for (const auto& c1 : chains)
      for (const auto& c2 : chains) {
        const QSeries cc = concat_qseries(g, c1, c2);
        EXPECT_TRUE(cc.pass()) << g.name();
        EXPECT_EQ(cc.top(), product_subgroup(g, c1.top(), c2.top())) << g.name();
        ++pairs;
      }
  }
  EXPECT_GT(pairs, 500u);
}

TEST(Oliver, AbelianGroupIsItsOwnOliverSubgroup) {
  for (const auto& g : corpus_groups()) {
    if (!is_abelian(g, whole_group(g))) continue;
    EXPECT_EQ(compute_oliver(g).subgroup.size(), g.order()) << g.name();
  }
}

TEST(Oliver, GreedyMatchesBruteForceOnCorpus) {
  std::size_t proper = 0;
  for (const auto& g : corpus_groups()) {
    const OliverResult r = compute_oliver(g);
    const BruteforceResult b = oliver_bruteforce(g);
    EXPECT_TRUE(b.unique_maximum) << g.name();
    EXPECT_EQ(r.subgroup, b.subgroup) << g.name();
    EXPECT_TRUE(r.certificate.pass()) << g.name();
    EXPECT_TRUE(is_normal(g, r.subgroup)) << g.name();
    if (r.subgroup.size() < g.order()) ++proper;
  }
  // The corpus exercises at least one group where X(S) is proper.
  EXPECT_GE(proper, 1u);
}

TEST(Oliver, ShuffledCandidateOrderGivesTheSameSubgroup) {
  for (const auto& g : corpus_groups()) {
    const Subgroup x = compute_oliver(g).subgroup;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      OliverOptions opt;
      opt.shuffle_seed = seed;
      EXPECT_EQ(compute_oliver(g, opt).subgroup, x) << g.name() << " seed " << seed;
    }
    OliverOptions members;
    members.route = CommutatorRoute::members;
    EXPECT_EQ(compute_oliver(g, members).subgroup, x) << g.name();
  }
}

TEST(Oliver, LemmaChecksPassOnCorpus) {
  for (const auto& g : corpus_groups()) {
    const Subgroup x = compute_oliver(g).subgroup;
    const LemmaReport l = lemma_checks(g, x);
    EXPECT_TRUE(l.centralizer_is_center) << g.name();
    EXPECT_TRUE(l.violations.empty()) << g.name();
  }
}

TEST(Oliver, LemmaScanDetectsNonMaximalSubgroup) {
  // In C25 x C5 the subgroup C25 satisfies C_S(X) = S != Z(X).
  const TableGroup g = abelian_group(5, {2, 1});
  const Index seed[] = {1};
  const Subgroup x = generated_subgroup(g, seed);
  const LemmaReport l = lemma_checks(g, x);
  EXPECT_FALSE(l.centralizer_is_center);
  EXPECT_FALSE(l.violations.empty());
  EXPECT_FALSE(l.pass());
}

TEST(Oliver, BruteForceSmallCases) {
  const TableGroup c5 = abelian_group(5, {1});
  EXPECT_EQ(oliver_bruteforce(c5).subgroup.size(), 5u);
  const TableGroup c125 = abelian_group(5, {3});
  EXPECT_EQ(oliver_bruteforce(c125).subgroup.size(), 125u);
  EXPECT_EQ(oliver_bruteforce(c125).normal_subgroups, 4u);
  const TableGroup c5x5 = abelian_group(5, {1, 1});
  EXPECT_EQ(oliver_bruteforce(c5x5).normal_subgroups, 8u);
  const SylowGroup s(UnitaryParams::make(5, 5, 3));
  EXPECT_EQ(oliver_bruteforce(s).subgroup.size(), 125u);
  const SylowGroup big(UnitaryParams::make(5, 5, 4));
  EXPECT_THROW(oliver_bruteforce(big), budget_exceeded);
}

TEST(Oliver, NormalSubgroupCountsMatchKnownValues) {
  // C5^3: 1 + 31 + 31 + 1 subgroups, all normal.
  EXPECT_EQ(normal_subgroups(abelian_group(5, {1, 1, 1})).size(), 64u);
  // Heisenberg group of order 125: 1, Z, the 6 maximal subgroups, S.
  EXPECT_EQ(normal_subgroups(SylowGroup(UnitaryParams::make(5, 5, 3))).size(), 9u);
}

TEST(Oliver, FullSylowSubgroupInDefiningCharacteristic) {
  for (std::uint32_t n : {2u, 3u, 4u}) {
    const SylowGroup s(UnitaryParams::make(5, 5, n));
    const OliverResult r = compute_oliver(s);
    EXPECT_EQ(r.subgroup.size(), s.order()) << "n=" << n;
    EXPECT_TRUE(r.certificate.pass());
    EXPECT_TRUE(r.maximality_evidence.empty());
    EXPECT_TRUE(lemma_checks(s, r.subgroup).pass()) << "n=" << n;
  }
}

TEST(Oliver, ConjectureHoldsOnCorpus) {
  for (const auto& g : corpus_groups()) {
    const ConjectureVerdict v = check_conjecture(g);
    EXPECT_TRUE(v.holds) << g.name();
    EXPECT_TRUE(v.thompson.j.is_subgroup_of(v.oliver.subgroup));
  }
}
