#pragma once

// Verification suites. Each appends check records to a Report; randomness
// comes from the caller's generator so one seed drives a whole run.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "field.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "oliver.hpp"
#include "random.hpp"
#include "report.hpp"
#include "small_groups.hpp"
#include "thompson.hpp"
#include "unitary.hpp"
#include "wreath.hpp"

namespace unisylow {

/// Domains smaller than this are checked exhaustively in addition to the
/// random samples.
inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 16;

/// Sylow subgroups up to this order get the exhaustive closure proof;
/// larger ones are checked on sampled products.
inline constexpr std::uint64_t kExhaustiveClosureLimit = 15625;

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Runs body, which returns the number of failures, and records the result.
inline Check& timed_check(Report& rep, const std::string& name, const std::string& anchor,
                          const std::function<std::uint64_t(Check&)>& body) {
  Stopwatch sw;
  Check tmp{name, anchor, true, {}, 0};
  const std::uint64_t failures = body(tmp);
  tmp.pass = failures == 0;
  tmp.set("failures", failures);
  tmp.seconds = sw.seconds();
  rep.checks().push_back(std::move(tmp));
  return rep.checks().back();
}

/// Number of m x m matrices over the field, or 0 if at least the limit.
inline std::uint64_t matrix_domain(const Field& f, std::size_t m, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < m * m; ++i) {
    n *= f.size();
    if (n >= limit) return 0;
  }
  return n;
}

inline Mat matrix_from_code(const Field& f, std::size_t m, std::uint64_t code) {
  Mat b(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      b(r, c) = FieldElem(static_cast<std::uint16_t>(code % f.size()));
      code /= f.size();
    }
  return b;
}

inline Mat random_persymmetric(Rng& rng, const Field& f, std::size_t m) {
  Mat b = rng.matrix(f, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c)
      if (a + c > m - 1) b(m - 1 - c, m - 1 - a) = b(a, c);
  return b;
}

}  // namespace detail

/// The five flip-transpose identities at matrix size m.
inline void flip_transpose_suite(Report& rep, const Field& f, std::size_t m, Rng& rng, std::uint64_t samples) {
  using detail::timed_check;
  const Mat q = Mat::skew_identity(m);
  const std::uint64_t singles = detail::matrix_domain(f, m, kExhaustiveLimit);
  const std::uint64_t pairs = singles && singles * singles < kExhaustiveLimit ? singles * singles : 0;
  const std::string tag = "flip_transpose.q" + std::to_string(f.q()) + ".m" + std::to_string(m) + ".";

  timed_check(rep, tag + "skew_identity_squared", "Q^2 = 1", [&](Check& c) -> std::uint64_t {
    c.set("mode", "deterministic");
    return mul(f, q, q) == Mat::identity(m) ? 0 : 1;
  });

  timed_check(rep, tag + "persymmetric_iff_symmetric_products",
              "B persymmetric iff QB symmetric iff BQ symmetric", [&](Check& c) {
                std::uint64_t bad = 0, persym = 0;
                auto one = [&](const Mat& b) {
                  const bool ps = is_persymmetric(b);
                  persym += ps;
                  if (ps != is_symmetric(mul(f, q, b)) || ps != is_symmetric(mul(f, b, q))) ++bad;
                };
                for (std::uint64_t s = 0; s < samples; ++s) {
                  one(rng.matrix(f, m));
                  one(detail::random_persymmetric(rng, f, m));
                }
                for (std::uint64_t code = 0; code < singles; ++code) one(detail::matrix_from_code(f, m, code));
                c.set("samples", 2 * samples).set("exhaustive", singles).set("persymmetric_seen", persym);
                return bad;
              });

  timed_check(rep, tag + "flip_transpose_is_conjugated_transpose", "Q B^T Q = B^F", [&](Check& c) {
    std::uint64_t bad = 0;
    auto one = [&](const Mat& b) { bad += !(mul(f, mul(f, q, transpose(b)), q) == flip_transpose(b)); };
    for (std::uint64_t s = 0; s < samples; ++s) one(rng.matrix(f, m));
    for (std::uint64_t code = 0; code < singles; ++code) one(detail::matrix_from_code(f, m, code));
    c.set("samples", samples).set("exhaustive", singles);
    return bad;
  });

  timed_check(rep, tag + "flip_transpose_reverses_products", "(BC)^F = C^F B^F", [&](Check& c) {
    std::uint64_t bad = 0;
    auto one = [&](const Mat& b, const Mat& d) {
      bad += !(flip_transpose(mul(f, b, d)) == mul(f, flip_transpose(d), flip_transpose(b)));
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
      const Mat b = rng.matrix(f, m);
      one(b, rng.matrix(f, m));
    }
    for (std::uint64_t code = 0; code < pairs; ++code)
      one(detail::matrix_from_code(f, m, code % singles), detail::matrix_from_code(f, m, code / singles));
    c.set("samples", samples).set("exhaustive_pairs", pairs);
    return bad;
  });

  timed_check(rep, tag + "flip_transpose_commutes_with_inverse", "(B^F)^-1 = (B^-1)^F", [&](Check& c) {
    std::uint64_t bad = 0, invertible = 0;
    auto one = [&](const Mat& b) {
      if (!is_invertible(f, b)) return;
      ++invertible;
      bad += !(inverse(f, flip_transpose(b)) == flip_transpose(inverse(f, b)));
    };
    for (std::uint64_t s = 0; s < samples; ++s) one(rng.invertible_matrix(f, m));
    for (std::uint64_t code = 0; code < singles; ++code) one(detail::matrix_from_code(f, m, code));
    c.set("samples", samples).set("exhaustive", singles).set("invertible_checked", invertible);
    return bad;
  });
}

/// |U_n(F_q)| by testing the form on every n x n matrix over F_{q^2}.
inline void full_unitary_order_check(Report& rep, const Field& f, std::size_t n, std::uint64_t budget) {
  detail::timed_check(rep, "unitary.q" + std::to_string(f.q()) + ".n" + std::to_string(n) + ".full_order",
                      "|U_n(F_q)| = q^(n(n-1)/2) prod (q^i - (-1)^i)", [&](Check& c) -> std::uint64_t {
                        const std::uint64_t count = count_unitary_exhaustive(f, n, budget);
                        const std::uint64_t expected = unitary_group_order(f.q(), static_cast<std::uint32_t>(n));
                        c.set("counted", count).set("formula", expected);
                        return count == expected ? 0 : 1;
                      });
}

/// Order, enumeration, closure and distinguished subgroups of the Sylow
/// subgroup.
inline void sylow_suite(Report& rep, const SylowGroup& g, Rng& rng, std::uint64_t samples, std::uint64_t budget) {
  using detail::timed_check;
  const UnitaryParams& pr = g.params();
  const std::string tag = "sylow.";
  const std::uint64_t m = pr.m;
  std::uint64_t qm2 = 1;
  for (std::uint64_t i = 0; i < m * m; ++i) qm2 *= pr.q;

  timed_check(rep, tag + "order", "|S| = q^(n(n-1)/2)", [&](Check& c) -> std::uint64_t {
    c.set("order", g.order()).set("formula", *pr.sylow_order());
    return g.order() == *pr.sylow_order() ? 0 : 1;
  });
  timed_check(rep, tag + "enumeration",
              "every parametrized element is lower unitriangular and unitary, and decomposes back to its index",
              [&](Check& c) -> std::uint64_t {
                c.set("elements", g.order());
                return verify_enumeration(g) ? 0 : 1;
              });
  if (g.order() <= kExhaustiveClosureLimit) {
    timed_check(rep, tag + "closure", "the enumerated set is closed and generated by the generators",
                [&](Check& c) -> std::uint64_t {
                  c.set("mode", "exhaustive").set("elements", g.order());
                  return verify_closure_exhaustive(g) ? 0 : 1;
                });
  } else {
    timed_check(rep, tag + "closure", "products of enumerated elements stay in the enumerated set",
                [&](Check& c) {
                  std::uint64_t bad = 0;
                  for (std::uint64_t s = 0; s < samples; ++s) {
                    const Mat x = g.element(static_cast<Index>(rng.below(g.order())));
                    const Mat y = g.element(static_cast<Index>(rng.below(g.order())));
                    const Mat z = g.mul(x, y);
                    bad += !(is_lower_unitriangular(z) && is_unitary(g.field(), z) && g.element(g.index_of(z)) == z);
                  }
                  c.set("mode", "sampled").set("samples", samples);
                  return bad;
                });
  }
  if (detail::matrix_domain(g.field(), pr.n, budget + 1))
    full_unitary_order_check(rep, g.field(), pr.n, budget);

  const Subgroup a = g.distinguished_subgroup({SubgroupKind::A});
  const Subgroup d = g.distinguished_subgroup({SubgroupKind::Dpart});
  timed_check(rep, tag + "abelian_subgroup_A", "A is an abelian normal subgroup", [&](Check& c) -> std::uint64_t {
    // |A| = q^(m^2) for even n and q^(m^2 + 2m) for odd n.
    std::uint64_t expected = qm2;
    if (g.odd())
      for (std::uint64_t i = 0; i < 2 * m; ++i) expected *= pr.q;
    const bool abelian = is_abelian(g, a), normal = is_normal(g, a);
    c.set("order", a.size()).set("expected_order", expected).set("abelian", abelian).set("normal", normal);
    if (g.odd()) return (a.size() == expected && normal) ? 0 : 1;
    return (a.size() == expected && abelian && normal) ? 0 : 1;
  });
  timed_check(rep, tag + "semidirect_decomposition", "S = A x| D with A and D meeting trivially",
              [&](Check& c) -> std::uint64_t {
                Bitset both = a.bits();
                both &= d.bits();
                const bool ok = both.count() == 1 && a.size() * d.size() == g.order();
                c.set("order_A", a.size()).set("order_D", d.size()).set("intersection", both.count());
                return ok ? 0 : 1;
              });
  if (g.odd()) {
    const Subgroup a0 = g.distinguished_subgroup({SubgroupKind::A0});
    timed_check(rep, tag + "subgroup_A0", "A0 is abelian and normal, [A0, A] = 1 and [A, A] <= A0",
                [&](Check& c) -> std::uint64_t {
                  const bool abelian = is_abelian(g, a0), normal = is_normal(g, a0);
                  const Subgroup k = commutator_subgroup(g, a0, a, CommutatorRoute::generators);
                  const Subgroup aa = commutator_subgroup(g, a, a, CommutatorRoute::generators);
                  c.set("order", a0.size()).set("expected_order", qm2).set("abelian", abelian).set("normal", normal);
                  c.set("commutator_A0_A", k.size()).set("commutator_A_A", aa.size());
                  return (a0.size() == qm2 && abelian && normal && k.is_trivial() && aa.is_subgroup_of(a0)) ? 0 : 1;
                });
  }
  if (m >= 2) {
    timed_check(rep, tag + "ntilde_subgroups", "every N~_ij is normal and together they generate S",
                [&](Check& c) {
                  std::uint64_t bad = 0;
                  Closure<SylowGroup> all(g);
                  for (std::uint32_t i = 2; i <= m; ++i)
                    for (std::uint32_t j = 1; j < i; ++j) {
                      const Subgroup n = g.distinguished_subgroup(SubgroupTag::ntilde(i, j));
                      const bool normal = is_normal(g, n);
                      c.set("order_" + std::to_string(i) + std::to_string(j), n.size());
                      c.set("normal_" + std::to_string(i) + std::to_string(j), normal);
                      bad += !normal;
                      for (Index w : n.witness())
                        if (!all.contains(w)) all.add(w);
                    }
                  const std::uint64_t span = all.size();
                  c.set("generated_order", span);
                  return bad + (span == g.order() ? 0 : 1);
                });
  }
}

/// Closed-form product, inverse and commutator formulas against matrix
/// arithmetic on random samples.
inline void formulas_suite(Report& rep, const SylowGroup& g, Rng& rng, std::uint64_t samples) {
  using detail::timed_check;
  const Field& f = g.field();
  const Mat one = Mat::identity(g.m());
  if (!g.odd()) {
    timed_check(rep, "formulas.product", "X_{D,P} X_{D',P'} = X_{DD', D'^-1 P (conj(D')^F)^-1 + P'}", [&](Check& c) {
      std::uint64_t bad = 0;
      for (std::uint64_t s = 0; s < samples; ++s) {
        const SylowElem x = g.random_element(rng), y = g.random_element(rng);
        bad += !(g.embed(g.mul_formula(x, y)) == g.mul(g.embed(x), g.embed(y)));
      }
      c.set("samples", samples);
      return bad;
    });
    timed_check(rep, "formulas.inverse", "X_{D,P}^-1 = X_{D^-1, -D P conj(D)^F}", [&](Check& c) {
      std::uint64_t bad = 0;
      for (std::uint64_t s = 0; s < samples; ++s) {
        const SylowElem x = g.random_element(rng);
        const SylowElem xi = g.inverse_formula(x);
        bad += !(g.embed(xi) == inverse(f, g.embed(x)) && g.embed(g.mul_formula(x, xi)) == g.identity());
      }
      c.set("samples", samples);
      return bad;
    });
    timed_check(rep, "formulas.abelian_product", "X_{1,P} X_{1,P'} = X_{1,P+P'}", [&](Check& c) {
      std::uint64_t bad = 0;
      for (std::uint64_t s = 0; s < samples; ++s) {
        const SylowElem a = g.random_element(rng, {SubgroupKind::A}), b = g.random_element(rng, {SubgroupKind::A});
        bad += !(g.mul_formula(a, b) == g.make(one, add(f, a.p, b.p)) &&
                 g.mul(g.embed(a), g.embed(b)) == g.embed(g.make(one, add(f, a.p, b.p))));
      }
      c.set("samples", samples);
      return bad;
    });
    timed_check(rep, "formulas.commutator_even", "[X_{1,P}, X_{D,P'}] = X_{1, D^-1 P (conj(D)^-1)^F - P}",
                [&](Check& c) {
                  std::uint64_t bad = 0;
                  for (std::uint64_t s = 0; s < samples; ++s) {
                    const SylowElem a = g.random_element(rng, {SubgroupKind::A}), y = g.random_element(rng);
                    bad += !(g.embed(g.comm_formula_even(a, y)) == commutator(g, g.embed(a), g.embed(y)));
                  }
                  c.set("samples", samples);
                  return bad;
                });
    return;
  }
  timed_check(rep, "formulas.commutator_odd_abelian",
              "[X_{1,P,a}, X_{1,P',a'}] = X_{1, Q conj(a')^T a - Q conj(a)^T a', 0}", [&](Check& c) {
                std::uint64_t bad = 0;
                for (std::uint64_t s = 0; s < samples; ++s) {
                  const SylowElem a = g.random_element(rng, {SubgroupKind::A});
                  const SylowElem b = g.random_element(rng, {SubgroupKind::A});
                  bad += !(g.embed(g.comm_formula_odd_abelian(a, b)) == commutator(g, g.embed(a), g.embed(b)));
                }
                c.set("samples", samples);
                return bad;
              });
  timed_check(rep, "formulas.commutator_odd_reduction", "[X_{1,P,0}, X_{D,P',a}] = [X_{1,P,0}, X_{D,0,0}]",
              [&](Check& c) {
                std::uint64_t bad = 0;
                for (std::uint64_t s = 0; s < samples; ++s) {
                  const SylowElem a0 = g.random_element(rng, {SubgroupKind::A0});
                  const SylowElem y = g.random_element(rng);
                  const SylowElem d = g.make(y.d, Mat(g.m()));
                  bad += !(commutator(g, g.embed(a0), g.embed(y)) == commutator(g, g.embed(a0), g.embed(d)));
                }
                c.set("samples", samples);
                return bad;
              });
  timed_check(rep, "formulas.commutator_odd_conjugation",
              "[X_{1,P,0}, X_{D,P',a}] = X_{1, -P + D^-1 P (conj(D)^F)^-1, 0}", [&](Check& c) {
                std::uint64_t bad = 0;
                for (std::uint64_t s = 0; s < samples; ++s) {
                  const SylowElem a0 = g.random_element(rng, {SubgroupKind::A0});
                  const SylowElem y = g.random_element(rng);
                  bad += !(g.embed(g.comm_formula_odd_conjugation(a0, y)) == commutator(g, g.embed(a0), g.embed(y)));
                }
                c.set("samples", samples);
                return bad;
              });
}

/// The centralizer condition, the probe-matrix computation behind it, and
/// the exact centralizer of A.
inline void centralizer_suite(Report& rep, const SylowGroup& g, Rng& rng, std::uint64_t samples) {
  using detail::timed_check;
  const Field& f = g.field();
  const std::size_t m = g.m();
  if (!g.odd() && m >= 2) {
    timed_check(rep, "centralizer.condition_matches_commutator",
                "X_{D,P'} centralizes X_{1,P} iff UP + P conj(U)^F + UP conj(U)^F = 0", [&](Check& c) {
                  std::uint64_t bad = 0, central = 0;
                  for (std::uint64_t s = 0; s < samples; ++s) {
                    // Half the samples use a single nonzero entry of U, which
                    // centralizes far more often than a random U.
                    Mat u = rng.strictly_lower(f, m);
                    if (s % 2) {
                      Mat single(m);
                      const std::size_t r = 1 + rng.below(m - 1), col = rng.below(r);
                      single(r, col) = u(r, col);
                      u = single;
                    }
                    Mat d = add(f, Mat::identity(m), u);
                    const SylowElem a = g.random_element(rng, {SubgroupKind::A});
                    const bool cond = centralizer_condition(f, u, a.p);
                    const bool comm = commutator(g, g.embed(a), g.embed(g.make(d, Mat(m)))) == g.identity();
                    central += cond;
                    bad += cond != comm;
                  }
                  c.set("samples", samples).set("centralizing", central);
                  return bad;
                });
  }
  if (m >= 2) {
    timed_check(rep, "centralizer.probe_matrix",
                "for the probe P_ab = [a=s][b=1] - [a=m][b=m+1-s], entry (r,1) of UP + P conj(U)^F + UP conj(U)^F "
                "is U_rs for r < m and U_ms - conj(U_ms) for r = m",
                [&](Check& c) {
                  std::uint64_t bad = 0;
                  for (std::size_t s = 1; s < m; ++s) {
                    Mat probe(m);
                    probe(s - 1, 0) = Field::one();
                    probe(m - 1, m - s) = f.neg(Field::one());
                    bad += !is_conj_skew_persymmetric(f, probe);
                    for (std::uint64_t t = 0; t < samples; ++t) {
                      const Mat u = rng.strictly_lower(f, m);
                      const Mat uf = flip_transpose(conj(f, u));
                      const Mat e =
                          add(f, add(f, mul(f, u, probe), mul(f, probe, uf)), mul(f, mul(f, u, probe), uf));
                      for (std::size_t r = 1; r < m; ++r) bad += !(e(r - 1, 0) == u(r - 1, s - 1));
                      bad += !(e(m - 1, 0) == f.sub(u(m - 1, s - 1), f.conj(u(m - 1, s - 1))));
                    }
                  }
                  c.set("samples_per_probe", samples).set("probes", m - 1);
                  return bad;
                });
  }
  const Subgroup a = g.distinguished_subgroup({SubgroupKind::A});
  const Subgroup target = g.odd() ? g.distinguished_subgroup({SubgroupKind::A0}) : a;
  timed_check(rep, "centralizer.of_A", g.odd() ? "C_S(A) = A0" : "C_S(A) = A", [&](Check& c) -> std::uint64_t {
    const Subgroup cs = centralizer(g, a);
    c.set("mode", "exhaustive").set("scanned", g.order()).set("order", cs.size()).set("expected_order",
                                                                                        target.size());
    return cs == target ? 0 : 1;
  });
}

/// Q-series built from A and the N~_ij, and the commutator vanishing that
/// makes them Q-series.
inline void qseries_suite(Report& rep, const SylowGroup& g, Rng& rng, std::uint64_t samples) {
  using detail::timed_check;
  const std::size_t m = g.m();
  const std::uint32_t t = g.prime() - 1;
  if (m < 2) {
    rep.note("qseries.skipped", "N~_ij needs m >= 2").set("m", static_cast<std::uint64_t>(m));
    return;
  }
  const Subgroup a = g.distinguished_subgroup({SubgroupKind::A});
  const CommutatorRoute route =
      a.size() * g.order() <= kMembersRouteLimit ? CommutatorRoute::members : CommutatorRoute::generators;
  std::vector<QSeries> chains;
  for (std::uint32_t i = 2; i <= m; ++i)
    for (std::uint32_t j = 1; j < i; ++j) {
      const Subgroup n = g.distinguished_subgroup(SubgroupTag::ntilde(i, j));
      const std::string ij = std::to_string(i) + std::to_string(j);
      timed_check(rep, "qseries.triple_commutator_N" + ij,
                  g.odd() ? "[Omega_1(C_S(A)), N~_ij; 3] = 1" : "[A, N~_ij; 3] = 1", [&](Check& c) -> std::uint64_t {
                    const Subgroup om = omega1(g, centralizer(g, a));
                    const Subgroup k = iterated_commutator(g, om, n, 3, route);
                    c.set("route", route == CommutatorRoute::members ? "members" : "generators");
                    c.set("order_Omega1_C_S_A", om.size()).set("order_N", n.size()).set("commutator_order", k.size());
                    return k.is_trivial() ? 0 : 1;
                  });
      timed_check(rep, "qseries.triple_commutator_elementwise_N" + ij,
                  "[[[x, y], z], w] = 1 for x in " + std::string(g.odd() ? "A0" : "A") + " and y, z, w in N~_ij",
                  [&](Check& c) {
                    std::uint64_t bad = 0;
                    for (std::uint64_t s = 0; s < samples; ++s) {
                      const Mat xe = g.element(g.random_index(rng, g.odd() ? SubgroupTag{SubgroupKind::A0}
                                                                            : SubgroupTag{SubgroupKind::A}));
                      const Mat ys[] = {g.element(g.random_index(rng, SubgroupTag::ntilde(i, j))),
                                        g.element(g.random_index(rng, SubgroupTag::ntilde(i, j))),
                                        g.element(g.random_index(rng, SubgroupTag::ntilde(i, j)))};
                      bad += !(nested_commutator(g, xe, std::span<const Mat>(ys)) == g.identity());
                    }
                    c.set("mode", "sampled").set("samples", samples);
                    return bad;
                  });
      timed_check(rep, "qseries.chain_A_N" + ij, "1 <= A <= N~_ij is a Q-series", [&](Check& c) -> std::uint64_t {
        const QSeries q = verify_qseries(g, {trivial_subgroup(g), a, n}, route);
        std::string sizes, comms;
        for (const auto& step : q.steps) {
          sizes += (sizes.empty() ? "" : ",") + std::to_string(step.q.size());
          comms += (comms.empty() ? "" : ",") + std::to_string(step.commutator.size());
        }
        c.set("depth", static_cast<std::uint64_t>(t)).set("chain_orders", "1," + sizes).set("commutator_orders", comms);
        const bool ok = q.pass();
        if (ok) chains.push_back(q);
        return ok ? 0 : 1;
      });
    }
  if (chains.empty()) return;
  timed_check(rep, "qseries.concatenation_ntilde",
              "joining two of the chains 1 <= A <= N~_ij gives a passing Q-series ending at the product",
              [&](Check& c) {
                std::uint64_t bad = 0, pairs = 0;
                for (const auto& c1 : chains)
                  for (const auto& c2 : chains) {
                    const QSeries cc = concat_qseries(g, c1, c2, route);
                    bad += !(cc.pass() && cc.top() == product_subgroup(g, c1.top(), c2.top()));
                    ++pairs;
                  }
                c.set("pairs", pairs);
                return bad;
              });
}

/// Concatenation of passing Q-series on a product of two small groups,
/// standing in for unitary instances that are out of budget.
inline void concatenation_check(Report& rep, const TableGroup& h, const std::string& label) {
  detail::timed_check(rep, "qseries.concatenation", "joining two passing Q-series gives a passing Q-series ending at KL",
                      [&](Check& c) {
                        std::vector<QSeries> chains;
                        std::vector<std::vector<Index>> seen;
                        for (Index i = 1; i < h.order(); ++i) {
                          const Index seed[] = {i};
                          const Subgroup n = normal_closure(h, seed);
                          if (std::find(seen.begin(), seen.end(), n.members()) != seen.end()) continue;
                          seen.push_back(n.members());
                          QSeries q = verify_qseries(h, {trivial_subgroup(h), n});
                          if (q.pass()) chains.push_back(std::move(q));
                        }
                        chains.push_back(compute_oliver(h).certificate);
                        std::uint64_t bad = 0, pairs = 0;
                        for (const auto& c1 : chains)
                          for (const auto& c2 : chains) {
                            const QSeries cc = concat_qseries(h, c1, c2);
                            bad += !(cc.pass() && cc.top() == product_subgroup(h, c1.top(), c2.top()));
                            ++pairs;
                          }
                        c.set("group", label).set("chains", static_cast<std::uint64_t>(chains.size()));
                        c.set("pairs", pairs);
                        return bad;
                      });
}

/// The Oliver subgroup with certificate, maximality scans and J.
template <FiniteGroup G>
void conjecture_checks(Report& rep, const G& g, std::uint64_t seed, bool expect_full,
                       const ThompsonLimits& limits = {}) {
  using detail::timed_check;
  OliverResult ox;
  timed_check(rep, "oliver.subgroup", "X(S) is the top of a verified Q-series and no element extends it",
              [&](Check& c) -> std::uint64_t {
                ox = compute_oliver(g);
                std::string sizes;
                for (const auto& q : ox.certificate.chain)
                  sizes += (sizes.empty() ? "" : ",") + std::to_string(q.size());
                c.set("order_S", g.order()).set("order_X", ox.subgroup.size()).set("chain_orders", sizes);
                c.set("rejected_final_round", static_cast<std::uint64_t>(ox.maximality_evidence.size()));
                c.set("candidates_tested", ox.candidates_tested);
                if (expect_full) c.set("expected", "X(S) = S");
                const bool ok = ox.certificate.pass() && (!expect_full || ox.subgroup.size() == g.order());
                return ok ? 0 : 1;
              });
  timed_check(rep, "oliver.shuffled_order", "a shuffled candidate order gives the same X(S)",
              [&](Check& c) -> std::uint64_t {
                OliverOptions opt;
                opt.shuffle_seed = seed;
                const Subgroup y = compute_oliver(g, opt).subgroup;
                c.set("shuffle_seed", seed);
                return y == ox.subgroup ? 0 : 1;
              });
  timed_check(rep, "oliver.centralizer_is_center", "C_S(X) = Z(X)", [&](Check& c) -> std::uint64_t {
    const Subgroup z = center(g, ox.subgroup);
    const Subgroup cs = centralizer(g, ox.subgroup);
    c.set("order_center", z.size()).set("order_centralizer", cs.size());
    return cs == z ? 0 : 1;
  });
  timed_check(rep, "oliver.maximality_scan",
              "every normal closure Q with [Omega_1(Z(X)), Q; p-1] = 1 lies in X", [&](Check& c) {
                const LemmaReport l = lemma_checks(g, ox.subgroup);
                c.set("closures_scanned", l.closures_scanned).set("qualifying", l.qualifying);
                return static_cast<std::uint64_t>(l.violations.size());
              });
  timed_check(rep, "conjecture.J_in_X", "J(S) <= X(S)", [&](Check& c) -> std::uint64_t {
    try {
      const ThompsonResult j = thompson_subgroup(g, limits);
      c.set("p_rank", j.report.rank).set("maximal_elementary_abelian", static_cast<std::uint64_t>(j.report.maximal_subgroups.size()));
      c.set("order_J", j.j.size()).set("order_X", ox.subgroup.size()).set("J_normal", is_normal(g, j.j));
      const bool holds = j.j.is_subgroup_of(ox.subgroup);
      c.set("holds", holds);
      return holds ? 0 : 1;
    } catch (const budget_exceeded& e) {
      // J is a subgroup of S, so X(S) = S settles the inclusion without it.
      c.set("order_J", "not computed").set("reason", e.what()).set("order_X", ox.subgroup.size());
      c.set("argument", "X(S) = S contains every subgroup");
      const bool holds = ox.subgroup.size() == g.order();
      c.set("holds", holds);
      return holds ? 0 : 1;
    }
  });
}

/// J of a wreath layer against the base copy of J one layer down.
inline void wreath_thompson_suite(Report& rep, const WreathSpec& spec, std::uint64_t budget) {
  detail::Stopwatch sw;
  const WreathThompsonReport r = verify_wreath_thompson(spec, budget);
  const bool definite = r.status == CheckStatus::verified || r.status == CheckStatus::failed;
  Check& c = definite ? rep.add("wreath.thompson_subgroup",
                                "J(P wr C_p) is elementary abelian and equals the copy of J(P)^p in the base",
                                r.status == CheckStatus::verified)
                      : rep.note("wreath.thompson_subgroup",
                                 "J(P wr C_p) is elementary abelian and equals the copy of J(P)^p in the base");
  c.set("spec", spec.label()).set("status", to_string(r.status));
  if (!r.reason.empty()) c.set("reason", r.reason);
  if (r.lower_j) {
    c.set("order_P", r.lower_order).set("order_J_P", r.lower_j).set("rank_P", r.lower_rank);
    c.set("J_P_elementary", r.lower_elementary).set("predicted_order_J", r.predicted);
  }
  if (r.j) {
    c.set("order", r.order).set("order_J", r.j).set("rank", r.rank).set("J_elementary", r.elementary);
    c.set("equals_base_copy", r.equals_base_copy);
  }
  c.seconds = sw.seconds();
}

}  // namespace unisylow
