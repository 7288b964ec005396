// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is 0 only if every criterion passes within its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "unisylow/cli.hpp"

using namespace unisylow;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
};

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks())
    if (c.name == name) return &c;
  return nullptr;
}

std::string field(const Check* c, const std::string& key) {
  if (!c) return {};
  for (const auto& [k, v] : c->fields)
    if (k == key) return v;
  return {};
}

RunConfig unitary(const std::string& command, std::uint32_t q, std::uint32_t n, std::string suite = {}) {
  RunConfig c;
  c.command = command;
  c.p = q == 25 ? 5 : q;
  c.q = q;
  c.n = n;
  c.suite = std::move(suite);
  c.seed = 7;
  return c;
}

std::string label(const RunConfig& c) {
  std::string s = c.command + (c.suite.empty() ? "" : " " + c.suite) + " p=" + std::to_string(c.p);
  if (c.q) s += " q=" + std::to_string(*c.q);
  if (c.n) s += " n=" + std::to_string(*c.n);
  if (c.m) s += " m=" + std::to_string(*c.m);
  if (c.r) s += " r=" + std::to_string(*c.r) + " height=" + std::to_string(*c.height);
  return s;
}

/// Every verify run with its first rendered report, for the rerun check.
std::vector<std::pair<RunConfig, std::string>> suite_runs;

/// Runs a config and requires every record to pass.
RunResult run_passing(Outcome& o, const RunConfig& c) {
  RunResult r = run(c);
  if (c.command == "verify") suite_runs.emplace_back(c, r.report.render());
  o.require(r.exit_code == kExitPass, label(c) + " exited with " + std::to_string(r.exit_code) +
                                          (r.error.empty() ? "" : " (" + r.error + ")"));
  return r;
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.require(secs < limit_seconds, "runtime over the limit");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s / limit %.0f s", secs, limit_seconds);
  std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << buf << "]\n";
  for (const auto& n : o.notes) std::cout << "    " << n << "\n";
  std::cout.flush();
  failures += !o.pass;
}

std::vector<RunConfig> flip_transpose_configs() {
  std::vector<RunConfig> out;
  for (std::uint32_t q : {5u, 25u})
    for (std::uint32_t m = 1; m <= (q == 5 ? 4u : 2u); ++m) {
      RunConfig c;
      c.command = "verify";
      c.suite = "prop31";
      c.p = 5;
      c.q = q;
      c.m = m;
      c.seed = 7;
      out.push_back(c);
    }
  return out;
}

struct SylowCase {
  std::uint32_t q, n;
  std::uint64_t order;
};

// |S| = q^(n(n-1)/2)
const SylowCase kSylowCases[] = {{5, 2, 5}, {5, 3, 125}, {5, 4, 15625}, {25, 2, 25}, {25, 3, 15625}};

}  // namespace

int main() {
  criterion(1, "flip-transpose identities on 1000 samples for (q,m) in {(5,1..4),(25,1..2)}", 10, [&](Outcome& o) {
    for (const auto& c : flip_transpose_configs()) {
      const RunResult r = run_passing(o, c);
      o.require(r.report.checks().size() == 5, label(c) + ": expected 5 identity records");
      o.require(field(&r.report.checks()[1], "samples") == "2000", label(c) + ": sample count");
    }
  });

  criterion(2, "Sylow orders 5, 125, 15625, 25, 15625 with exhaustive closure", 60, [&](Outcome& o) {
    for (const auto& sc : kSylowCases) {
      const RunConfig c = unitary("verify", sc.q, sc.n, "sylow");
      const RunResult r = run_passing(o, c);
      o.require(field(find_check(r.report, "sylow.order"), "order") == std::to_string(sc.order),
                label(c) + ": order");
      o.require(field(find_check(r.report, "sylow.closure"), "mode") == "exhaustive", label(c) + ": closure mode");
    }
  });

  criterion(3, "|U_2(F_2)| = 18 and |U_2(F_3)| = 96 by exhaustive count", 10, [&](Outcome& o) {
    for (auto [q, expected] : {std::pair<std::uint32_t, const char*>{2, "18"}, {3, "96"}}) {
      const RunConfig c = unitary("verify", q, 2, "sylow");
      const RunResult r = run_passing(o, c);
      const Check* k = find_check(r.report, "unitary.q" + std::to_string(q) + ".n2.full_order");
      o.require(field(k, "counted") == expected, label(c) + ": count");
    }
  });

  criterion(4, "closed-form product, inverse and commutator formulas on 1000 samples", 10, [&](Outcome& o) {
    for (const auto& sc : kSylowCases) {
      const RunConfig c = unitary("verify", sc.q, sc.n, "formulas");
      run_passing(o, c);
    }
    const RunConfig c = unitary("verify", 5, 5, "formulas");
    const RunResult r = run_passing(o, c);
    o.require(find_check(r.report, "formulas.commutator_odd_conjugation") != nullptr, "odd conjugation formula ran");
  });

  criterion(5, "C_S(A) = A at (5,5,4) and C_S(A) = A0 at (5,5,5), exhaustive", 600, [&](Outcome& o) {
    for (auto [n, limit] : {std::pair<std::uint32_t, double>{4, 10}, {5, 600}}) {
      const RunConfig c = unitary("verify", 5, n, "centralizer");
      const RunResult r = run_passing(o, c);
      const Check* k = find_check(r.report, "centralizer.of_A");
      o.require(k && k->pass && field(k, "mode") == "exhaustive", label(c) + ": centralizer record");
      o.require(k && k->seconds < limit, label(c) + ": centralizer scan over its limit");
    }
  });

  std::vector<RunResult> qseries;
  criterion(6, "[A, N~21; 3] = 1 at (5,5,4) and [Omega_1(C_S(A)), N~21; 3] = 1 at (5,5,5)", 300, [&](Outcome& o) {
    for (std::uint32_t n : {4u, 5u}) {
      const RunConfig c = unitary("verify", 5, n, "qseries");
      qseries.push_back(run_passing(o, c));
      const Check* k = find_check(qseries.back().report, "qseries.triple_commutator_N21");
      o.require(k && k->pass && field(k, "commutator_order") == "1", label(c) + ": triple commutator");
    }
  });

  criterion(7, "1 <= A <= N~21 is a Q-series at (5,5,4) and (5,5,5); concatenation on every corpus group", 600,
            [&](Outcome& o) {
              o.require(qseries.size() == 2, "qseries runs from criterion 6");
              for (const auto& r : qseries) {
                const Check* k = find_check(r.report, "qseries.chain_A_N21");
                o.require(k && k->pass && field(k, "depth") == "4", "chain 1 <= A <= N~21");
              }
              Report rep;
              for (const auto& g : corpus_groups())
                if (g.order() <= 625) concatenation_check(rep, g, g.name());
              for (const auto& c : rep.checks()) o.require(c.pass, "concatenation on " + field(&c, "group"));
            });

  std::vector<RunResult> conj;
  criterion(8, "X(S) = S at (5,5,2..4); greedy matches brute force on the corpus; lemma scans pass", 600,
            [&](Outcome& o) {
              for (std::uint32_t n : {2u, 3u, 4u}) {
                const RunConfig c = unitary("conjecture", 5, n);
                conj.push_back(run_passing(o, c));
                const Check* k = find_check(conj.back().report, "oliver.subgroup");
                o.require(field(k, "order_X") == field(k, "order_S"), label(c) + ": X(S) = S");
                for (const char* name : {"oliver.centralizer_is_center", "oliver.maximality_scan"}) {
                  const Check* l = find_check(conj.back().report, name);
                  o.require(l && l->pass, label(c) + ": " + name);
                }
              }
              for (const auto& g : corpus_groups()) {
                const OliverResult greedy = compute_oliver(g);
                const BruteforceResult brute = oliver_bruteforce(g);
                o.require(greedy.subgroup == brute.subgroup && brute.unique_maximum, g.name() + ": oracle agreement");
                o.require(greedy.certificate.pass(), g.name() + ": certificate");
                const LemmaReport l = lemma_checks(g, greedy.subgroup);
                o.require(l.pass(), g.name() + ": lemma scans");
              }
            });

  criterion(9, "J(S) <= X(S) on every instance and on C5 wr C5, where J is the elementary abelian base", 300,
            [&](Outcome& o) {
              for (const RunConfig& c : {unitary("conjecture", 5, 5), unitary("conjecture", 25, 2),
                                         unitary("conjecture", 25, 3)})
                conj.push_back(run_passing(o, c));
              for (const auto& r : conj) {
                const Check* k = find_check(r.report, "conjecture.J_in_X");
                o.require(field(k, "holds") == "true", "verdict recorded as holding");
              }
              RunConfig w;
              w.command = "conjecture";
              w.p = 5;
              w.r = 1;
              w.height = 1;
              w.seed = 7;
              const RunResult wr = run_passing(o, w);
              o.require(field(find_check(wr.report, "conjecture.J_in_X"), "holds") == "true", "wreath verdict");
              const Check* s = find_check(wr.report, "wreath.thompson_structure");
              o.require(field(s, "order_J") == "3125" && field(s, "J_elementary") == "true", "J(C5 wr C5) structure");
              w.command = "verify";
              w.suite = "thm26";
              const RunResult t = run_passing(o, w);
              const Check* j = find_check(t.report, "wreath.thompson_subgroup");
              o.require(field(j, "status") == "verified" && field(j, "order_J") == "3125" &&
                            field(j, "equals_base_copy") == "true",
                        "J(C5 wr C5) equals the base C5^5");
            });

  criterion(10, "suite reruns are byte-identical; shuffled candidate orders agree on the corpus", 900,
            [&](Outcome& o) {
              for (const auto& [c, first] : suite_runs)
                o.require(run(c).report.render() == first, label(c) + ": reports differ");
              o.require(suite_runs.size() >= 20, "every suite run was recorded");
              for (const auto& g : corpus_groups()) {
                const Subgroup x = compute_oliver(g).subgroup;
                for (std::uint64_t seed : {11u, 12u, 13u}) {
                  OliverOptions opt;
                  opt.shuffle_seed = seed;
                  o.require(compute_oliver(g, opt).subgroup == x, g.name() + ": shuffled order disagrees");
                }
              }
            });

  std::cout << (failures ? "acceptance: FAIL" : "acceptance: PASS") << " (" << failures << " failing)\n";
  return failures ? 1 : 0;
}
