#pragma once

// Command pipeline behind the unisylow tool: construct and cache groups,
// run verification suites, compute J and X(S), and check the conjecture.
// Argument parsing lives in the tool itself; run() takes a parsed config.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "cache.hpp"
#include "errors.hpp"
#include "oliver.hpp"
#include "report.hpp"
#include "small_groups.hpp"
#include "suites.hpp"
#include "thompson.hpp"
#include "unitary.hpp"
#include "wreath.hpp"

namespace unisylow {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitIo = 4,
  kExitCacheMismatch = 5,
};

inline constexpr const char* kCacheDirEnv = "UNISYLOW_CACHE_DIR";

struct RunConfig {
  std::string command;  // construct | verify | compute | conjecture
  std::uint32_t p = 0;
  std::optional<std::uint32_t> q, k, n, m, r, height;
  std::string suite;  // verify only
  std::uint64_t budget = kDefaultElementBudget;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  /// Report path; for construct, the cache file path.
  std::string out;
  std::string cache_dir;
  bool timing = false;
};

struct RunResult {
  Report report;
  int exit_code = kExitPass;
  /// Set when the run stopped on an error rather than on check results.
  std::string error;
};

namespace detail {

struct FieldParams {
  std::uint32_t k = 0;
  std::uint32_t q = 0;
};

inline FieldParams resolve_field(const RunConfig& c) {
  if (!is_prime(c.p)) throw invalid_parameter("--p must be a prime, got " + std::to_string(c.p));
  if (!c.q && !c.k) throw invalid_parameter("one of --q or --k is required");
  FieldParams f;
  if (c.k) {
    if (*c.k == 0) throw invalid_parameter("--k must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < *c.k; ++i) {
      q *= c.p;
      if (q > UINT32_MAX) throw invalid_parameter("q = p^k is too large");
    }
    f = {*c.k, static_cast<std::uint32_t>(q)};
    if (c.q && *c.q != f.q) throw invalid_parameter("--q and --k disagree");
    return f;
  }
  std::uint64_t pk = 1;
  while (pk < *c.q) {
    pk *= c.p;
    ++f.k;
  }
  if (*c.q < c.p || pk != *c.q)
    throw invalid_parameter("q = " + std::to_string(*c.q) + " is not a power of p = " + std::to_string(c.p));
  f.q = *c.q;
  return f;
}

inline bool wreath_mode(const RunConfig& c) {
  const bool w = c.r || c.height;
  if (w && (c.q || c.k || c.n || c.m)) throw invalid_parameter("give either (q or k, n) or (r, height), not both");
  if (w && (!c.r || !c.height)) throw invalid_parameter("wreath parameters need both --r and --height");
  return w;
}

inline WreathSpec wreath_spec(const RunConfig& c) {
  if (c.p < 5) throw invalid_parameter("wreath towers require p >= 5, got p = " + std::to_string(c.p));
  return WreathSpec{c.p, *c.r, *c.height};
}

inline UnitaryParams unitary_params(const RunConfig& c) {
  const FieldParams f = resolve_field(c);
  if (!c.n) throw invalid_parameter("--n is required");
  return UnitaryParams::make(c.p, f.q, *c.n);
}

inline std::string cache_name(const UnitaryParams& u) {
  return "sylow_p" + std::to_string(u.p) + "_k" + std::to_string(u.k) + "_n" + std::to_string(u.n) + ".cache";
}

inline std::string cache_name(const WreathSpec& w) {
  return "wreath_p" + std::to_string(w.p) + "_r" + std::to_string(w.r) + "_h" + std::to_string(w.height) +
         ".cache";
}

inline std::string effective_cache_dir(const RunConfig& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return {};
}

enum class CacheOutcome { written, hit };

template <class G>
CacheOutcome ensure_cache(const std::filesystem::path& path, const G& g, std::uint64_t& bytes) {
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    const CacheComparison cmp = compare_cache(path, g);
    if (!cmp.identical) throw cache_mismatch(path.string() + ": element section differs from the constructed group");
    bytes = cmp.bytes;
    return CacheOutcome::hit;
  }
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw io_error("cannot create cache directory " + path.parent_path().string());
  }
  bytes = write_cache(path, g);
  return CacheOutcome::written;
}

/// Reuses or writes the cache for g when a cache directory is configured.
/// The record is the same whether the file was written or matched, so
/// reruns give identical reports.
template <class G>
void sync_cache(Report& rep, const RunConfig& c, const G& g, const std::string& name) {
  const std::string dir = effective_cache_dir(c);
  if (dir.empty()) return;
  std::uint64_t bytes = 0;
  ensure_cache(std::filesystem::path(dir) / name, g, bytes);
  rep.add("cache.consistent", "the cached element list equals the constructed group byte for byte", true)
      .set("file", name)
      .set("bytes", bytes);
}

template <FiniteGroup G>
void compute_invariants(Report& rep, const G& g) {
  using detail::timed_check;
  timed_check(rep, "compute.thompson_subgroup", "J(S) is generated by the elementary abelian subgroups of maximal rank",
              [&](Check& c) -> std::uint64_t {
                const ThompsonResult j = thompson_subgroup(g);
                c.set("order_S", g.order()).set("p_rank", j.report.rank);
                c.set("maximal_elementary_abelian", static_cast<std::uint64_t>(j.report.maximal_subgroups.size()));
                c.set("order_p_elements", j.report.order_p_elements).set("cyclic_subgroups", j.report.cyclic_subgroups);
                const bool normal = is_normal(g, j.j), elementary = is_elementary_abelian(g, j.j);
                c.set("order_J", j.j.size()).set("J_normal", normal).set("J_elementary", elementary);
                return normal ? 0 : 1;
              });
  timed_check(rep, "compute.oliver_subgroup", "X(S) is the top of a verified Q-series and no element extends it",
              [&](Check& c) -> std::uint64_t {
                const OliverResult ox = compute_oliver(g);
                std::string sizes;
                for (const auto& q : ox.certificate.chain)
                  sizes += (sizes.empty() ? "" : ",") + std::to_string(q.size());
                c.set("order_S", g.order()).set("order_X", ox.subgroup.size()).set("chain_orders", sizes);
                c.set("rejected_final_round", static_cast<std::uint64_t>(ox.maximality_evidence.size()));
                return ox.certificate.pass() ? 0 : 1;
              });
}

inline void record_config(Report& rep, const RunConfig& c) {
  rep.config("command", c.command);
  if (!c.suite.empty()) rep.config("suite", c.suite);
  rep.config("p", std::to_string(c.p));
  if (c.q) rep.config("q", std::to_string(*c.q));
  if (c.k) rep.config("k", std::to_string(*c.k));
  if (c.n) rep.config("n", std::to_string(*c.n));
  if (c.m) rep.config("m", std::to_string(*c.m));
  if (c.r) rep.config("r", std::to_string(*c.r));
  if (c.height) rep.config("height", std::to_string(*c.height));
  rep.config("budget", std::to_string(c.budget));
  rep.config("seed", std::to_string(c.seed));
  rep.config("samples", std::to_string(c.samples));
}

inline void run_verify(Report& rep, const RunConfig& c, Rng& rng) {
  const std::string& s = c.suite;
  if (s == "prop31") {
    if (wreath_mode(c)) throw invalid_parameter("suite prop31 takes (p, q or k, m)");
    const FieldParams fp = resolve_field(c);
    if (!c.m || *c.m == 0 || *c.m > kMaxDim) throw invalid_parameter("suite prop31 needs --m between 1 and 8");
    const FieldPtr f = Field::create(c.p, fp.k);
    flip_transpose_suite(rep, *f, *c.m, rng, c.samples);
    return;
  }
  if (s == "thm26") {
    if (!wreath_mode(c)) throw invalid_parameter("suite thm26 takes (p, r, height)");
    wreath_thompson_suite(rep, wreath_spec(c), c.budget);
    return;
  }
  if (wreath_mode(c)) throw invalid_parameter("suite " + s + " takes (p, q or k, n)");
  if (s == "sylow" && c.p < 5) {
    // Only the full unitary group count makes sense below p = 5.
    const FieldParams fp = resolve_field(c);
    if (!c.n || *c.n < 1 || *c.n > kMaxDim) throw invalid_parameter("--n must be between 1 and 8");
    const FieldPtr f = Field::create(c.p, fp.k);
    rep.note("sylow.small_characteristic", "the Sylow construction needs p >= 5; only |U_n(F_q)| is checked")
        .set("p", c.p);
    full_unitary_order_check(rep, *f, *c.n, c.budget);
    return;
  }
  if (s != "sylow" && s != "formulas" && s != "centralizer" && s != "qseries")
    throw invalid_parameter("unknown suite '" + s + "'");
  const SylowGroup g(unitary_params(c), c.budget);
  sync_cache(rep, c, g, cache_name(g.params()));
  if (s == "sylow") sylow_suite(rep, g, rng, c.samples, c.budget);
  if (s == "formulas") formulas_suite(rep, g, rng, c.samples);
  if (s == "centralizer") centralizer_suite(rep, g, rng, c.samples);
  if (s == "qseries") qseries_suite(rep, g, rng, c.samples);
}

inline void run_construct(Report& rep, const RunConfig& c) {
  auto go = [&](const auto& g, const std::string& name) {
    std::filesystem::path path;
    if (!c.out.empty()) {
      path = c.out;
    } else {
      const std::string dir = effective_cache_dir(c);
      path = std::filesystem::path(dir.empty() ? "." : dir) / name;
    }
    rep.add("construct.group", "the group is enumerated with a canonical element order", true)
        .set("order", g.order())
        .set("generators", static_cast<std::uint64_t>(g.generators().size()));
    std::uint64_t bytes = 0;
    const CacheOutcome o = ensure_cache(path, g, bytes);
    rep.add("construct.cache", "the cache file holds the canonical encoding of every element", true)
        .set("file", path.string())
        .set("cache", o == CacheOutcome::hit ? "hit" : "written")
        .set("bytes", bytes)
        .set("identical", true);
  };
  if (wreath_mode(c)) {
    const WreathSpec spec = wreath_spec(c);
    go(WreathGroup(spec, c.budget), cache_name(spec));
  } else {
    const SylowGroup g(unitary_params(c), c.budget);
    go(g, cache_name(g.params()));
  }
}

inline void run_compute(Report& rep, const RunConfig& c) {
  if (wreath_mode(c)) {
    const WreathSpec spec = wreath_spec(c);
    const WreathGroup w(spec, c.budget);
    sync_cache(rep, c, w, cache_name(spec));
    compute_invariants(rep, w);
  } else {
    const SylowGroup g(unitary_params(c), c.budget);
    sync_cache(rep, c, g, cache_name(g.params()));
    compute_invariants(rep, g);
  }
}

inline void run_conjecture(Report& rep, const RunConfig& c) {
  if (!wreath_mode(c)) {
    const SylowGroup g(unitary_params(c), c.budget);
    sync_cache(rep, c, g, cache_name(g.params()));
    conjecture_checks(rep, g, c.seed, true);
    return;
  }
  const WreathSpec spec = wreath_spec(c);
  const WreathGroup w(spec, c.budget);
  sync_cache(rep, c, w, cache_name(spec));
  conjecture_checks(rep, w, c.seed, false);
  timed_check(rep, "wreath.thompson_structure", "J is elementary abelian and normal", [&](Check& ch) -> std::uint64_t {
    const ThompsonResult j = thompson_subgroup(w);
    const bool elementary = is_elementary_abelian(w, j.j), normal = is_normal(w, j.j);
    ch.set("order_J", j.j.size()).set("J_elementary", elementary).set("J_normal", normal);
    const QSeries one = verify_qseries(w, {trivial_subgroup(w), j.j}, CommutatorRoute::generators);
    ch.set("one_step_chain_to_J_is_qseries", one.pass());
    return elementary && normal ? 0 : 1;
  });
}

}  // namespace detail

/// Executes one command. Errors become exit codes and a failing run.error
/// record after whatever was gathered before the error.
inline RunResult run(const RunConfig& config) {
  RunResult res;
  Report& rep = res.report;
  auto stop = [&](int code, const std::string& message) {
    res.error = message;
    res.exit_code = code;
    rep.add("run.error", "the command ran to completion", false).set("exit_code", code).set("message", message);
  };
  try {
    detail::record_config(rep, config);
    Rng rng(config.seed);
    if (config.command == "construct") {
      detail::run_construct(rep, config);
    } else if (config.command == "verify") {
      if (config.suite.empty()) throw invalid_parameter("verify needs --suite");
      detail::run_verify(rep, config, rng);
    } else if (config.command == "compute") {
      detail::run_compute(rep, config);
    } else if (config.command == "conjecture") {
      detail::run_conjecture(rep, config);
    } else {
      throw invalid_parameter("unknown command '" + config.command + "'");
    }
    res.exit_code = rep.pass() ? kExitPass : kExitCheckFailed;
  } catch (const invalid_parameter& e) {
    stop(kExitUsage, e.what());
  } catch (const budget_exceeded& e) {
    stop(kExitBudget, e.what());
  } catch (const cache_mismatch& e) {
    stop(kExitCacheMismatch, e.what());
  } catch (const io_error& e) {
    stop(kExitIo, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    stop(kExitIo, e.what());
  }
  return res;
}

/// Writes the report to path, or returns false if it cannot be written.
inline bool write_report(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out.flush());
}

}  // namespace unisylow
