#pragma once

// Iterated wreath products C_{p^r} wr C_p wr ... wr C_p.
//
// W_0 = C_{p^r} and W_h = W_{h-1}^p x| C_p, with the top C_p cyclically
// shifting the p base coordinates. An element of W_h is stored flat as p
// blocks of W_{h-1} digits followed by one top digit; at height 0 it is a
// single residue mod p^r. The element index reads the flat digits as a
// mixed-radix number, least significant first, so the top digit of the
// outermost layer is the most significant and the base subgroup is exactly
// the index range [0, |W|/p).

#include <array>
#include <optional>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "group.hpp"
#include "oliver.hpp"
#include "thompson.hpp"

namespace unisylow {

inline constexpr std::size_t kMaxWreathDigits = 32;

struct WreathElem {
  std::array<std::uint32_t, kMaxWreathDigits> d{};
  friend bool operator==(const WreathElem&, const WreathElem&) = default;
};

struct WreathSpec {
  std::uint32_t p = 5;
  std::uint32_t r = 1;
  std::uint32_t height = 0;

  /// p^(r p^h) * p^((p^h - 1)/(p - 1)), or 0 when it exceeds 64 bits.
  std::uint64_t order() const {
    long double exponent = 0;
    std::uint64_t ph = 1;
    for (std::uint32_t i = 0; i < height; ++i) ph *= p;
    exponent = static_cast<long double>(r) * ph + (ph - 1) / (p - 1);
    if (exponent > 63) return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(exponent); ++i) {
      if (out > UINT64_MAX / p) return 0;
      out *= p;
    }
    return out;
  }

  std::string label() const {
    return "p=" + std::to_string(p) + " r=" + std::to_string(r) + " height=" + std::to_string(height);
  }
};

class WreathGroup {
 public:
  using element_type = WreathElem;

  explicit WreathGroup(const WreathSpec& spec, std::uint64_t budget = kDefaultElementBudget) : spec_(spec) {
    if (!is_prime(spec.p)) throw invalid_parameter("p = " + std::to_string(spec.p) + " is not prime");
    if (spec.r == 0) throw invalid_parameter("bottom cyclic group must be nontrivial (r >= 1)");
    const std::uint64_t order = spec.order();
    if (order == 0) throw budget_exceeded("wreath product " + spec.label() + " is out of range", UINT64_MAX);
    if (order > budget || order > UINT32_MAX)
      throw budget_exceeded("wreath product " + spec.label() + " has " + std::to_string(order) + " elements", order);
    order_ = order;
    bottom_ = 1;
    for (std::uint32_t i = 0; i < spec.r; ++i) bottom_ *= spec.p;
    sizes_.push_back(1);
    for (std::uint32_t h = 1; h <= spec.height; ++h) sizes_.push_back(spec.p * sizes_.back() + 1);
    if (sizes_.back() > kMaxWreathDigits) throw invalid_parameter("wreath tower has too many digits");
    radix_.assign(sizes_.back(), 0);
    fill_radix(spec.height, 0);
    std::uint64_t w = 1;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      weight_.push_back(w);
      w *= radix_[i];
    }
    build_generators(spec.height, 0);
  }

  std::uint64_t order() const { return order_; }
  std::uint32_t prime() const { return spec_.p; }
  WreathElem identity() const { return {}; }

  WreathElem element(Index idx) const {
    WreathElem e;
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      e.d[i] = static_cast<std::uint32_t>(r % radix_[i]);
      r /= radix_[i];
    }
    return e;
  }

  Index index_of(const WreathElem& e) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i) idx += e.d[i] * weight_[i];
    return static_cast<Index>(idx);
  }

  WreathElem mul(const WreathElem& a, const WreathElem& b) const {
    WreathElem out;
    mul_at(spec_.height, a.d.data(), b.d.data(), out.d.data());
    return out;
  }

  WreathElem inv(const WreathElem& a) const {
    WreathElem out;
    inv_at(spec_.height, a.d.data(), out.d.data());
    return out;
  }

  const std::vector<Index>& generators() const { return generators_; }

  const WreathSpec& spec() const { return spec_; }
  std::size_t digit_count() const { return radix_.size(); }
  std::uint64_t radix(std::size_t i) const { return radix_[i]; }

  /// The base subgroup W_{h-1}^p of the outermost layer (h >= 1).
  Subgroup base_subgroup() const {
    if (spec_.height == 0) throw invalid_parameter("height-0 wreath product has no base subgroup");
    Bitset bits(order_);
    for (std::uint64_t i = 0; i < order_ / spec_.p; ++i) bits.set(i);
    std::vector<Index> witness;
    for (Index g : generators_)
      if (g < order_ / spec_.p) witness.push_back(g);
    // Conjugates of block-0 generators into the other blocks.
    const std::size_t block = sizes_[spec_.height - 1];
    const std::vector<Index> block0 = witness;
    for (std::uint32_t b = 1; b < spec_.p; ++b)
      for (Index g : block0) {
        const WreathElem e = element(g);
        WreathElem moved;
        for (std::size_t i = 0; i < block; ++i) moved.d[b * block + i] = e.d[i];
        witness.push_back(index_of(moved));
      }
    return Subgroup(std::move(bits), std::move(witness));
  }

  /// The top C_p of the outermost layer.
  Subgroup top_subgroup() const {
    if (spec_.height == 0) throw invalid_parameter("height-0 wreath product has no top group");
    Bitset bits(order_);
    const std::uint64_t step = order_ / spec_.p;
    for (std::uint32_t t = 0; t < spec_.p; ++t) bits.set(t * step);
    return Subgroup(std::move(bits), {static_cast<Index>(step)});
  }

  /// Index of the element of the outermost base whose p blocks are the
  /// given elements of W_{h-1} (indices in the height h-1 product).
  Index base_element(const std::vector<Index>& blocks, const WreathGroup& lower) const {
    if (spec_.height == 0 || blocks.size() != spec_.p) throw invalid_parameter("expected p block indices");
    WreathElem e;
    const std::size_t block = sizes_[spec_.height - 1];
    for (std::uint32_t b = 0; b < spec_.p; ++b) {
      const WreathElem x = lower.element(blocks[b]);
      for (std::size_t i = 0; i < block; ++i) e.d[b * block + i] = x.d[i];
    }
    return index_of(e);
  }

  /// Block indices in W_{h-1} of an element of W_h, plus its top digit.
  std::pair<std::vector<Index>, std::uint32_t> split(Index idx, const WreathGroup& lower) const {
    const WreathElem e = element(idx);
    const std::size_t block = sizes_[spec_.height - 1];
    std::vector<Index> out;
    for (std::uint32_t b = 0; b < spec_.p; ++b) {
      WreathElem x;
      for (std::size_t i = 0; i < block; ++i) x.d[i] = e.d[b * block + i];
      out.push_back(lower.index_of(x));
    }
    return {out, e.d[spec_.p * block]};
  }

 private:
  void fill_radix(std::uint32_t h, std::size_t off) {
    if (h == 0) {
      radix_[off] = bottom_;
      return;
    }
    const std::size_t block = sizes_[h - 1];
    for (std::uint32_t b = 0; b < spec_.p; ++b) fill_radix(h - 1, off + b * block);
    radix_[off + spec_.p * block] = spec_.p;
  }

  void build_generators(std::uint32_t h, std::size_t off) {
    if (h == 0) {
      generators_.push_back(static_cast<Index>(weight_[off]));
      return;
    }
    build_generators(h - 1, off);
    generators_.push_back(static_cast<Index>(weight_[off + spec_.p * sizes_[h - 1]]));
  }

  // (b, t)(b', t') = (b * shift_t(b'), t + t'), shift_t(b')_i = b'_{i+t mod p}.
  void mul_at(std::uint32_t h, const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
    if (h == 0) {
      out[0] = static_cast<std::uint32_t>((std::uint64_t{a[0]} + b[0]) % bottom_);
      return;
    }
    const std::size_t block = sizes_[h - 1];
    const std::uint32_t p = spec_.p, t = a[p * block];
    for (std::uint32_t i = 0; i < p; ++i) {
      const std::uint32_t j = (i + t) % p;
      mul_at(h - 1, a + i * block, b + j * block, out + i * block);
    }
    out[p * block] = (t + b[p * block]) % p;
  }

  // (b, t)^-1 = (shift_{-t}(b^-1), -t).
  void inv_at(std::uint32_t h, const std::uint32_t* a, std::uint32_t* out) const {
    if (h == 0) {
      out[0] = static_cast<std::uint32_t>((bottom_ - a[0]) % bottom_);
      return;
    }
    const std::size_t block = sizes_[h - 1];
    const std::uint32_t p = spec_.p, t = a[p * block];
    for (std::uint32_t i = 0; i < p; ++i) {
      const std::uint32_t j = (i + p - t) % p;
      inv_at(h - 1, a + j * block, out + i * block);
    }
    out[p * block] = (p - t) % p;
  }

  WreathSpec spec_;
  std::uint64_t order_ = 0;
  std::uint64_t bottom_ = 0;
  std::vector<std::size_t> sizes_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::uint64_t> weight_;
  std::vector<Index> generators_;
};

enum class CheckStatus { verified, failed, skipped, unverified };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified: return "verified";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::unverified: return "unverified";
  }
  return "?";
}

/// J(P wr C_p) against J(P), where P is the tower one layer lower.
struct WreathThompsonReport {
  CheckStatus status = CheckStatus::skipped;
  std::string reason;
  std::uint64_t lower_order = 0;
  std::uint64_t order = 0;
  std::uint64_t lower_j = 0;
  unsigned lower_rank = 0;
  bool lower_elementary = false;
  /// |J(P)|^p, the order of the copy of J(P)^p in the base.
  std::uint64_t predicted = 0;
  std::uint64_t j = 0;
  unsigned rank = 0;
  bool elementary = false;
  bool equals_base_copy = false;
};

/// If J(P) is elementary abelian then J(P wr C_p) is elementary abelian and
/// equals J(P)^p inside the base subgroup (for P != 1).
inline WreathThompsonReport verify_wreath_thompson(const WreathSpec& spec,
                                                   std::uint64_t budget = kDefaultElementBudget,
                                                   const ThompsonLimits& limits = {}) {
  WreathThompsonReport r;
  if (spec.r == 0) {
    r.reason = "bottom group is trivial (P = 1)";
    return r;
  }
  if (spec.height == 0) {
    r.reason = "height 0 has no wreath layer";
    return r;
  }
  const WreathSpec lower_spec{spec.p, spec.r, spec.height - 1};
  r.lower_order = lower_spec.order();
  r.order = spec.order();
  std::optional<WreathGroup> lower;
  ThompsonResult jl;
  try {
    lower.emplace(lower_spec, budget);
    jl = thompson_subgroup(*lower, limits);
  } catch (const budget_exceeded& e) {
    r.status = CheckStatus::unverified;
    r.reason = std::string("J(P) out of budget: ") + e.what();
    return r;
  }
  r.lower_j = jl.j.size();
  r.lower_rank = jl.report.rank;
  r.lower_elementary = is_elementary_abelian(*lower, jl.j);
  r.predicted = 1;
  for (std::uint32_t i = 0; i < spec.p; ++i) r.predicted *= r.lower_j;
  std::optional<WreathGroup> w;
  ThompsonResult jw;
  try {
    w.emplace(spec, budget);
    jw = thompson_subgroup(*w, limits);
  } catch (const budget_exceeded& e) {
    r.status = CheckStatus::unverified;
    r.reason = std::string("J(P wr C_p) out of budget: ") + e.what();
    return r;
  }
  r.j = jw.j.size();
  r.rank = jw.report.rank;
  r.elementary = is_elementary_abelian(*w, jw.j);
  Bitset copy(w->order());
  for (std::uint64_t i = 0; i < w->order() / spec.p; ++i) {
    const auto [blocks, top] = w->split(static_cast<Index>(i), *lower);
    bool in = top == 0;
    for (Index b : blocks) in = in && jl.j.contains(b);
    if (in) copy.set(i);
  }
  r.equals_base_copy = copy == jw.j.bits();
  const bool ok = r.equals_base_copy && (!r.lower_elementary || r.elementary);
  r.status = ok ? CheckStatus::verified : CheckStatus::failed;
  return r;
}

/// The conjecture on a wreath tower, plus the mechanism behind it: J is
/// elementary abelian and normal, and the one-step chain 1 <= J is examined
/// as a Q-series.
struct WreathConjectureReport {
  ConjectureVerdict verdict;
  bool j_elementary = false;
  bool j_normal = false;
  QSeries one_step;
  bool shuffled_agree = false;
};

inline WreathConjectureReport wreath_conjecture_check(const WreathGroup& w, std::uint64_t shuffle_seed,
                                                      const ThompsonLimits& limits = {}) {
  WreathConjectureReport r;
  r.verdict = check_conjecture(w, limits);
  r.j_elementary = is_elementary_abelian(w, r.verdict.thompson.j);
  r.j_normal = is_normal(w, r.verdict.thompson.j);
  r.one_step = verify_qseries(w, {trivial_subgroup(w), r.verdict.thompson.j}, CommutatorRoute::generators);
  OliverOptions opt;
  opt.shuffle_seed = shuffle_seed;
  r.shuffled_agree = compute_oliver(w, opt).subgroup == r.verdict.oliver.subgroup;
  return r;
}

}  // namespace unisylow
