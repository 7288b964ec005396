#pragma once

// Defining-characteristic Sylow p-subgroups of U_n(F_q), n = 2m or 2m+1,
// preserving the anti-diagonal form Q_n.
//
// Every element is lower unitriangular and has the block shape
//
//   even:  [ (conj(D)^F)^-1   0 ]        odd:  [ (conj(D)^F)^-1   0        0 ]
//          [ D P              D ]              [ alpha            1        0 ]
//                                              [ D P      -D Q conj(alpha)^T D ]
//
// with D lower unitriangular, and P conjugate-skew-persymmetric (even) or
// satisfying P + conj(P)^F = -Q conj(alpha)^T alpha (odd).
//
// Elements are indexed by a mixed-radix code, least significant digit first:
//   1. strictly lower entries of D, row-major          (radix q^2)
//   2. entries of alpha, odd case only                  (radix q^2)
//   3. entries of P strictly below the skew-diagonal    (radix q^2)
//   4. skew-diagonal entries of P, top row first        (radix q)
// A skew-diagonal entry x solves x + conj(x) = c with c fixed by alpha; its
// digit is the rank of x among the q solutions in ascending index order.
// Entries of P above the skew-diagonal are then forced. Index 0 is the
// identity.

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "random.hpp"

namespace unisylow {

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct UnitaryParams {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  Parity parity = Parity::even;

  /// Validates p >= 5 prime, q a power of p, n >= 2.
  static UnitaryParams make(std::uint32_t p, std::uint32_t q, std::uint32_t n) {
    if (!is_prime(p)) throw invalid_parameter("p = " + std::to_string(p) + " is not prime");
    if (p < 5) throw invalid_parameter("unitary Sylow construction requires p >= 5, got p = " + std::to_string(p));
    std::uint32_t k = 0;
    std::uint64_t pk = 1;
    while (pk < q) {
      pk *= p;
      ++k;
    }
    if (q < p || pk != q)
      throw invalid_parameter("q = " + std::to_string(q) + " is not a power of p = " + std::to_string(p));
    if (n < 2) throw invalid_parameter("matrix size n must be at least 2");
    if (n > kMaxDim) throw invalid_parameter("matrix size n must be at most " + std::to_string(kMaxDim));
    return UnitaryParams{p, k, q, n, n / 2, n % 2 ? Parity::odd : Parity::even};
  }

  /// q^(n(n-1)/2), or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> sylow_order() const {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) {
      if (r > UINT64_MAX / q) return std::nullopt;
      r *= q;
    }
    return r;
  }

  std::string label() const {
    return "p=" + std::to_string(p) + " q=" + std::to_string(q) + " n=" + std::to_string(n);
  }
};

struct SylowElem {
  Mat d;      // lower unitriangular m x m
  Mat p;      // m x m
  Row alpha;  // length m (odd) or 0 (even)

  friend bool operator==(const SylowElem&, const SylowElem&) = default;
};

/// |U_n(F_q)| = q^(n(n-1)/2) * prod_{i=1..n} (q^i - (-1)^i).
inline std::uint64_t unitary_group_order(std::uint64_t q, std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n * (n - 1) / 2; ++i) r *= q;
  std::uint64_t qi = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    qi *= q;
    r *= (i % 2) ? qi + 1 : qi - 1;
  }
  return r;
}

/// conj(A)^T Q_n A == Q_n.
inline bool is_unitary(const Field& f, const Mat& a) {
  const Mat q = Mat::skew_identity(a.dim());
  return mul(f, mul(f, transpose(conj(f, a)), q), a) == q;
}

inline bool is_unitary(const Field& f, const Mat& a, std::size_t n) {
  if (a.dim() != n) throw invalid_parameter("matrix dimension does not match n");
  return is_unitary(f, a);
}

/// Q conj(u)^T v: entry (a,b) is conj(u[m-1-a]) * v[b].
inline Mat skew_outer(const Field& f, const Row& u, const Row& v) {
  if (u.size() != v.size()) throw invalid_parameter("row length mismatch");
  const std::size_t m = u.size();
  Mat r(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) r(a, b) = f.mul(f.conj(u[m - 1 - a]), v[b]);
  return r;
}

/// U P + P conj(U)^F + U P conj(U)^F == 0 for D = 1 + U.
inline bool centralizer_condition(const Field& f, const Mat& u, const Mat& p) {
  require_same_dim(u, p);
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = i; j < u.dim(); ++j)
      if (!u(i, j).is_zero()) throw invalid_parameter("U must be strictly lower triangular");
  if (!is_conj_skew_persymmetric(f, p)) throw invalid_parameter("P must be conjugate-skew-persymmetric");
  const Mat uf = flip_transpose(conj(f, u));
  const Mat up = mul(f, u, p);
  return add(f, add(f, up, mul(f, p, uf)), mul(f, up, uf)).is_zero();
}

enum class SubgroupKind { A, A0, Dpart, Ntilde, full };

struct SubgroupTag {
  SubgroupKind kind = SubgroupKind::full;
  std::uint32_t i = 0;  // Ntilde only, 1-based, 1 <= j < i <= m
  std::uint32_t j = 0;

  static SubgroupTag ntilde(std::uint32_t i, std::uint32_t j) { return {SubgroupKind::Ntilde, i, j}; }

  std::string name() const {
    switch (kind) {
      case SubgroupKind::A: return "A";
      case SubgroupKind::A0: return "A0";
      case SubgroupKind::Dpart: return "D";
      case SubgroupKind::Ntilde: return "N~" + std::to_string(i) + std::to_string(j);
      case SubgroupKind::full: return "S";
    }
    return "?";
  }
};

class SylowGroup {
 public:
  using element_type = Mat;

  static constexpr std::uint64_t kElementCacheLimit = std::uint64_t{1} << 17;

  SylowGroup(const UnitaryParams& params, std::uint64_t budget = kDefaultElementBudget,
             FieldPtr field = nullptr)
      : params_(params), field_(field ? std::move(field) : Field::create(params.p, params.k)) {
    if (field_->p() != params.p || field_->k() != params.k)
      throw invalid_parameter("field does not match the unitary parameters");
    const auto order = params.sylow_order();
    if (!order || *order > budget || *order > UINT32_MAX) {
      if (!order) throw budget_exceeded("Sylow subgroup for " + params.label() + " is out of range", UINT64_MAX);
      throw budget_exceeded("Sylow subgroup for " + params.label() + " has " + std::to_string(*order) +
                                " elements",
                            *order);
    }
    order_ = *order;
    build_layout();
    build_solutions();
    build_generators();
    if (order_ <= kElementCacheLimit) {
      cache_.reserve(order_);
      for (std::uint64_t i = 0; i < order_; ++i) cache_.push_back(embed(decode(static_cast<Index>(i))));
    }
  }

  // Group interface.
  std::uint64_t order() const { return order_; }
  std::uint32_t prime() const { return params_.p; }
  Mat identity() const { return Mat::identity(params_.n); }
  Mat element(Index i) const { return cache_.empty() ? embed(decode(i)) : cache_[i]; }
  Index index_of(const Mat& x) const { return encode_matrix(x); }
  Mat mul(const Mat& a, const Mat& b) const { return unisylow::mul(*field_, a, b); }
  /// For unitary X, X^-1 = Q conj(X)^T Q = conj(X)^F.
  Mat inv(const Mat& a) const { return flip_transpose(conj(*field_, a)); }
  const std::vector<Index>& generators() const { return generators_; }

  const UnitaryParams& params() const { return params_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t m() const { return params_.m; }
  bool odd() const { return params_.parity == Parity::odd; }

  // Parametrization.

  Mat embed(const SylowElem& e) const {
    check_shape(e);
    const Field& f = *field_;
    const std::size_t m = params_.m, n = params_.n, off = odd() ? m + 1 : m;
    Mat x(n);
    const Mat b = inverse(f, flip_transpose(conj(f, e.d)));
    const Mat c = unisylow::mul(f, e.d, e.p);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        x(i, j) = b(i, j);
        x(off + i, j) = c(i, j);
        x(off + i, off + j) = e.d(i, j);
      }
    if (odd()) {
      for (std::size_t j = 0; j < m; ++j) x(m, j) = e.alpha[j];
      x(m, m) = Field::one();
      // beta = -D Q conj(alpha)^T
      for (std::size_t i = 0; i < m; ++i) {
        FieldElem s = Field::zero();
        for (std::size_t c2 = 0; c2 < m; ++c2) s = f.add(s, f.mul(e.d(i, c2), f.conj(e.alpha[m - 1 - c2])));
        x(off + i, m) = f.neg(s);
      }
    }
    return x;
  }

  /// Inverse of embed on lower unitriangular unitary matrices of the right size.
  SylowElem decompose(const Mat& x) const {
    if (x.dim() != params_.n) throw invalid_parameter("matrix dimension does not match n");
    if (!is_lower_unitriangular(x)) throw invalid_parameter("matrix is not lower unitriangular");
    if (!is_unitary(*field_, x)) throw invalid_parameter("matrix is not unitary");
    SylowElem e = split(x);
    if (!(embed(e) == x)) throw invalid_parameter("matrix does not have the Sylow block shape");
    return e;
  }

  /// Whether e satisfies the parameter constraints (D unitriangular, form on P).
  bool is_valid(const SylowElem& e) const {
    const std::size_t m = params_.m;
    if (e.d.dim() != m || e.p.dim() != m || e.alpha.size() != (odd() ? m : 0)) return false;
    if (!is_lower_unitriangular(e.d)) return false;
    if (odd()) return is_alpha_conj_skew_persymmetric(*field_, e.p, e.alpha);
    return is_conj_skew_persymmetric(*field_, e.p);
  }

  SylowElem make(const Mat& d, const Mat& p) const {
    SylowElem e{d, p, Row(odd() ? params_.m : 0)};
    check_shape(e);
    return e;
  }
  SylowElem make(const Mat& d, const Mat& p, const Row& alpha) const {
    SylowElem e{d, p, alpha};
    check_shape(e);
    return e;
  }

  SylowElem decode(Index idx) const {
    if (idx >= order_) throw invalid_parameter("element index out of range");
    const Field& f = *field_;
    const std::size_t m = params_.m;
    SylowElem e{Mat::identity(m), Mat(m), Row(odd() ? m : 0)};
    std::uint64_t r = idx;
    const std::uint32_t q2 = f.size();
    for (auto [i, j] : d_pos_) {
      e.d(i, j) = FieldElem(static_cast<std::uint16_t>(r % q2));
      r /= q2;
    }
    if (odd())
      for (std::size_t j = 0; j < m; ++j) {
        e.alpha[j] = FieldElem(static_cast<std::uint16_t>(r % q2));
        r /= q2;
      }
    for (auto [a, b] : free_pos_) {
      e.p(a, b) = FieldElem(static_cast<std::uint16_t>(r % q2));
      r /= q2;
    }
    for (std::size_t a = 0; a < m; ++a) {
      const FieldElem c = skew_target(e.alpha, a);
      e.p(a, m - 1 - a) = solutions_[c.value][r % params_.q];
      r /= params_.q;
    }
    fill_forced(e);
    return e;
  }

  Index encode(const SylowElem& e) const {
    check_shape(e);
    return encode_parts(e.d, e.alpha, e.p);
  }

  /// Digits of an index in layout order.
  std::vector<std::uint32_t> digits(Index idx) const {
    std::vector<std::uint32_t> out(radix_.size());
    std::uint64_t r = idx;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
      out[t] = static_cast<std::uint32_t>(r % radix_[t]);
      r /= radix_[t];
    }
    return out;
  }

  std::size_t d_digit_count() const { return d_pos_.size(); }
  std::size_t alpha_digit_count() const { return odd() ? params_.m : 0; }
  const std::vector<std::pair<std::uint8_t, std::uint8_t>>& d_positions() const { return d_pos_; }

  // Closed-form products (even parity).

  SylowElem mul_formula(const SylowElem& x, const SylowElem& y) const {
    require_even("product formula");
    check_shape(x);
    check_shape(y);
    const Field& f = *field_;
    const Mat d = unisylow::mul(f, x.d, y.d);
    const Mat t = unisylow::mul(f, unisylow::mul(f, inverse(f, y.d), x.p), inverse(f, flip_transpose(conj(f, y.d))));
    return make(d, add(f, t, y.p));
  }

  SylowElem inverse_formula(const SylowElem& x) const {
    require_even("inverse formula");
    check_shape(x);
    const Field& f = *field_;
    const Mat p = neg(f, unisylow::mul(f, unisylow::mul(f, x.d, x.p), flip_transpose(conj(f, x.d))));
    return make(inverse(f, x.d), p);
  }

  /// [X_{1,P}, X_{D,P'}] = X_{1, D^-1 P (conj(D)^F)^-1 - P}.
  SylowElem comm_formula_even(const SylowElem& x, const SylowElem& y) const {
    require_even("commutator formula");
    check_shape(x);
    check_shape(y);
    if (!(x.d == Mat::identity(params_.m))) throw invalid_parameter("first argument must have D = 1");
    return make(Mat::identity(params_.m), conjugated_shift(x.p, y.d));
  }

  /// [X_{1,P,a}, X_{1,P',a'}] = X_{1, Q conj(a')^T a - Q conj(a)^T a', 0}.
  SylowElem comm_formula_odd_abelian(const SylowElem& x, const SylowElem& y) const {
    require_odd("commutator formula");
    check_shape(x);
    check_shape(y);
    const Mat id = Mat::identity(params_.m);
    if (!(x.d == id) || !(y.d == id)) throw invalid_parameter("both arguments must have D = 1");
    const Field& f = *field_;
    return make(id, sub(f, skew_outer(f, y.alpha, x.alpha), skew_outer(f, x.alpha, y.alpha)),
                Row(params_.m));
  }

  /// [X_{1,P,0}, X_{D,P',a}] = [X_{1,P,0}, X_{D,0,0}] = X_{1, -P + D^-1 P (conj(D)^F)^-1, 0}.
  SylowElem comm_formula_odd_conjugation(const SylowElem& x, const SylowElem& y) const {
    require_odd("commutator formula");
    check_shape(x);
    check_shape(y);
    if (!(x.d == Mat::identity(params_.m)) || !x.alpha.is_zero())
      throw invalid_parameter("first argument must have D = 1 and alpha = 0");
    return make(Mat::identity(params_.m), conjugated_shift(x.p, y.d), Row(params_.m));
  }

  // Distinguished subgroups.

  /// Membership of an index in a distinguished subgroup, read off its digits.
  bool in_subgroup(Index idx, const SubgroupTag& tag) const {
    validate_tag(tag);
    const std::size_t nd = d_pos_.size(), na = alpha_digit_count();
    std::uint64_t r = idx;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
      const std::uint64_t dig = r % radix_[t];
      r /= radix_[t];
      if (dig == 0) continue;
      const bool is_d = t < nd, is_alpha = !is_d && t < nd + na;
      switch (tag.kind) {
        case SubgroupKind::full: break;
        case SubgroupKind::A:
          if (is_d) return false;
          break;
        case SubgroupKind::A0:
          if (is_d || is_alpha) return false;
          break;
        case SubgroupKind::Dpart:
          if (!is_d) return false;
          break;
        case SubgroupKind::Ntilde:
          if (is_d && !ntilde_allows(tag, d_pos_[t])) return false;
          break;
      }
    }
    return true;
  }

  Subgroup distinguished_subgroup(const SubgroupTag& tag) const {
    validate_tag(tag);
    if (tag.kind == SubgroupKind::full) return whole_group(*this);
    Bitset bits = detail::parallel_filter(order_, [&](Index i) { return in_subgroup(i, tag); });
    std::vector<Index> witness;
    for (Index g : generators_)
      if (in_subgroup(g, tag)) witness.push_back(g);
    return Subgroup(std::move(bits), std::move(witness));
  }

  /// Uniform element with digit constraints of the tag.
  Index random_index(Rng& rng, const SubgroupTag& tag = {}) const {
    validate_tag(tag);
    if (tag.kind == SubgroupKind::full) return static_cast<Index>(rng.below(order_));
    return random_constrained(rng, tag);
  }

  SylowElem random_element(Rng& rng, const SubgroupTag& tag = {}) const { return decode(random_index(rng, tag)); }

 private:
  void check_shape(const SylowElem& e) const {
    if (!is_valid(e)) throw invalid_parameter("parameters do not describe a Sylow element for " + params_.label());
  }
  void require_even(const char* what) const {
    if (odd()) throw invalid_parameter(std::string(what) + " requires even n");
  }
  void require_odd(const char* what) const {
    if (!odd()) throw invalid_parameter(std::string(what) + " requires odd n");
  }

  void validate_tag(const SubgroupTag& tag) const {
    if (tag.kind == SubgroupKind::A0 && !odd()) throw invalid_parameter("A0 is defined for odd n only");
    if (tag.kind == SubgroupKind::Ntilde && !(1 <= tag.j && tag.j < tag.i && tag.i <= params_.m))
      throw invalid_parameter("Ntilde indices must satisfy 1 <= j < i <= m");
  }

  /// Entry (a,b) of D may be nonzero only when a >= i and b <= j (1-based).
  static bool ntilde_allows(const SubgroupTag& tag, std::pair<std::uint8_t, std::uint8_t> pos) {
    return pos.first + 1u >= tag.i && pos.second + 1u <= tag.j;
  }

  Index random_constrained(Rng& rng, const SubgroupTag& tag) const {
    const std::size_t nd = d_pos_.size(), na = alpha_digit_count();
    std::uint64_t idx = 0, w = 1;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
      const bool is_d = t < nd, is_alpha = !is_d && t < nd + na;
      bool free = true;
      if (tag.kind == SubgroupKind::A) free = !is_d;
      if (tag.kind == SubgroupKind::A0) free = !is_d && !is_alpha;
      if (tag.kind == SubgroupKind::Dpart) free = is_d;
      if (tag.kind == SubgroupKind::Ntilde && is_d) free = ntilde_allows(tag, d_pos_[t]);
      if (free) idx += rng.below(radix_[t]) * w;
      w *= radix_[t];
    }
    return static_cast<Index>(idx);
  }

  /// -P + D^-1 P (conj(D)^F)^-1
  Mat conjugated_shift(const Mat& p, const Mat& d) const {
    const Field& f = *field_;
    const Mat t = unisylow::mul(f, unisylow::mul(f, inverse(f, d), p), inverse(f, flip_transpose(conj(f, d))));
    return sub(f, t, p);
  }

  /// Right-hand side c of x + conj(x) = c on skew-diagonal row a.
  FieldElem skew_target(const Row& alpha, std::size_t a) const {
    if (!odd()) return Field::zero();
    return field_->neg(field_->norm(alpha[params_.m - 1 - a]));
  }

  /// Fills P above the skew-diagonal from the entries below it.
  void fill_forced(SylowElem& e) const {
    const Field& f = *field_;
    const std::size_t m = params_.m;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; a + b + 1 < m; ++b) {
        FieldElem v = f.neg(f.conj(e.p(m - 1 - b, m - 1 - a)));
        if (odd()) v = f.sub(v, f.mul(f.conj(e.alpha[m - 1 - a]), e.alpha[b]));
        e.p(a, b) = v;
      }
  }

  /// Reads D, alpha and P = D^-1 C off a matrix without validation.
  SylowElem split(const Mat& x) const {
    const Field& f = *field_;
    const std::size_t m = params_.m, off = odd() ? m + 1 : m;
    SylowElem e{Mat(m), Mat(m), Row(odd() ? m : 0)};
    Mat c(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        e.d(i, j) = x(off + i, off + j);
        c(i, j) = x(off + i, j);
      }
    if (odd())
      for (std::size_t j = 0; j < m; ++j) e.alpha[j] = x(m, j);
    e.p = unisylow::mul(f, unitriangular_inverse(f, e.d), c);
    return e;
  }

  Index encode_matrix(const Mat& x) const {
    const SylowElem e = split(x);
    return encode_parts(e.d, e.alpha, e.p);
  }

  Index encode_parts(const Mat& d, const Row& alpha, const Mat& p) const {
    const std::uint32_t q2 = field_->size();
    const std::size_t m = params_.m;
    std::uint64_t idx = 0, w = 1;
    for (auto [i, j] : d_pos_) {
      idx += d(i, j).value * w;
      w *= q2;
    }
    if (odd())
      for (std::size_t j = 0; j < m; ++j) {
        idx += alpha[j].value * w;
        w *= q2;
      }
    for (auto [a, b] : free_pos_) {
      idx += p(a, b).value * w;
      w *= q2;
    }
    for (std::size_t a = 0; a < m; ++a) {
      idx += rank_[p(a, m - 1 - a).value] * w;
      w *= params_.q;
    }
    return static_cast<Index>(idx);
  }

  void build_layout() {
    const std::size_t m = params_.m;
    const std::uint32_t q2 = field_->size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < i; ++j) d_pos_.emplace_back(i, j);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a + b > m - 1) free_pos_.emplace_back(a, b);
    radix_.assign(d_pos_.size() + alpha_digit_count() + free_pos_.size(), q2);
    radix_.insert(radix_.end(), m, params_.q);
  }

  /// For each c in F_q, the q solutions of x + conj(x) = c in ascending order.
  void build_solutions() {
    const Field& f = *field_;
    solutions_.assign(f.size(), {});
    rank_.assign(f.size(), 0);
    for (std::uint32_t v = 0; v < f.size(); ++v) {
      const FieldElem x(static_cast<std::uint16_t>(v));
      auto& list = solutions_[f.add(x, f.conj(x)).value];
      rank_[v] = static_cast<std::uint32_t>(list.size());
      list.push_back(x);
    }
    for (std::uint32_t v = 0; v < f.size(); ++v) {
      const std::size_t expect = f.in_subfield(FieldElem(static_cast<std::uint16_t>(v))) ? params_.q : 0;
      if (solutions_[v].size() != expect) throw internal_error("trace fibres have unexpected size");
    }
  }

  /// One single-digit element per F_p-basis vector of each digit's range.
  void build_generators() {
    const Field& f = *field_;
    std::uint64_t w = 1;
    const std::size_t field_digits = radix_.size() - params_.m;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
      if (t < field_digits) {
        std::uint32_t pt = 1;
        for (std::uint32_t e = 0; e < 2 * params_.k; ++e, pt *= params_.p)
          generators_.push_back(static_cast<Index>(pt * w));
      } else {
        // Trace-zero solutions form an F_p-space of dimension k; pick a basis
        // greedily by rank.
        const auto& sols = solutions_[0];
        std::vector<FieldElem> span{Field::zero()};
        for (std::uint32_t r = 1; r < sols.size() && span.size() < params_.q; ++r) {
          if (std::find(span.begin(), span.end(), sols[r]) != span.end()) continue;
          generators_.push_back(static_cast<Index>(r * w));
          std::vector<FieldElem> grown;
          for (std::uint32_t c = 0; c < params_.p; ++c) {
            const FieldElem s = f.mul(f.from_int(c), sols[r]);
            for (auto x : span) grown.push_back(f.add(x, s));
          }
          span = std::move(grown);
        }
      }
      w *= radix_[t];
    }
  }

  UnitaryParams params_;
  FieldPtr field_;
  std::uint64_t order_ = 0;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> d_pos_;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> free_pos_;
  std::vector<std::uint64_t> radix_;
  std::vector<std::vector<FieldElem>> solutions_;
  std::vector<std::uint32_t> rank_;
  std::vector<Index> generators_;
  std::vector<Mat> cache_;
};

/// Every element of the Sylow subgroup is lower unitriangular and unitary,
/// and index_of inverts element. Exhaustive.
inline bool verify_enumeration(const SylowGroup& g) {
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    const Mat x = g.element(static_cast<Index>(i));
    if (!is_lower_unitriangular(x) || !is_unitary(g.field(), x)) return false;
    if (g.index_of(x) != i) return false;
  }
  return true;
}

/// Closure of the enumerated set S: every product x t with x in S and t a
/// generator lies in S, so <T> is contained in S, and <T> (generated without
/// the order shortcut) has |S| elements. Together these show S = <T>.
inline bool verify_closure_exhaustive(const SylowGroup& g) {
  std::vector<Mat> gens;
  for (Index t : g.generators()) gens.push_back(g.element(t));
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    const Mat x = g.element(static_cast<Index>(i));
    for (const auto& t : gens) {
      const Mat y = g.mul(x, t);
      if (!is_lower_unitriangular(y) || !is_unitary(g.field(), y)) return false;
      if (!(g.element(g.index_of(y)) == y)) return false;
    }
  }
  return generated_subgroup_exact(g, g.generators()).size() == g.order();
}

/// Number of n x n matrices over F_{q^2} satisfying the unitary form, by
/// exhaustive enumeration of all (q^2)^(n^2) matrices.
inline std::uint64_t count_unitary_exhaustive(const Field& f, std::size_t n,
                                              std::uint64_t budget = kDefaultElementBudget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) {
    if (total > budget / f.size()) throw budget_exceeded("exhaustive unitary count over all matrices", UINT64_MAX);
    total *= f.size();
  }
  std::uint64_t count = 0;
  Mat a(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        a(r, col) = FieldElem(static_cast<std::uint16_t>(c % f.size()));
        c /= f.size();
      }
    count += is_unitary(f, a);
  }
  return count;
}

}  // namespace unisylow
