#pragma once

// Exact arithmetic in F_{q^2} = F_p[x]/(f), deg f = 2k, with the subfield
// F_q recovered as the fixed field of the Frobenius conjugation x -> x^q.
//
// Elements are dense indices: the polynomial c_0 + c_1 x + ... + c_{d-1}
// x^{d-1} is stored as c_0 + c_1 p + ... + c_{d-1} p^{d-1}. Index 0 is zero,
// index 1 is one, and constants c < p keep their value. The encoding depends
// only on (p, k, modulus) and is part of the group cache format.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace unisylow {

struct FieldElem {
  std::uint16_t value = 0;

  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint16_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline constexpr std::uint32_t kMaxFieldSize = 1u << 16;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace detail {

// Dense polynomials over F_p, lowest coefficient first. Only used while the
// tables are being built.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
inline Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Table-driven F_{q^2} with its conjugation. Immutable after construction.
class Field {
 public:
  /// Builds F_{p^{2k}} over the lowest irreducible monic modulus, where
  /// monic polynomials are ordered by their coefficient tuple read from the
  /// highest non-leading coefficient down.
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t k) {
    validate(p, k);
    const std::uint32_t d = 2 * k;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      detail::Poly f(d + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (detail::is_irreducible(f, p))
        return std::shared_ptr<const Field>(new Field(p, k, std::move(f)));
    }
    throw internal_error("no irreducible polynomial of degree " + std::to_string(d));
  }

  /// Builds the field over an explicit monic modulus (lowest coefficient
  /// first, leading 1 included).
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t k,
                                             std::vector<std::uint32_t> modulus) {
    validate(p, k);
    if (modulus.size() != 2 * k + 1 || modulus.back() != 1)
      throw invalid_parameter("modulus must be monic of degree 2k");
    for (auto c : modulus)
      if (c >= p) throw invalid_parameter("modulus coefficient out of range");
    if (!detail::is_irreducible(modulus, p))
      throw invalid_parameter("modulus is reducible over F_p");
    return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  /// Order of the subfield F_q.
  std::uint32_t q() const { return q_; }
  /// Order of F_{q^2}.
  std::uint32_t size() const { return size_; }
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  static constexpr FieldElem zero() { return FieldElem{0}; }
  static constexpr FieldElem one() { return FieldElem{1}; }

  /// The image of an integer under Z -> F_p.
  FieldElem from_int(long long v) const {
    const long long r = ((v % static_cast<long long>(p_)) + p_) % p_;
    return FieldElem(static_cast<std::uint16_t>(r));
  }

  FieldElem from_coefficients(std::span<const std::uint32_t> coeffs) const {
    std::uint32_t idx = 0, scale = 1;
    for (std::size_t i = 0; i < coeffs.size() && i < 2 * k_; ++i) {
      idx += (coeffs[i] % p_) * scale;
      scale *= p_;
    }
    return FieldElem(static_cast<std::uint16_t>(idx));
  }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (!add_table_.empty()) return add_table_[a.value * size_ + b.value];
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Zech logarithm: a + b = a (1 + b/a).
    std::uint32_t diff = log_[b.value] + order_ - log_[a.value];
    if (diff >= order_) diff -= order_;
    const std::int32_t z = zech_[diff];
    if (z < 0) return zero();
    return exp_[log_[a.value] + static_cast<std::uint32_t>(z)];
  }

  FieldElem neg(FieldElem a) const { return neg_[a.value]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg_[b.value]); }

  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return exp_[log_[a.value] + log_[b.value]];
  }

  FieldElem inv(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    return exp_[order_ - log_[a.value]];
  }

  FieldElem pow(FieldElem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    return exp_[(static_cast<std::uint64_t>(log_[a.value]) * (e % order_)) % order_];
  }

  /// Frobenius conjugation x -> x^q.
  FieldElem conj(FieldElem a) const { return conj_[a.value]; }

  /// Norm to F_q: x * conj(x).
  FieldElem norm(FieldElem a) const { return mul(a, conj(a)); }

  bool in_subfield(FieldElem a) const { return subfield_[a.value] != 0; }

  /// The fixed primitive element used for the exp/log tables.
  FieldElem generator() const { return exp_[1]; }

  std::string to_string(FieldElem a) const {
    std::string out;
    std::uint32_t v = a.value;
    for (std::uint32_t i = 0; i < 2 * k_; ++i) {
      out += std::to_string(v % p_);
      v /= p_;
      if (i + 1 < 2 * k_) out += ',';
    }
    return "[" + out + "]";
  }

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
      : p_(p), k_(k), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
    size_ = q_ * q_;
    order_ = size_ - 1;
    build_tables();
  }

  static void validate(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw invalid_parameter("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw invalid_parameter("extension degree must be positive");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < 2 * k; ++i) {
      size *= p;
      if (size > kMaxFieldSize)
        throw invalid_parameter("field of size p^(2k) exceeds 2^16 elements");
    }
  }

  std::vector<std::uint32_t> digits(std::uint32_t idx) const {
    std::vector<std::uint32_t> c(2 * k_);
    for (auto& x : c) {
      x = idx % p_;
      idx /= p_;
    }
    return c;
  }

  std::uint32_t encode(const std::vector<std::uint32_t>& c) const {
    std::uint32_t idx = 0, scale = 1;
    for (std::uint32_t i = 0; i < 2 * k_; ++i) {
      idx += (i < c.size() ? c[i] : 0) * scale;
      scale *= p_;
    }
    return idx;
  }

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const auto ca = digits(a), cb = digits(b);
    detail::Poly prod(ca.size() + cb.size(), 0);
    for (std::size_t i = 0; i < ca.size(); ++i)
      for (std::size_t j = 0; j < cb.size(); ++j)
        prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    return encode(detail::poly_mod(std::move(prod), modulus_, p_));
  }

  std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const {
    auto ca = digits(a);
    const auto cb = digits(b);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return encode(ca);
  }

  void build_tables() {
    // Find a primitive element by brute force over small indices.
    std::vector<std::uint16_t> powers;
    for (std::uint32_t g = 2; g < size_; ++g) {
      powers.assign(1, 1);
      std::uint32_t x = g;
      while (x != 1 && powers.size() <= order_) {
        powers.push_back(static_cast<std::uint16_t>(x));
        x = slow_mul(x, g);
      }
      if (powers.size() == order_) break;
    }
    if (powers.size() != order_) throw internal_error("no primitive element found");

    exp_.resize(2 * static_cast<std::size_t>(order_) + 1);
    log_.assign(size_, 0);
    for (std::uint32_t i = 0; i < 2 * order_ + 1; ++i) exp_[i] = FieldElem(powers[i % order_]);
    for (std::uint32_t i = 0; i < order_; ++i) log_[powers[i]] = i;

    neg_.resize(size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      auto c = digits(a);
      for (auto& x : c) x = (p_ - x) % p_;
      neg_[a] = FieldElem(static_cast<std::uint16_t>(encode(c)));
    }

    zech_.assign(order_, -1);
    for (std::uint32_t i = 0; i < order_; ++i) {
      const std::uint32_t s = slow_add(1, powers[i]);
      zech_[i] = s == 0 ? -1 : static_cast<std::int32_t>(log_[s]);
    }
    if (size_ <= 1024) {
      add_table_.resize(static_cast<std::size_t>(size_) * size_);
      for (std::uint32_t a = 0; a < size_; ++a)
        for (std::uint32_t b = 0; b < size_; ++b)
          add_table_[a * size_ + b] = FieldElem(static_cast<std::uint16_t>(slow_add(a, b)));
    }

    conj_.resize(size_);
    subfield_.assign(size_, 0);
    for (std::uint32_t a = 0; a < size_; ++a) {
      conj_[a] = pow(FieldElem(static_cast<std::uint16_t>(a)), q_);
      subfield_[a] = conj_[a].value == a;
    }
  }

  std::uint32_t p_, k_, q_ = 0, size_ = 0, order_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<FieldElem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
  std::vector<FieldElem> neg_;
  std::vector<FieldElem> add_table_;
  std::vector<FieldElem> conj_;
  std::vector<std::uint8_t> subfield_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace unisylow
