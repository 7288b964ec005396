#pragma once

// Small p-groups given by full multiplication tables, and the test corpus of
// groups of order at most 5^4 built from them.

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "group.hpp"
#include "unitary.hpp"
#include "wreath.hpp"

namespace unisylow {

class TableGroup {
 public:
  using element_type = Index;

  static constexpr std::uint64_t kMaxOrder = 1u << 12;

  TableGroup(std::string name, std::uint32_t p, std::uint64_t order, std::vector<Index> table,
             std::vector<Index> generators)
      : name_(std::move(name)), p_(p), order_(order), table_(std::move(table)), generators_(std::move(generators)) {
    if (order_ > kMaxOrder) throw budget_exceeded("table group " + name_ + " is too large", order_);
    if (table_.size() != order_ * order_) throw invalid_parameter("multiplication table has the wrong size");
    inverse_.assign(order_, 0);
    for (std::uint64_t a = 0; a < order_; ++a)
      for (std::uint64_t b = 0; b < order_; ++b)
        if (table_[a * order_ + b] == kIdentityIndex) inverse_[a] = static_cast<Index>(b);
  }

  /// Tabulates any indexed group.
  template <FiniteGroup G>
  static TableGroup from(const G& g, std::string name) {
    if (g.order() > kMaxOrder) throw budget_exceeded("group " + name + " is too large to tabulate", g.order());
    const std::uint64_t n = g.order();
    std::vector<typename G::element_type> elems;
    for (std::uint64_t i = 0; i < n; ++i) elems.push_back(g.element(static_cast<Index>(i)));
    std::vector<Index> table(n * n);
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) table[a * n + b] = g.index_of(g.mul(elems[a], elems[b]));
    return TableGroup(std::move(name), g.prime(), n, std::move(table), g.generators());
  }

  std::uint64_t order() const { return order_; }
  std::uint32_t prime() const { return p_; }
  Index identity() const { return kIdentityIndex; }
  Index element(Index i) const { return i; }
  Index index_of(Index x) const { return x; }
  Index mul(Index a, Index b) const { return table_[a * order_ + b]; }
  Index inv(Index a) const { return inverse_[a]; }
  const std::vector<Index>& generators() const { return generators_; }

  const std::string& name() const { return name_; }

  /// Associativity, identity and inverses, checked on the whole table.
  bool is_group() const {
    for (std::uint64_t a = 0; a < order_; ++a) {
      if (mul(kIdentityIndex, static_cast<Index>(a)) != a || mul(static_cast<Index>(a), kIdentityIndex) != a)
        return false;
      if (mul(static_cast<Index>(a), inverse_[a]) != kIdentityIndex) return false;
      for (std::uint64_t b = 0; b < order_; ++b)
        for (Index g : generators_)
          if (mul(mul(static_cast<Index>(a), static_cast<Index>(b)), g) !=
              mul(static_cast<Index>(a), mul(static_cast<Index>(b), g)))
            return false;
    }
    return generated_subgroup_exact(*this, generators_).size() == order_;
  }

 private:
  std::string name_;
  std::uint32_t p_;
  std::uint64_t order_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<Index> generators_;
};

/// C_{p^e1} x C_{p^e2} x ..., elements indexed in mixed radix.
inline TableGroup abelian_group(std::uint32_t p, const std::vector<std::uint32_t>& exponents) {
  std::vector<std::uint64_t> radix;
  std::string name;
  std::uint64_t n = 1;
  for (auto e : exponents) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= p;
    radix.push_back(r);
    n *= r;
    name += (name.empty() ? "C" : " x C") + std::to_string(r);
  }
  if (name.empty()) name = "1";
  if (n > TableGroup::kMaxOrder) throw budget_exceeded("abelian group " + name + " is too large", n);
  std::vector<Index> table(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      std::uint64_t x = a, y = b, out = 0, w = 1;
      for (auto r : radix) {
        out += ((x % r + y % r) % r) * w;
        x /= r;
        y /= r;
        w *= r;
      }
      table[a * n + b] = static_cast<Index>(out);
    }
  std::vector<Index> gens;
  std::uint64_t w = 1;
  for (auto r : radix) {
    gens.push_back(static_cast<Index>(w));
    w *= r;
  }
  return TableGroup(name, p, n, std::move(table), std::move(gens));
}

/// C_{p^a} x| C_{p^b} with the generator of the top acting by x -> x^s.
inline TableGroup metacyclic_group(std::uint32_t p, std::uint32_t a, std::uint32_t b, std::uint32_t s) {
  std::uint64_t na = 1, nb = 1;
  for (std::uint32_t i = 0; i < a; ++i) na *= p;
  for (std::uint32_t i = 0; i < b; ++i) nb *= p;
  std::uint64_t sb = 1;  // s^(p^b) must be 1 mod p^a
  for (std::uint64_t i = 0; i < nb; ++i) sb = sb * s % na;
  if (sb != 1 % na) throw invalid_parameter("automorphism order does not divide the top cyclic group");
  const std::uint64_t n = na * nb;
  if (n > TableGroup::kMaxOrder) throw budget_exceeded("metacyclic group is too large", n);
  // (x, u)(y, v) = (x + s^u y, u + v)
  std::vector<std::uint64_t> spow(nb);
  spow[0] = 1 % na;
  for (std::uint64_t i = 1; i < nb; ++i) spow[i] = spow[i - 1] * s % na;
  std::vector<Index> table(n * n);
  for (std::uint64_t e = 0; e < n; ++e)
    for (std::uint64_t f = 0; f < n; ++f) {
      const std::uint64_t x = e % na, u = e / na, y = f % na, v = f / na;
      table[e * n + f] = static_cast<Index>((x + spow[u] * y) % na + ((u + v) % nb) * na);
    }
  const std::string name = "C" + std::to_string(na) + " x| C" + std::to_string(nb);
  return TableGroup(name, p, n, std::move(table), {1, static_cast<Index>(na)});
}

inline TableGroup direct_product(const TableGroup& g, const TableGroup& h) {
  if (g.prime() != h.prime()) throw invalid_parameter("direct product of groups for different primes");
  const std::uint64_t a = g.order(), b = h.order(), n = a * b;
  if (n > TableGroup::kMaxOrder) throw budget_exceeded("direct product is too large", n);
  std::vector<Index> table(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      table[x * n + y] = static_cast<Index>(g.mul(static_cast<Index>(x % a), static_cast<Index>(y % a)) +
                                            a * h.mul(static_cast<Index>(x / a), static_cast<Index>(y / a)));
  std::vector<Index> gens = g.generators();
  for (Index t : h.generators()) gens.push_back(static_cast<Index>(a * t));
  return TableGroup(g.name() + " x " + h.name(), g.prime(), n, std::move(table), std::move(gens));
}

/// Groups of order at most 5^4 used to cross-check the subgroup algorithms:
/// abelian groups of every type up to order 5^4, the non-abelian groups of
/// order 5^3 and some of their products, and p = 3 groups of nilpotency
/// class at least 3, where the Q-series condition is not automatic.
inline std::vector<TableGroup> corpus_groups() {
  std::vector<TableGroup> out;
  out.push_back(abelian_group(5, {}));
  out.push_back(abelian_group(5, {1}));
  out.push_back(abelian_group(5, {2}));
  out.push_back(abelian_group(5, {3}));
  out.push_back(abelian_group(5, {1, 1}));
  out.push_back(abelian_group(5, {2, 1}));
  out.push_back(abelian_group(5, {1, 1, 1}));
  out.push_back(abelian_group(5, {4}));
  out.push_back(abelian_group(5, {2, 2}));
  out.push_back(abelian_group(5, {3, 1}));
  out.push_back(abelian_group(5, {2, 1, 1}));
  out.push_back(abelian_group(5, {1, 1, 1, 1}));
  const TableGroup meta = metacyclic_group(5, 2, 1, 6);
  out.push_back(meta);
  const TableGroup heis = TableGroup::from(SylowGroup(UnitaryParams::make(5, 5, 3)), "S(5,5,3)");
  out.push_back(heis);
  out.push_back(TableGroup::from(SylowGroup(UnitaryParams::make(5, 25, 2)), "S(5,25,2)"));
  out.push_back(direct_product(heis, abelian_group(5, {1})));
  out.push_back(direct_product(meta, abelian_group(5, {1})));
  out.push_back(TableGroup::from(WreathGroup({3, 1, 1}), "C3 wr C3"));
  out.push_back(direct_product(TableGroup::from(WreathGroup({3, 1, 1}), "C3 wr C3"), abelian_group(3, {1})));
  out.push_back(metacyclic_group(3, 2, 1, 4));
  out.push_back(metacyclic_group(3, 3, 1, 10));
  return out;
}

}  // namespace unisylow
