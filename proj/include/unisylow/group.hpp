#pragma once

// Generic finite p-group engine over groups with a canonical index map.
//
// A group model exposes its elements through dense indices 0..order()-1,
// with index 0 the identity. Subgroups are membership bitsets over that
// index space together with a generating witness.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "errors.hpp"

namespace unisylow {

using Index = std::uint32_t;

inline constexpr Index kIdentityIndex = 0;
inline constexpr std::uint64_t kDefaultElementBudget = std::uint64_t{1} << 24;

template <class G>
concept FiniteGroup = requires(const G& g, const typename G::element_type& x, Index i) {
  typename G::element_type;
  { g.order() } -> std::convertible_to<std::uint64_t>;
  { g.prime() } -> std::convertible_to<std::uint32_t>;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.element(i) } -> std::convertible_to<typename G::element_type>;
  { g.index_of(x) } -> std::convertible_to<Index>;
  { g.mul(x, x) } -> std::convertible_to<typename G::element_type>;
  { g.inv(x) } -> std::convertible_to<typename G::element_type>;
  { g.generators() } -> std::convertible_to<const std::vector<Index>&>;
  { x == x } -> std::convertible_to<bool>;
};

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint64_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

  static Bitset full(std::uint64_t bits) {
    Bitset b(bits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    if (bits % 64) b.words_.back() = (std::uint64_t{1} << (bits % 64)) - 1;
    return b;
  }

  std::uint64_t size() const { return size_; }
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  /// Calls f(i) for every set bit in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        const int b = std::countr_zero(x);
        f(static_cast<Index>(w * 64 + static_cast<std::size_t>(b)));
        x &= x - 1;
      }
    }
  }

  std::vector<Index> indices() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (auto w : words_) {
      std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      h ^= z ^ (z >> 31);
    }
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return static_cast<std::size_t>(b.hash()); }
};

/// A subgroup of an indexed parent group: membership plus a generating witness.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(Bitset bits, std::vector<Index> witness)
      : bits_(std::move(bits)), witness_(std::move(witness)), size_(bits_.count()) {}

  static Subgroup trivial(std::uint64_t parent_order) {
    Bitset b(parent_order);
    b.set(kIdentityIndex);
    return Subgroup(std::move(b), {});
  }

  std::uint64_t parent_order() const { return bits_.size(); }
  std::uint64_t size() const { return size_; }
  bool is_trivial() const { return size_ == 1; }
  bool contains(Index i) const { return bits_.test(i); }
  const Bitset& bits() const { return bits_; }
  const std::vector<Index>& witness() const { return witness_; }
  std::vector<Index> members() const { return bits_.indices(); }

  bool is_subgroup_of(const Subgroup& o) const { return bits_.is_subset_of(o.bits_); }

  /// Equality of member sets; witnesses may differ.
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.bits_ == b.bits_; }

 private:
  Bitset bits_;
  std::vector<Index> witness_;
  std::uint64_t size_ = 0;
};

namespace detail {

inline unsigned worker_count(std::uint64_t work) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || work < (std::uint64_t{1} << 15)) return 1;
  return std::min(hw, 16u);
}

/// Bitset of the indices in [0, n) satisfying pred. The range is split into
/// word-aligned chunks when more than one hardware thread is available; the
/// result does not depend on the split.
template <class Pred>
Bitset parallel_filter(std::uint64_t n, Pred pred) {
  Bitset out(n);
  const unsigned workers = worker_count(n);
  if (workers == 1) {
    for (std::uint64_t i = 0; i < n; ++i)
      if (pred(static_cast<Index>(i))) out.set(i);
    return out;
  }
  const std::uint64_t chunk = ((n + workers - 1) / workers + 63) / 64 * 64;
  std::vector<Bitset> parts(workers, Bitset(n));
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w)
    threads.emplace_back([&, w] {
      const std::uint64_t lo = w * chunk, hi = std::min(n, lo + chunk);
      for (std::uint64_t i = lo; i < hi; ++i)
        if (pred(static_cast<Index>(i))) parts[w].set(i);
    });
  for (auto& t : threads) t.join();
  for (auto& p : parts) out |= p;
  return out;
}

}  // namespace detail

template <FiniteGroup G>
Subgroup trivial_subgroup(const G& g) {
  return Subgroup::trivial(g.order());
}

template <FiniteGroup G>
Subgroup whole_group(const G& g) {
  return Subgroup(Bitset::full(g.order()), g.generators());
}

template <FiniteGroup G>
bool commutes(const G& g, const typename G::element_type& x, const typename G::element_type& y) {
  return g.mul(x, y) == g.mul(y, x);
}

template <FiniteGroup G>
typename G::element_type power(const G& g, typename G::element_type x, std::uint64_t e) {
  auto r = g.identity();
  while (e) {
    if (e & 1) r = g.mul(r, x);
    e >>= 1;
    if (e) x = g.mul(x, x);
  }
  return r;
}

template <FiniteGroup G>
std::uint64_t element_order(const G& g, const typename G::element_type& x) {
  const auto id = g.identity();
  std::uint64_t n = 1;
  auto y = x;
  while (!(y == id)) {
    y = g.mul(y, x);
    ++n;
  }
  return n;
}

/// [x, y] = x^-1 y^-1 x y.
template <FiniteGroup G>
typename G::element_type commutator(const G& g, const typename G::element_type& x,
                                    const typename G::element_type& y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

/// Left-normed commutator [[[x, y1], y2], ...].
template <FiniteGroup G>
typename G::element_type nested_commutator(const G& g, typename G::element_type x,
                                           std::span<const typename G::element_type> ys) {
  for (const auto& y : ys) x = commutator(g, x, y);
  return x;
}

/// Incremental subgroup closure.
///
/// Adding a generator multiplies the existing members by it and then closes
/// the new members under every generator, so the member set stays closed
/// under right multiplication by the witness. When an ambient subgroup is
/// known, closure stops as soon as more than |ambient|/p members are found:
/// no proper subgroup of a p-group is that large.
template <FiniteGroup G>
class Closure {
 public:
  using element_type = typename G::element_type;

  explicit Closure(const G& g, const Subgroup* ambient = nullptr)
      : g_(g), ambient_(ambient), bits_(g.order()) {
    bits_.set(kIdentityIndex);
    list_.push_back(kIdentityIndex);
  }

  /// Starts from a subgroup that is already closed.
  Closure(const G& g, const Subgroup& start, const Subgroup* ambient = nullptr)
      : g_(g), ambient_(ambient), bits_(start.bits()), witness_(start.witness()) {
    list_ = start.members();
    for (Index w : witness_) wit_elems_.push_back(g_.element(w));
    check_saturation();
  }

  /// Turns off the |ambient|/p shortcut, for when the ambient order itself
  /// is what is being checked.
  void disable_saturation() { saturate_ = false; }

  bool contains(Index i) const { return bits_.test(i); }
  std::uint64_t size() const { return saturated_ ? ambient_size() : list_.size(); }
  const std::vector<Index>& witness() const { return witness_; }

  /// Extends the closure by gen; returns false when gen was already a member.
  bool add(Index gen) {
    if (bits_.test(gen)) return false;
    if (ambient_ && !ambient_->contains(gen))
      throw invalid_parameter("generator lies outside the ambient subgroup");
    witness_.push_back(gen);
    wit_elems_.push_back(g_.element(gen));
    const element_type& w = wit_elems_.back();
    const std::size_t old = list_.size();
    for (std::size_t i = 0; i < old; ++i) {
      push(g_.mul(g_.element(list_[i]), w));
      if (check_saturation()) return true;
    }
    for (std::size_t i = old; i < list_.size(); ++i) {
      const element_type x = g_.element(list_[i]);
      for (const auto& v : wit_elems_) push(g_.mul(x, v));
      if (check_saturation()) return true;
    }
    return true;
  }

  Subgroup finish() && {
    if (saturated_) {
      if (ambient_) return Subgroup(ambient_->bits(), std::move(witness_));
      return Subgroup(Bitset::full(g_.order()), std::move(witness_));
    }
    return Subgroup(std::move(bits_), std::move(witness_));
  }

 private:
  std::uint64_t ambient_size() const { return ambient_ ? ambient_->size() : g_.order(); }

  void push(const element_type& x) {
    const Index i = g_.index_of(x);
    if (!bits_.test(i)) {
      bits_.set(i);
      list_.push_back(i);
    }
  }

  bool check_saturation() {
    if (saturated_) return true;
    if (!saturate_) return false;
    if (list_.size() == ambient_size() ||
        static_cast<std::uint64_t>(list_.size()) * g_.prime() > ambient_size()) {
      saturated_ = true;
      bits_ = ambient_ ? ambient_->bits() : Bitset::full(g_.order());
      list_.clear();
    }
    return saturated_;
  }

  const G& g_;
  const Subgroup* ambient_;
  Bitset bits_;
  std::vector<Index> list_;
  std::vector<Index> witness_;
  std::vector<element_type> wit_elems_;
  bool saturated_ = false;
  bool saturate_ = true;
};

/// Smallest subgroup containing gens. If ambient is given, every generator
/// must lie in it.
template <FiniteGroup G>
Subgroup generated_subgroup(const G& g, std::span<const Index> gens, const Subgroup* ambient = nullptr) {
  for (Index i : gens)
    if (i >= g.order()) throw invalid_parameter("generator index outside the group");
  Closure<G> c(g, ambient);
  for (Index i : gens) c.add(i);
  return std::move(c).finish();
}

/// Like generated_subgroup, but every member is produced explicitly.
template <FiniteGroup G>
Subgroup generated_subgroup_exact(const G& g, std::span<const Index> gens) {
  Closure<G> c(g);
  c.disable_saturation();
  for (Index i : gens) c.add(i);
  return std::move(c).finish();
}

/// Wraps a member set already known to be a subgroup, choosing a witness
/// greedily in ascending index order.
template <FiniteGroup G>
Subgroup subgroup_from_bits(const G& g, Bitset bits) {
  const std::uint64_t n = bits.count();
  if (n == g.order()) return Subgroup(std::move(bits), g.generators());
  Subgroup target(std::move(bits), {});
  Closure<G> c(g, &target);
  target.bits().for_each([&](Index i) {
    if (c.size() < n && !c.contains(i)) c.add(i);
  });
  return Subgroup(target.bits(), c.witness());
}

/// C_within(H): elements of `within` (default: the whole group) commuting
/// with every generator of H.
template <FiniteGroup G>
Subgroup centralizer(const G& g, const Subgroup& h, const Subgroup* within = nullptr) {
  std::vector<typename G::element_type> gens;
  for (Index w : h.witness()) gens.push_back(g.element(w));
  Bitset bits = detail::parallel_filter(g.order(), [&](Index i) {
    if (within && !within->contains(i)) return false;
    const auto x = g.element(i);
    for (const auto& y : gens)
      if (!commutes(g, x, y)) return false;
    return true;
  });
  if (within && bits == within->bits()) return *within;
  if (!within && bits.count() == g.order()) return whole_group(g);
  return subgroup_from_bits(g, std::move(bits));
}

/// C_G(H) computed from the definition: commuting with every member of H.
template <FiniteGroup G>
Bitset centralizer_by_members(const G& g, const Subgroup& h) {
  std::vector<typename G::element_type> elems;
  h.bits().for_each([&](Index i) { elems.push_back(g.element(i)); });
  return detail::parallel_filter(g.order(), [&](Index i) {
    const auto x = g.element(i);
    for (const auto& y : elems)
      if (!commutes(g, x, y)) return false;
    return true;
  });
}

template <FiniteGroup G>
Subgroup center(const G& g, const Subgroup& h) {
  return centralizer(g, h, &h);
}

/// The subgroup of H generated by its elements of order dividing p.
template <FiniteGroup G>
Subgroup omega1(const G& g, const Subgroup& h) {
  const auto id = g.identity();
  const std::uint32_t p = g.prime();
  Bitset bits = detail::parallel_filter(g.order(), [&](Index i) {
    return h.contains(i) && power(g, g.element(i), p) == id;
  });
  const std::uint64_t n = bits.count();
  if (n == h.size() || n * p > h.size()) return h;
  Closure<G> c(g, &h);
  bits.for_each([&](Index i) { c.add(i); });
  return std::move(c).finish();
}

/// Closure of seeds under conjugation by the given elements, starting from
/// `base`, which must already be normalized by the conjugators.
template <FiniteGroup G>
Subgroup normal_closure(const G& g, std::span<const Index> seeds, std::span<const Index> conjugators,
                        const Subgroup* base = nullptr) {
  Closure<G> c = base ? Closure<G>(g, *base) : Closure<G>(g);
  std::size_t next = base ? base->witness().size() : 0;
  for (Index s : seeds) c.add(s);
  std::vector<typename G::element_type> conj, conj_inv;
  for (Index s : conjugators) {
    conj.push_back(g.element(s));
    conj_inv.push_back(g.inv(conj.back()));
  }
  while (next < c.witness().size()) {
    const auto w = g.element(c.witness()[next++]);
    for (std::size_t j = 0; j < conj.size(); ++j) {
      const Index x = g.index_of(g.mul(g.mul(conj_inv[j], w), conj[j]));
      if (!c.contains(x)) c.add(x);
    }
  }
  return std::move(c).finish();
}

/// Normal closure in the whole group.
template <FiniteGroup G>
Subgroup normal_closure(const G& g, std::span<const Index> seeds, const Subgroup* base = nullptr) {
  return normal_closure(g, seeds, std::span<const Index>(g.generators()), base);
}

template <FiniteGroup G>
bool is_normal(const G& g, const Subgroup& h) {
  for (Index wi : h.witness()) {
    const auto w = g.element(wi);
    for (Index si : g.generators()) {
      const auto s = g.element(si);
      if (!h.contains(g.index_of(g.mul(g.mul(g.inv(s), w), s)))) return false;
    }
  }
  return true;
}

template <FiniteGroup G>
bool is_abelian(const G& g, const Subgroup& h) {
  const auto& w = h.witness();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (!commutes(g, g.element(w[i]), g.element(w[j]))) return false;
  return true;
}

template <FiniteGroup G>
bool is_elementary_abelian(const G& g, const Subgroup& h) {
  if (!is_abelian(g, h)) return false;
  for (Index w : h.witness())
    if (!(power(g, g.element(w), g.prime()) == g.identity())) return false;
  return true;
}

/// <H, K>.
template <FiniteGroup G>
Subgroup product_subgroup(const G& g, const Subgroup& h, const Subgroup& k) {
  Closure<G> c(g, h);
  for (Index w : k.witness()) c.add(w);
  return std::move(c).finish();
}

/// |HK| = |H||K| / |H n K| as a set.
inline std::uint64_t product_set_size(const Subgroup& h, const Subgroup& k) {
  Bitset both = h.bits();
  both &= k.bits();
  return h.size() * k.size() / both.count();
}

/// How [A, B] is generated.
///
/// members: all commutators [a, b] with a in A, b in B (the definition).
/// generators: commutators of the two witnesses, closed under conjugation by
///   both witnesses; [A, B] is the normal closure of those in <A, B>.
/// automatic: members while |A||B| stays below kMembersRouteLimit.
enum class CommutatorRoute { automatic, members, generators };

inline constexpr std::uint64_t kMembersRouteLimit = std::uint64_t{1} << 22;

template <FiniteGroup G>
Subgroup commutator_subgroup(const G& g, const Subgroup& a, const Subgroup& b,
                             CommutatorRoute route = CommutatorRoute::automatic) {
  if (a.is_trivial() || b.is_trivial()) return trivial_subgroup(g);
  if (route == CommutatorRoute::automatic)
    route = a.size() * b.size() <= kMembersRouteLimit ? CommutatorRoute::members
                                                      : CommutatorRoute::generators;
  if (route == CommutatorRoute::generators) {
    std::vector<Index> seeds, conjugators;
    for (Index x : a.witness())
      for (Index y : b.witness()) {
        const Index c = g.index_of(commutator(g, g.element(x), g.element(y)));
        if (c != kIdentityIndex) seeds.push_back(c);
      }
    if (seeds.empty()) return trivial_subgroup(g);
    conjugators = a.witness();
    conjugators.insert(conjugators.end(), b.witness().begin(), b.witness().end());
    return normal_closure(g, seeds, conjugators);
  }
  using E = typename G::element_type;
  std::vector<E> bs, bs_inv;
  b.bits().for_each([&](Index i) {
    bs.push_back(g.element(i));
    bs_inv.push_back(g.inv(bs.back()));
  });
  Closure<G> c(g);
  a.bits().for_each([&](Index i) {
    const E x = g.element(i);
    const E x_inv = g.inv(x);
    for (std::size_t j = 0; j < bs.size(); ++j) {
      // x^-1 (y^-1 x y)
      const Index k = g.index_of(g.mul(x_inv, g.mul(g.mul(bs_inv[j], x), bs[j])));
      if (!c.contains(k)) c.add(k);
    }
  });
  return std::move(c).finish();
}

/// [A, B; t] with [A, B; 1] = [A, B] and [A, B; s+1] = [[A, B; s], B].
template <FiniteGroup G>
Subgroup iterated_commutator(const G& g, const Subgroup& a, const Subgroup& b, unsigned t,
                             CommutatorRoute route = CommutatorRoute::automatic) {
  if (t == 0) throw invalid_parameter("iterated commutator depth must be positive");
  Subgroup k = commutator_subgroup(g, a, b, route);
  for (unsigned s = 1; s < t && !k.is_trivial(); ++s) k = commutator_subgroup(g, k, b, route);
  return k;
}

/// Whether G is generated by its abelian normal subgroups. Every abelian
/// normal subgroup is generated by elements whose normal closures are
/// abelian, so it suffices to collect those elements.
template <FiniteGroup G>
bool generated_by_abelian_normal_subgroups(const G& g) {
  Closure<G> c(g);
  for (Index i = 1; i < g.order() && c.size() < g.order(); ++i) {
    if (c.contains(i)) continue;
    const Index seed[] = {i};
    const Subgroup n = normal_closure(g, seed);
    if (is_abelian(g, n))
      for (Index w : n.witness()) c.add(w);
  }
  return c.size() == g.order();
}

/// Whether n is a power of the group prime.
template <FiniteGroup G>
bool is_p_power(const G& g, std::uint64_t n) {
  while (n > 1 && n % g.prime() == 0) n /= g.prime();
  return n == 1;
}

}  // namespace unisylow
