#pragma once

#include <cstdint>
#include <random>

#include "field.hpp"
#include "matrix.hpp"

namespace unisylow {

/// Seeded generator with platform-independent bounded draws.
///
/// std::mt19937_64 output is fixed by the standard; the distributions are not,
/// so bounded integers use rejection sampling on the raw stream instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  FieldElem element(const Field& f) { return FieldElem(static_cast<std::uint16_t>(below(f.size()))); }

  Mat matrix(const Field& f, std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = element(f);
    return m;
  }

  Row row(const Field& f, std::size_t len) {
    Row r(len);
    for (std::size_t i = 0; i < len; ++i) r[i] = element(f);
    return r;
  }

  Mat invertible_matrix(const Field& f, std::size_t dim) {
    for (;;) {
      Mat m = matrix(f, dim);
      if (is_invertible(f, m)) return m;
    }
  }

  Mat strictly_lower(const Field& f, std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < i; ++j) m(i, j) = element(f);
    return m;
  }

  Mat lower_unitriangular(const Field& f, std::size_t dim) {
    Mat m = strictly_lower(f, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Field::one();
    return m;
  }

  template <class Vec>
  void shuffle(Vec& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace unisylow
