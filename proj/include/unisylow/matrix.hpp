#pragma once

// Square matrices over F_{q^2} with the flip-transpose calculus and the
// persymmetric family of form predicates.
//
// Mat is a fixed-capacity value type (no heap); entries beyond dim*dim are
// kept zero so that defaulted equality is exact.

#include <array>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "field.hpp"

namespace unisylow {

inline constexpr std::size_t kMaxDim = 8;

class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) {
    if (dim == 0 || dim > kMaxDim)
      throw invalid_parameter("matrix dimension must be in 1.." + std::to_string(kMaxDim));
  }

  static Mat identity(std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Field::one();
    return m;
  }

  /// The matrix with ones on the skew-diagonal and zeros elsewhere.
  static Mat skew_identity(std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, dim - 1 - i) = Field::one();
    return m;
  }

  std::size_t dim() const { return dim_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  /// Row-major view of the dim*dim entries.
  const FieldElem* data() const { return e_.data(); }

  bool is_zero() const {
    for (std::size_t i = 0; i < std::size_t(dim_) * dim_; ++i)
      if (!e_[i].is_zero()) return false;
    return true;
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::uint8_t dim_ = 0;
  std::array<FieldElem, kMaxDim * kMaxDim> e_{};
};

/// Row vector of length <= kMaxDim.
class Row {
 public:
  Row() = default;
  explicit Row(std::size_t len) : len_(static_cast<std::uint8_t>(len)) {
    if (len > kMaxDim) throw invalid_parameter("row length exceeds kMaxDim");
  }

  std::size_t size() const { return len_; }
  FieldElem& operator[](std::size_t i) { return v_[i]; }
  FieldElem operator[](std::size_t i) const { return v_[i]; }

  bool is_zero() const {
    for (std::size_t i = 0; i < len_; ++i)
      if (!v_[i].is_zero()) return false;
    return true;
  }

  friend bool operator==(const Row&, const Row&) = default;

 private:
  std::uint8_t len_ = 0;
  std::array<FieldElem, kMaxDim> v_{};
};

inline void require_same_dim(const Mat& a, const Mat& b) {
  if (a.dim() != b.dim()) throw invalid_parameter("matrix dimension mismatch");
}

/// Reflection in the skew-diagonal: (B^F)(a,b) = B(m-1-b, m-1-a).
inline Mat flip_transpose(const Mat& b) {
  const std::size_t m = b.dim();
  Mat r(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r(i, j) = b(m - 1 - j, m - 1 - i);
  return r;
}

inline Mat transpose(const Mat& b) {
  Mat r(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) r(i, j) = b(j, i);
  return r;
}

/// Entrywise Frobenius conjugation.
inline Mat conj(const Field& f, const Mat& b) {
  Mat r(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) r(i, j) = f.conj(b(i, j));
  return r;
}

inline Mat neg(const Field& f, const Mat& b) {
  Mat r(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) r(i, j) = f.neg(b(i, j));
  return r;
}

inline Mat add(const Field& f, const Mat& a, const Mat& b) {
  require_same_dim(a, b);
  Mat r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  return r;
}

inline Mat sub(const Field& f, const Mat& a, const Mat& b) {
  require_same_dim(a, b);
  Mat r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
  return r;
}

inline Mat scale(const Field& f, FieldElem s, const Mat& b) {
  Mat r(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) r(i, j) = f.mul(s, b(i, j));
  return r;
}

inline Mat mul(const Field& f, const Mat& a, const Mat& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  Mat r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const FieldElem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const FieldElem bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) = f.add(r(i, j), f.mul(aik, bkj));
      }
    }
  return r;
}

inline bool is_lower_unitriangular(const Mat& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a(i, i) != Field::one()) return false;
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!a(i, j).is_zero()) return false;
  }
  return true;
}

/// Inverse of a lower unitriangular matrix by forward substitution.
inline Mat unitriangular_inverse(const Field& f, const Mat& a) {
  const std::size_t n = a.dim();
  Mat r = Mat::identity(n);
  // Column by column: solve A x = e_j with x_i = 0 for i < j.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i) {
      FieldElem acc = Field::zero();
      for (std::size_t k = j; k < i; ++k) {
        const FieldElem aik = a(i, k);
        if (!aik.is_zero()) acc = f.add(acc, f.mul(aik, r(k, j)));
      }
      r(i, j) = f.neg(acc);
    }
  return r;
}

/// General inverse by Gauss-Jordan elimination; lower unitriangular input
/// takes the substitution fast path.
inline Mat inverse(const Field& f, const Mat& a) {
  if (is_lower_unitriangular(a)) return unitriangular_inverse(f, a);
  const std::size_t n = a.dim();
  Mat w = a, r = Mat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) throw singular_matrix();
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(col, j));
        std::swap(r(piv, j), r(col, j));
      }
    const FieldElem s = f.inv(w(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      w(col, j) = f.mul(s, w(col, j));
      r(col, j) = f.mul(s, r(col, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w(i, col).is_zero()) continue;
      const FieldElem t = w(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) = f.sub(w(i, j), f.mul(t, w(col, j)));
        r(i, j) = f.sub(r(i, j), f.mul(t, r(col, j)));
      }
    }
  }
  return r;
}

inline bool is_invertible(const Field& f, const Mat& a) {
  try {
    (void)inverse(f, a);
    return true;
  } catch (const singular_matrix&) {
    return false;
  }
}

inline bool is_symmetric(const Mat& b) { return transpose(b) == b; }

inline bool is_skew_symmetric(const Field& f, const Mat& b) { return transpose(b) == neg(f, b); }

/// B^F = B.
inline bool is_persymmetric(const Mat& b) { return flip_transpose(b) == b; }

/// B^F = -B.
inline bool is_skew_persymmetric(const Field& f, const Mat& b) {
  return flip_transpose(b) == neg(f, b);
}

/// conj(B)^F = -B.
inline bool is_conj_skew_persymmetric(const Field& f, const Mat& b) {
  return flip_transpose(conj(f, b)) == neg(f, b);
}

/// Q conj(alpha)^T alpha: entry (a,b) is conj(alpha[m-1-a]) * alpha[b].
inline Mat skew_outer(const Field& f, const Row& alpha) {
  const std::size_t m = alpha.size();
  Mat r(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) r(a, b) = f.mul(f.conj(alpha[m - 1 - a]), alpha[b]);
  return r;
}

/// B + conj(B)^F = -Q conj(alpha)^T alpha.
inline bool is_alpha_conj_skew_persymmetric(const Field& f, const Mat& b, const Row& alpha) {
  if (alpha.size() != b.dim()) throw invalid_parameter("row length does not match matrix dimension");
  return add(f, b, flip_transpose(conj(f, b))) == neg(f, skew_outer(f, alpha));
}

/// Entry indices, rows separated by ';'.
inline std::string to_string(const Mat& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < m.dim(); ++j) out += (j ? " " : "") + std::to_string(m(i, j).value);
  }
  return out + "]";
}

}  // namespace unisylow
