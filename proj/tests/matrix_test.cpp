#include <gtest/gtest.h>

#include "unisylow/matrix.hpp"
#include "unisylow/random.hpp"

using namespace unisylow;

namespace {

// Naive product without the zero-skipping of the library routine.
Mat naive_mul(const Field& f, const Mat& a, const Mat& b) {
  Mat r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      FieldElem s = Field::zero();
      for (std::size_t k = 0; k < a.dim(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      r(i, j) = s;
    }
  return r;
}

Mat random_persymmetric(Rng& rng, const Field& f, std::size_t m) {
  Mat b = rng.matrix(f, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c)
      if (a + c > m - 1) b(m - 1 - c, m - 1 - a) = b(a, c);
  return b;
}

}  // namespace

TEST(Matrix, FlipTransposeSmallCases) {
  auto f = Field::create(5, 1);
  for (std::size_t m = 1; m <= 6; ++m) EXPECT_EQ(flip_transpose(Mat::skew_identity(m)), Mat::skew_identity(m));
  Mat b(2);
  b(0, 0) = FieldElem(1);
  b(0, 1) = FieldElem(2);
  b(1, 0) = FieldElem(3);
  b(1, 1) = FieldElem(4);
  Mat expected(2);
  expected(0, 0) = FieldElem(4);
  expected(0, 1) = FieldElem(2);
  expected(1, 0) = FieldElem(3);
  expected(1, 1) = FieldElem(1);
  EXPECT_EQ(flip_transpose(b), expected);
}

TEST(Matrix, SkewIdentitySquaresToIdentity) {
  auto f = Field::create(5, 1);
  for (std::size_t m = 1; m <= 6; ++m) {
    const Mat q = Mat::skew_identity(m);
    EXPECT_EQ(mul(*f, q, q), Mat::identity(m));
  }
}

TEST(Matrix, FlipTransposeIdentitiesOnRandomMatrices) {
  for (auto [p, k] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}}) {
    auto fp = Field::create(p, k);
    const Field& f = *fp;
    Rng rng(7);
    for (std::size_t m = 1; m <= 4; ++m) {
      const Mat q = Mat::skew_identity(m);
      for (int s = 0; s < 300; ++s) {
        const Mat b = rng.matrix(f, m), c = rng.matrix(f, m);
        ASSERT_EQ(mul(f, b, c), naive_mul(f, b, c));
        ASSERT_EQ(flip_transpose(b), naive_mul(f, naive_mul(f, q, transpose(b)), q));
        ASSERT_EQ(flip_transpose(mul(f, b, c)), mul(f, flip_transpose(c), flip_transpose(b)));
        const Mat d = rng.invertible_matrix(f, m);
        ASSERT_EQ(inverse(f, flip_transpose(d)), flip_transpose(inverse(f, d)));
        ASSERT_EQ(mul(f, d, inverse(f, d)), Mat::identity(m));
        const Mat ps = random_persymmetric(rng, f, m);
        ASSERT_TRUE(is_persymmetric(ps));
        ASSERT_TRUE(is_symmetric(mul(f, q, ps)));
        ASSERT_TRUE(is_symmetric(mul(f, ps, q)));
        ASSERT_EQ(is_persymmetric(b), is_symmetric(mul(f, q, b)));
        ASSERT_EQ(is_persymmetric(b), is_symmetric(mul(f, b, q)));
      }
    }
  }
}

TEST(Matrix, UnitriangularInverse) {
  auto f = Field::create(5, 1);
  Rng rng(5);
  for (int s = 0; s < 200; ++s) {
    const Mat l = rng.lower_unitriangular(*f, 5);
    const Mat li = inverse(*f, l);
    EXPECT_TRUE(is_lower_unitriangular(li));
    EXPECT_EQ(mul(*f, l, li), Mat::identity(5));
    EXPECT_EQ(mul(*f, li, l), Mat::identity(5));
  }
}

TEST(Matrix, SingularInverseThrows) {
  auto f = Field::create(5, 1);
  Mat z(3);
  EXPECT_THROW(inverse(*f, z), singular_matrix);
  EXPECT_FALSE(is_invertible(*f, z));
  Mat r = Mat::identity(3);
  r(2, 2) = Field::zero();
  r(2, 0) = Field::one();
  r(0, 0) = Field::zero();
  EXPECT_THROW(inverse(*f, r), singular_matrix);
}

TEST(Matrix, ZeroMatrixSatisfiesEveryForm) {
  auto f = Field::create(5, 1);
  for (std::size_t m = 1; m <= 4; ++m) {
    const Mat z(m);
    EXPECT_TRUE(is_persymmetric(z));
    EXPECT_TRUE(is_skew_persymmetric(*f, z));
    EXPECT_TRUE(is_conj_skew_persymmetric(*f, z));
    EXPECT_TRUE(is_alpha_conj_skew_persymmetric(*f, z, Row(m)));
  }
}

TEST(Matrix, ConjSkewPersymmetricCountTwoByTwo) {
  auto f = Field::create(5, 1);
  const std::uint32_t n = f->size();
  std::uint64_t count = 0;
  Mat b(2);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t c = 0; c < n; ++c)
      for (std::uint32_t d = 0; d < n; ++d)
        for (std::uint32_t e = 0; e < n; ++e) {
          b(0, 0) = FieldElem(static_cast<std::uint16_t>(a));
          b(0, 1) = FieldElem(static_cast<std::uint16_t>(c));
          b(1, 0) = FieldElem(static_cast<std::uint16_t>(d));
          b(1, 1) = FieldElem(static_cast<std::uint16_t>(e));
          if (is_conj_skew_persymmetric(*f, b)) ++count;
        }
  EXPECT_EQ(count, 625u);
}

TEST(Matrix, AlphaFormWithZeroRowIsConjSkewPersymmetric) {
  auto f = Field::create(5, 1);
  Rng rng(17);
  int agree_true = 0;
  for (int s = 0; s < 1000; ++s) {
    const std::size_t m = 1 + rng.below(3);
    Mat b = rng.matrix(*f, m);
    if (s % 2 == 0) {
      // Force a conj-skew-persymmetric sample half of the time.
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c)
          if (a + c < m - 1) b(a, c) = f->neg(f->conj(b(m - 1 - c, m - 1 - a)));
      for (std::size_t a = 0; a < m; ++a) {
        FieldElem x = b(a, m - 1 - a);
        b(a, m - 1 - a) = f->sub(x, f->conj(x));
      }
    }
    const bool csp = is_conj_skew_persymmetric(*f, b);
    EXPECT_EQ(is_alpha_conj_skew_persymmetric(*f, b, Row(m)), csp);
    agree_true += csp;
  }
  EXPECT_GE(agree_true, 500);
}

TEST(Matrix, AlphaFormDimensionMismatchThrows) {
  auto f = Field::create(5, 1);
  EXPECT_THROW(is_alpha_conj_skew_persymmetric(*f, Mat(2), Row(3)), invalid_parameter);
  EXPECT_THROW(mul(*f, Mat(2), Mat(3)), invalid_parameter);
  EXPECT_THROW(Mat(0), invalid_parameter);
  EXPECT_THROW(Mat(9), invalid_parameter);
}
