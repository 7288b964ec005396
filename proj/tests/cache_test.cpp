#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "unisylow/cache.hpp"

using namespace unisylow;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("unisylow_cache_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

std::vector<unsigned char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<unsigned char>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::uint64_t le(const std::vector<unsigned char>& b, std::size_t at, int width) {
  std::uint64_t v = 0;
  for (int i = width - 1; i >= 0; --i) v = (v << 8) | b[at + i];
  return v;
}

}  // namespace

TEST_F(CacheTest, MatrixLayoutDecodesByHand) {
  const SylowGroup g(UnitaryParams::make(5, 5, 3));
  const fs::path path = dir_ / "s.cache";
  const std::uint64_t written = write_cache(path, g);
  const auto b = slurp(path);
  ASSERT_EQ(b.size(), written);
  EXPECT_EQ(std::string(b.begin(), b.begin() + 8), "USYLCACH");
  EXPECT_EQ(le(b, 8, 4), 1u);   // version
  EXPECT_EQ(le(b, 12, 4), 0u);  // matrix tag
  EXPECT_EQ(le(b, 16, 4), 5u);  // p
  EXPECT_EQ(le(b, 20, 4), 1u);  // k
  const std::size_t len = le(b, 24, 4);
  ASSERT_EQ(len, 3u);
  const std::size_t after_mod = 28 + 4 * len;
  EXPECT_EQ(le(b, after_mod, 4), 3u);      // n
  EXPECT_EQ(le(b, after_mod + 4, 4), 1u);  // odd
  EXPECT_EQ(le(b, after_mod + 8, 8), 125u);
  const std::size_t body = after_mod + 16;
  ASSERT_EQ(b.size(), body + 125 * 9 * 2);
  for (Index i = 0; i < 125; ++i) {
    const Mat x = g.element(i);
    for (std::size_t e = 0; e < 9; ++e)
      EXPECT_EQ(le(b, body + (i * 9 + e) * 2, 2), x(e / 3, e % 3).value) << i;
  }
  const CacheHeader h = read_cache_header(path);
  EXPECT_EQ(h.tag, CacheTag::matrix);
  EXPECT_EQ(h.count, 125u);
  EXPECT_EQ(h.header_bytes, body);
}

TEST_F(CacheTest, WreathLayout) {
  const WreathGroup w({5, 1, 1});
  const fs::path path = dir_ / "w.cache";
  write_cache(path, w);
  const auto b = slurp(path);
  EXPECT_EQ(le(b, 12, 4), 1u);
  EXPECT_EQ(le(b, 16, 4), 5u);
  EXPECT_EQ(le(b, 20, 4), 1u);
  EXPECT_EQ(le(b, 24, 4), 1u);
  EXPECT_EQ(le(b, 28, 8), 15625u);  // C5 wr C5 has 5^6 elements
  const std::size_t digits = le(b, 36, 4);
  EXPECT_EQ(digits, w.digit_count());
  ASSERT_EQ(b.size(), 40 + 15625 * digits * 4);
  for (Index i = 0; i < 15625; i += 97) {
    const WreathElem e = w.element(i);
    for (std::size_t d = 0; d < digits; ++d) EXPECT_EQ(le(b, 40 + (i * digits + d) * 4, 4), e.d[d]);
  }
}

TEST_F(CacheTest, RewritesAreByteIdentical) {
  const SylowGroup g(UnitaryParams::make(5, 25, 2));
  write_cache(dir_ / "a.cache", g);
  write_cache(dir_ / "b.cache", SylowGroup(UnitaryParams::make(5, 25, 2)));
  EXPECT_EQ(slurp(dir_ / "a.cache"), slurp(dir_ / "b.cache"));
  const CacheComparison cmp = compare_cache(dir_ / "a.cache", g);
  EXPECT_TRUE(cmp.identical);
  EXPECT_EQ(cmp.bytes, fs::file_size(dir_ / "a.cache"));
}

TEST_F(CacheTest, DetectsChangedElements) {
  const SylowGroup g(UnitaryParams::make(5, 5, 3));
  const fs::path path = dir_ / "s.cache";
  write_cache(path, g);
  auto b = slurp(path);
  b[b.size() - 1] ^= 1;
  spit(path, b);
  EXPECT_FALSE(compare_cache(path, g).identical);
  b.pop_back();
  spit(path, b);
  EXPECT_FALSE(compare_cache(path, g).identical);
  b.push_back(0);
  b.push_back(0);
  spit(path, b);
  EXPECT_FALSE(compare_cache(path, g).identical);
}

TEST_F(CacheTest, HeaderMismatchesThrow) {
  const SylowGroup g3(UnitaryParams::make(5, 5, 3));
  const SylowGroup g2(UnitaryParams::make(5, 5, 2));
  const fs::path path = dir_ / "s.cache";
  write_cache(path, g3);
  EXPECT_THROW(compare_cache(path, g2), cache_mismatch);
  EXPECT_THROW(compare_cache(path, WreathGroup({5, 1, 1})), cache_mismatch);

  auto b = slurp(path);
  auto bad = b;
  bad[0] = 'X';
  spit(path, bad);
  EXPECT_THROW(read_cache_header(path), cache_mismatch);
  bad = b;
  bad[8] = 2;
  spit(path, bad);
  EXPECT_THROW(read_cache_header(path), cache_mismatch);
  bad = b;
  bad[12] = 7;
  spit(path, bad);
  EXPECT_THROW(read_cache_header(path), cache_mismatch);
  spit(path, std::vector<unsigned char>(b.begin(), b.begin() + 20));
  EXPECT_THROW(read_cache_header(path), cache_mismatch);
}

TEST_F(CacheTest, IoErrors) {
  const SylowGroup g(UnitaryParams::make(5, 5, 2));
  EXPECT_THROW(read_cache_header(dir_ / "missing.cache"), io_error);
  EXPECT_THROW(write_cache(dir_ / "no" / "such" / "dir.cache", g), io_error);
}
