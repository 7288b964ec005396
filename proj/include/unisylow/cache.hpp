#pragma once

// On-disk group cache.
//
//   "USYLCACH"  u32 version  u32 tag
//   tag 0 (matrix): u32 p, u32 k, u32 modulus length, u32 coefficients...,
//                   u32 n, u32 parity (0 even, 1 odd), u64 count,
//                   then count elements of n*n u16 field indices, row-major
//   tag 1 (wreath): u32 p, u32 r, u32 height, u64 count, u32 digits,
//                   then count elements of `digits` u32 values
//
// All integers little-endian; elements appear in index order.

#include <array>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "unitary.hpp"
#include "wreath.hpp"

namespace unisylow {

inline constexpr char kCacheMagic[8] = {'U', 'S', 'Y', 'L', 'C', 'A', 'C', 'H'};
inline constexpr std::uint32_t kCacheVersion = 1;

enum class CacheTag : std::uint32_t { matrix = 0, wreath = 1 };

namespace detail {

class ByteBuffer {
 public:
  void u16(std::uint16_t v) {
    bytes_.push_back(static_cast<char>(v & 0xff));
    bytes_.push_back(static_cast<char>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  }
  void raw(const char* p, std::size_t n) { bytes_.insert(bytes_.end(), p, p + n); }
  std::size_t size() const { return bytes_.size(); }
  const std::vector<char>& bytes() const { return bytes_; }
  void clear() { bytes_.clear(); }

 private:
  std::vector<char> bytes_;
};

inline std::uint32_t le32(const char* p) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(p[i]);
  return v;
}

inline std::uint64_t le64(const char* p) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(p[i]);
  return v;
}

inline void header_for(ByteBuffer& b, const SylowGroup& g) {
  b.raw(kCacheMagic, 8);
  b.u32(kCacheVersion);
  b.u32(static_cast<std::uint32_t>(CacheTag::matrix));
  const Field& f = g.field();
  b.u32(f.p());
  b.u32(f.k());
  const auto mod = f.modulus();
  b.u32(static_cast<std::uint32_t>(mod.size()));
  for (auto c : mod) b.u32(c);
  b.u32(g.params().n);
  b.u32(g.odd() ? 1 : 0);
  b.u64(g.order());
}

inline void header_for(ByteBuffer& b, const WreathGroup& g) {
  b.raw(kCacheMagic, 8);
  b.u32(kCacheVersion);
  b.u32(static_cast<std::uint32_t>(CacheTag::wreath));
  b.u32(g.spec().p);
  b.u32(g.spec().r);
  b.u32(g.spec().height);
  b.u64(g.order());
  b.u32(static_cast<std::uint32_t>(g.digit_count()));
}

inline void element_bytes(ByteBuffer& b, const SylowGroup& g, Index i) {
  const Mat x = g.element(i);
  for (std::size_t r = 0; r < x.dim(); ++r)
    for (std::size_t c = 0; c < x.dim(); ++c) b.u16(x(r, c).value);
}

inline void element_bytes(ByteBuffer& b, const WreathGroup& g, Index i) {
  const WreathElem e = g.element(i);
  for (std::size_t d = 0; d < g.digit_count(); ++d) b.u32(e.d[d]);
}

/// Streams the serialized form of g to sink in chunks.
template <class G>
void serialize(const G& g, const std::function<void(const std::vector<char>&)>& sink) {
  ByteBuffer b;
  header_for(b, g);
  sink(b.bytes());
  b.clear();
  for (std::uint64_t i = 0; i < g.order(); ++i) {
    element_bytes(b, g, static_cast<Index>(i));
    if (b.size() >= (1u << 20)) {
      sink(b.bytes());
      b.clear();
    }
  }
  if (b.size()) sink(b.bytes());
}

}  // namespace detail

struct CacheHeader {
  CacheTag tag = CacheTag::matrix;
  std::vector<std::uint32_t> fields;  // everything between the tag and the elements
  std::uint64_t count = 0;
  std::uint64_t header_bytes = 0;
};

template <class G>
std::vector<char> cache_header_bytes(const G& g) {
  detail::ByteBuffer b;
  detail::header_for(b, g);
  return b.bytes();
}

/// Writes the cache file for g; returns the number of bytes written.
template <class G>
std::uint64_t write_cache(const std::filesystem::path& path, const G& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");
  std::uint64_t written = 0;
  detail::serialize(g, [&](const std::vector<char>& chunk) {
    out.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
    written += chunk.size();
  });
  out.flush();
  if (!out) throw io_error("failed writing " + path.string());
  return written;
}

/// Parses the header of a cache file.
inline CacheHeader read_cache_header(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());
  char fixed[16];
  if (!in.read(fixed, 16)) throw cache_mismatch(path.string() + ": truncated header");
  if (std::memcmp(fixed, kCacheMagic, 8) != 0) throw cache_mismatch(path.string() + ": not a group cache file");
  if (detail::le32(fixed + 8) != kCacheVersion) throw cache_mismatch(path.string() + ": unsupported cache version");
  CacheHeader h;
  const std::uint32_t tag = detail::le32(fixed + 12);
  if (tag > 1) throw cache_mismatch(path.string() + ": unknown representation tag");
  h.tag = static_cast<CacheTag>(tag);
  auto read32 = [&] {
    char b[4];
    if (!in.read(b, 4)) throw cache_mismatch(path.string() + ": truncated header");
    return detail::le32(b);
  };
  auto read64 = [&] {
    char b[8];
    if (!in.read(b, 8)) throw cache_mismatch(path.string() + ": truncated header");
    return detail::le64(b);
  };
  if (h.tag == CacheTag::matrix) {
    h.fields.push_back(read32());  // p
    h.fields.push_back(read32());  // k
    const std::uint32_t len = read32();
    if (len > 64) throw cache_mismatch(path.string() + ": implausible modulus length");
    h.fields.push_back(len);
    for (std::uint32_t i = 0; i < len; ++i) h.fields.push_back(read32());
    h.fields.push_back(read32());  // n
    h.fields.push_back(read32());  // parity
    h.count = read64();
  } else {
    h.fields.push_back(read32());  // p
    h.fields.push_back(read32());  // r
    h.fields.push_back(read32());  // height
    h.count = read64();
    h.fields.push_back(read32());  // digits
  }
  h.header_bytes = static_cast<std::uint64_t>(in.tellg());
  return h;
}

struct CacheComparison {
  std::uint64_t bytes = 0;
  bool identical = false;
};

/// Compares an existing cache file against g. A header describing a
/// different group throws cache_mismatch; differing element bytes are
/// reported as not identical.
template <class G>
CacheComparison compare_cache(const std::filesystem::path& path, const G& g) {
  const std::vector<char> expected = cache_header_bytes(g);
  const CacheHeader h = read_cache_header(path);
  std::ifstream in(path, std::ios::binary);
  std::vector<char> actual(expected.size());
  if (h.header_bytes != expected.size() || !in.read(actual.data(), static_cast<std::streamsize>(actual.size())) ||
      actual != expected)
    throw cache_mismatch(path.string() + ": header does not describe the requested group");
  in.seekg(0);
  CacheComparison cmp;
  cmp.identical = true;
  std::vector<char> buf;
  detail::serialize(g, [&](const std::vector<char>& chunk) {
    if (!cmp.identical) return;
    buf.resize(chunk.size());
    if (!in.read(buf.data(), static_cast<std::streamsize>(buf.size())) || buf != chunk) cmp.identical = false;
    cmp.bytes += chunk.size();
  });
  if (cmp.identical && in.peek() != std::char_traits<char>::eof()) cmp.identical = false;
  return cmp;
}

}  // namespace unisylow
