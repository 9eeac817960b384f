#include "vqcrypt/container.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "vqcrypt/detail/unshuffle.hpp"
#include "vqcrypt/error.hpp"

namespace vqcrypt {
namespace {

constexpr uint8_t kMagic[4] = {'V', 'Q', 'C', '1'};

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<uint8_t>(v >> s));
}

uint16_t get_u16(std::span<const uint8_t> b, size_t at) {
  return static_cast<uint16_t>(b[at] | (b[at + 1] << 8));
}

uint32_t get_u32(std::span<const uint8_t> b, size_t at) {
  return uint32_t{b[at]} | (uint32_t{b[at + 1]} << 8) | (uint32_t{b[at + 2]} << 16) | (uint32_t{b[at + 3]} << 24);
}

uint8_t scheme_flag(Scheme s) {
  switch (s) {
    case Scheme::kFull: return kFlagFull;
    case Scheme::kRandomIndex: return kFlagRandomIndex;
    case Scheme::kPlain: return kFlagPlain;
  }
  throw std::invalid_argument("unknown scheme");
}

std::vector<uint8_t> header(uint8_t flags, uint32_t orig_w, uint32_t orig_h, BlockDims block,
                            const Codebook& cb) {
  if (block.w == 0 || block.h == 0 || block.w > 255 || block.h > 255) {
    throw std::invalid_argument("serialize: block dimensions must be in [1, 255]");
  }
  if (cb.empty() || cb.size() > 65535) throw std::invalid_argument("serialize: codebook size must be in [1, 65535]");
  if (cb.dim() != block.area()) throw StructuralError("serialize: codebook dimension does not match block size");
  std::vector<uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.push_back(kContainerVersion);
  out.push_back(flags);
  put_u32(out, orig_w);
  put_u32(out, orig_h);
  out.push_back(static_cast<uint8_t>(block.w));
  out.push_back(static_cast<uint8_t>(block.h));
  put_u16(out, static_cast<uint16_t>(cb.size()));
  out.insert(out.end(), cb.data().begin(), cb.data().end());
  return out;
}

struct Header {
  uint8_t flags;
  uint32_t orig_w;
  uint32_t orig_h;
  BlockDims block;
  size_t m;
};

Header parse_header(std::span<const uint8_t> bytes) {
  if (bytes.size() < sizeof(kMagic)) throw CorruptionError(CorruptionKind::kTruncated, "vqc: file too short");
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw CorruptionError(CorruptionKind::kBadMagic, "vqc: bad magic");
  }
  if (bytes.size() < kHeaderSize) throw CorruptionError(CorruptionKind::kTruncated, "vqc: truncated header");
  if (bytes[4] != kContainerVersion) {
    throw CorruptionError(CorruptionKind::kBadVersion, "vqc: unsupported version " + std::to_string(bytes[4]));
  }
  Header h{bytes[5], get_u32(bytes, 6), get_u32(bytes, 10), {bytes[14], bytes[15]}, get_u16(bytes, 16)};
  if (h.block.w == 0 || h.block.h == 0 || h.m == 0) {
    throw CorruptionError(CorruptionKind::kBadHeader, "vqc: zero block dimension or codebook size");
  }
  return h;
}

void check_length(size_t actual, size_t expected) {
  if (actual < expected) {
    throw CorruptionError(CorruptionKind::kTruncated, "vqc: expected " + std::to_string(expected) +
                                                          " bytes, got " + std::to_string(actual));
  }
  if (actual > expected) {
    throw CorruptionError(CorruptionKind::kTrailingBytes, "vqc: " + std::to_string(actual - expected) +
                                                              " unexpected trailing bytes");
  }
}

Codebook read_codebook(std::span<const uint8_t> bytes, const Header& h) {
  const size_t len = h.m * h.block.area();
  return Codebook(h.block.area(), std::vector<uint8_t>(bytes.begin() + kHeaderSize,
                                                       bytes.begin() + static_cast<ptrdiff_t>(kHeaderSize + len)));
}

}  // namespace

size_t container_size(size_t m, BlockDims block, uint32_t orig_w, uint32_t orig_h) {
  const size_t blocks = size_t{blocks_along(orig_w, block.w)} * blocks_along(orig_h, block.h);
  return kHeaderSize + m * block.area() + 2 * blocks;
}

CipherContainer make_container(Scheme scheme, const EncryptResult& r, BlockDims block, uint32_t orig_w,
                               uint32_t orig_h) {
  return {scheme, orig_w, orig_h, block, r.shuffled_codebook, r.index_matrix};
}

std::vector<uint8_t> serialize(const CipherContainer& c) {
  if (c.orig_w == 0 || c.orig_h == 0) throw std::invalid_argument("serialize: image dimensions must be positive");
  const auto gw = blocks_along(c.orig_w, c.block.w);
  const auto gh = blocks_along(c.orig_h, c.block.h);
  if (c.index_matrix.size() != size_t{gw} * gh) {
    throw StructuralError("serialize: index matrix does not match the block grid");
  }
  detail::check_indices(c.index_matrix.indices, c.codebook.size());
  auto out = header(scheme_flag(c.scheme), c.orig_w, c.orig_h, c.block, c.codebook);
  out.reserve(out.size() + 2 * c.index_matrix.size());
  for (auto k : c.index_matrix.indices) put_u16(out, k);
  return out;
}

CipherContainer deserialize(std::span<const uint8_t> bytes) {
  const Header h = parse_header(bytes);
  Scheme scheme;
  switch (h.flags) {
    case kFlagFull: scheme = Scheme::kFull; break;
    case kFlagRandomIndex: scheme = Scheme::kRandomIndex; break;
    case kFlagPlain: scheme = Scheme::kPlain; break;
    default:
      throw CorruptionError(CorruptionKind::kBadFlags, "vqc: flags 0x" + std::to_string(h.flags) +
                                                           " do not name exactly one scheme");
  }
  if (h.orig_w == 0 || h.orig_h == 0) throw CorruptionError(CorruptionKind::kBadHeader, "vqc: zero image dimension");
  check_length(bytes.size(), container_size(h.m, h.block, h.orig_w, h.orig_h));

  CipherContainer c{scheme, h.orig_w, h.orig_h, h.block, read_codebook(bytes, h), {}};
  c.index_matrix.grid_w = blocks_along(h.orig_w, h.block.w);
  c.index_matrix.grid_h = blocks_along(h.orig_h, h.block.h);
  c.index_matrix.indices.resize(size_t{c.index_matrix.grid_w} * c.index_matrix.grid_h);
  size_t at = kHeaderSize + h.m * h.block.area();
  for (auto& k : c.index_matrix.indices) {
    k = get_u16(bytes, at);
    at += 2;
  }
  detail::check_indices(c.index_matrix.indices, h.m);
  return c;
}

std::vector<uint8_t> serialize_codebook(const CodebookFile& f) {
  return header(kFlagCodebookOnly, 0, 0, f.block, f.codebook);
}

CodebookFile deserialize_codebook(std::span<const uint8_t> bytes) {
  const Header h = parse_header(bytes);
  if (h.flags != kFlagCodebookOnly) {
    throw CorruptionError(CorruptionKind::kBadFlags, "vqc: not a codebook-only file");
  }
  check_length(bytes.size(), kHeaderSize + h.m * h.block.area());
  return {h.block, read_codebook(bytes, h)};
}

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const uint8_t> bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace vqcrypt
