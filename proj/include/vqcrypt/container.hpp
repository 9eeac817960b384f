#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vqcrypt/codebook.hpp"
#include "vqcrypt/cryptosystem.hpp"
#include "vqcrypt/vq.hpp"

namespace vqcrypt {

// .vqc layout, little-endian:
//   0  magic "VQC1"
//   4  version (1)
//   5  flags: bit0 full, bit1 random-index, bit2 plain, bit3 codebook only
//   6  orig_w u32, 10 orig_h u32
//   14 block_w u8, 15 block_h u8
//   16 m u16
//   18 codebook: m codewords of block_w*block_h bytes, position order
//   .. index matrix: grid_w*grid_h u16 entries, row-major, 0-based
inline constexpr size_t kHeaderSize = 18;
inline constexpr uint8_t kContainerVersion = 1;

enum ContainerFlag : uint8_t {
  kFlagFull = 1u << 0,
  kFlagRandomIndex = 1u << 1,
  kFlagPlain = 1u << 2,
  kFlagCodebookOnly = 1u << 3,
};

struct CipherContainer {
  Scheme scheme = Scheme::kFull;
  uint32_t orig_w = 0;
  uint32_t orig_h = 0;
  BlockDims block;
  Codebook codebook;
  IndexMatrix index_matrix;

  bool operator==(const CipherContainer&) const = default;
};

struct CodebookFile {
  BlockDims block;
  Codebook codebook;

  bool operator==(const CodebookFile&) const = default;
};

size_t container_size(size_t m, BlockDims block, uint32_t orig_w, uint32_t orig_h);

CipherContainer make_container(Scheme scheme, const EncryptResult& r, BlockDims block, uint32_t orig_w,
                               uint32_t orig_h);

std::vector<uint8_t> serialize(const CipherContainer& c);

/// Throws CorruptionError with a kind identifying the first defect found.
CipherContainer deserialize(std::span<const uint8_t> bytes);

std::vector<uint8_t> serialize_codebook(const CodebookFile& f);
CodebookFile deserialize_codebook(std::span<const uint8_t> bytes);

std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const uint8_t> bytes);

}  // namespace vqcrypt
