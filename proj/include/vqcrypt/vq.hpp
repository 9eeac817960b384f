#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vqcrypt/codebook.hpp"
#include "vqcrypt/pixmap.hpp"

namespace vqcrypt {

/// Per-block codebook positions, 0-based, row-major over the block grid.
struct IndexMatrix {
  std::vector<uint16_t> indices;
  uint32_t grid_w = 0;
  uint32_t grid_h = 0;

  size_t size() const { return indices.size(); }
  bool operator==(const IndexMatrix&) const = default;
};

uint64_t squared_distance(std::span<const uint8_t> a, std::span<const uint8_t> b);

/// Position of the codeword closest to `v` in squared Euclidean distance.
/// Ties go to the lexicographically smallest codeword content, then to the
/// smallest position, so the chosen content does not depend on codebook order.
size_t nearest(const Codebook& cb, std::span<const uint8_t> v);

IndexMatrix encode_plain(const BlockGrid& g, const Codebook& cb, unsigned threads = 1);

/// Throws CorruptionError if any index is >= cb.size().
Pixmap decode_plain(const IndexMatrix& ix, const Codebook& cb, BlockDims block, uint32_t orig_w,
                    uint32_t orig_h);

/// Builds a BlockGrid from decoded blocks, checking the grid shape.
BlockGrid make_grid(std::vector<BlockVector> blocks, BlockDims block, uint32_t orig_w, uint32_t orig_h);

}  // namespace vqcrypt
