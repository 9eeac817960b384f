#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vqcrypt {

/// 8-bit grayscale image, row-major.
struct Pixmap {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<uint8_t> pixels;

  Pixmap() = default;
  Pixmap(uint32_t w, uint32_t h, uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<size_t>(w) * h, fill) {}

  uint8_t at(uint32_t x, uint32_t y) const { return pixels[static_cast<size_t>(y) * width + x]; }
  uint8_t& at(uint32_t x, uint32_t y) { return pixels[static_cast<size_t>(y) * width + x]; }

  bool operator==(const Pixmap&) const = default;
};

using BlockVector = std::vector<uint8_t>;

struct BlockDims {
  uint32_t w = 4;
  uint32_t h = 4;

  uint32_t area() const { return w * h; }
  bool operator==(const BlockDims&) const = default;
};

/// Non-overlapping blocks of an image, enumerated row-major over the grid.
struct BlockGrid {
  std::vector<BlockVector> blocks;
  uint32_t grid_w = 0;
  uint32_t grid_h = 0;
  BlockDims block;
  uint32_t orig_w = 0;
  uint32_t orig_h = 0;

  size_t size() const { return blocks.size(); }
};

/// Parses "WxH", e.g. "4x4".
std::optional<BlockDims> parse_block_dims(std::string_view text);

Pixmap read_pgm(std::span<const uint8_t> bytes);
std::vector<uint8_t> write_pgm(const Pixmap& p);

Pixmap load_pgm(const std::string& path);
void save_pgm(const Pixmap& p, const std::string& path);

uint32_t blocks_along(uint32_t extent, uint32_t block_extent);

/// Slices `p` into blocks. Non-multiple dimensions are padded by edge
/// replication before slicing.
BlockGrid decompose(const Pixmap& p, BlockDims block);

/// Inverse of decompose; padding is dropped.
Pixmap reassemble(const BlockGrid& g);

double mse(const Pixmap& a, const Pixmap& b);

/// Returns +infinity when the images are identical.
double psnr(const Pixmap& a, const Pixmap& b);

/// Sum of absolute horizontal and vertical neighbour differences.
uint64_t total_variation(const Pixmap& p);

}  // namespace vqcrypt
