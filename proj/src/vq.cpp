#include "vqcrypt/vq.hpp"

#include <algorithm>
#include <string>

#include "vqcrypt/detail/parallel.hpp"
#include "vqcrypt/error.hpp"

namespace vqcrypt {

uint64_t squared_distance(std::span<const uint8_t> a, std::span<const uint8_t> b) {
  uint64_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const int32_t diff = int32_t{a[i]} - int32_t{b[i]};
    d += static_cast<uint64_t>(diff * diff);
  }
  return d;
}

size_t nearest(const Codebook& cb, std::span<const uint8_t> v) {
  if (v.size() != cb.dim()) throw StructuralError("nearest: dimension mismatch");
  size_t best = 0;
  uint64_t best_d = squared_distance(cb[0], v);
  for (size_t k = 1; k < cb.size(); ++k) {
    const auto c = cb[k];
    const uint64_t d = squared_distance(c, v);
    if (d < best_d) {
      best = k;
      best_d = d;
    } else if (d == best_d) {
      const auto b = cb[best];
      if (std::lexicographical_compare(c.begin(), c.end(), b.begin(), b.end())) best = k;
    }
  }
  return best;
}

IndexMatrix encode_plain(const BlockGrid& g, const Codebook& cb, unsigned threads) {
  if (cb.empty()) throw StructuralError("encode: empty codebook");
  if (cb.dim() != g.block.area()) throw StructuralError("encode: codebook dimension does not match block size");
  IndexMatrix ix;
  ix.grid_w = g.grid_w;
  ix.grid_h = g.grid_h;
  ix.indices.resize(g.size());
  detail::parallel_chunks(g.size(), threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) ix.indices[i] = static_cast<uint16_t>(nearest(cb, g.blocks[i]));
  });
  return ix;
}

BlockGrid make_grid(std::vector<BlockVector> blocks, BlockDims block, uint32_t orig_w, uint32_t orig_h) {
  BlockGrid g;
  g.block = block;
  g.orig_w = orig_w;
  g.orig_h = orig_h;
  g.grid_w = blocks_along(orig_w, block.w);
  g.grid_h = blocks_along(orig_h, block.h);
  if (blocks.size() != static_cast<size_t>(g.grid_w) * g.grid_h) {
    throw StructuralError("block count " + std::to_string(blocks.size()) + " does not match grid " +
                          std::to_string(g.grid_w) + "x" + std::to_string(g.grid_h));
  }
  g.blocks = std::move(blocks);
  return g;
}

Pixmap decode_plain(const IndexMatrix& ix, const Codebook& cb, BlockDims block, uint32_t orig_w,
                    uint32_t orig_h) {
  if (cb.dim() != block.area()) throw StructuralError("decode: codebook dimension does not match block size");
  std::vector<BlockVector> blocks;
  blocks.reserve(ix.size());
  for (auto k : ix.indices) {
    if (k >= cb.size()) {
      throw CorruptionError(CorruptionKind::kIndexOutOfRange,
                            "index " + std::to_string(k) + " >= codebook size " + std::to_string(cb.size()));
    }
    blocks.emplace_back(cb[k].begin(), cb[k].end());
  }
  return reassemble(make_grid(std::move(blocks), block, orig_w, orig_h));
}

}  // namespace vqcrypt
