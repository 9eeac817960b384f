#include "vqcrypt/pixmap.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>

#include "vqcrypt/error.hpp"

namespace vqcrypt {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  uint64_t number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw ParseError(std::string("pgm: missing or invalid ") + what);
    }
    uint64_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + (bytes_[pos_] - '0');
      if (v > std::numeric_limits<uint32_t>::max()) {
        throw ParseError(std::string("pgm: ") + what + " out of range");
      }
      ++pos_;
    }
    return v;
  }

  size_t pos() const { return pos_; }
  void advance(size_t n) { pos_ += n; }

 private:
  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace

std::optional<BlockDims> parse_block_dims(std::string_view text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string_view::npos) return std::nullopt;
  auto parse = [](std::string_view s) -> std::optional<uint32_t> {
    uint32_t v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || end != s.data() + s.size() || v == 0 || v > 255) return std::nullopt;
    return v;
  };
  const auto w = parse(text.substr(0, x));
  const auto h = parse(text.substr(x + 1));
  if (!w || !h) return std::nullopt;
  return BlockDims{*w, *h};
}

Pixmap read_pgm(std::span<const uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
    throw ParseError("pgm: bad magic (expected P5 or P2)");
  }
  const bool binary = bytes[1] == '5';
  HeaderReader in(bytes);
  in.advance(2);
  const auto width = in.number("width");
  const auto height = in.number("height");
  const auto maxval = in.number("maxval");
  if (width == 0 || height == 0) throw ParseError("pgm: zero width or height");
  if (maxval == 0 || maxval > 255) throw ParseError("pgm: maxval must be in [1, 255]");

  Pixmap p(static_cast<uint32_t>(width), static_cast<uint32_t>(height));
  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (in.pos() >= bytes.size() || !std::isspace(bytes[in.pos()])) {
      throw ParseError("pgm: truncated payload");
    }
    const size_t start = in.pos() + 1;
    if (bytes.size() - start < p.pixels.size()) throw ParseError("pgm: truncated payload");
    std::copy_n(bytes.begin() + start, p.pixels.size(), p.pixels.begin());
  } else {
    for (auto& px : p.pixels) {
      uint64_t v = 0;
      try {
        v = in.number("pixel");
      } catch (const ParseError&) {
        throw ParseError("pgm: truncated payload");
      }
      if (v > maxval) throw ParseError("pgm: pixel exceeds maxval");
      px = static_cast<uint8_t>(v);
    }
  }
  for (auto v : p.pixels) {
    if (v > maxval) throw ParseError("pgm: pixel exceeds maxval");
  }
  return p;
}

std::vector<uint8_t> write_pgm(const Pixmap& p) {
  std::string header = "P5\n" + std::to_string(p.width) + " " + std::to_string(p.height) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), p.pixels.begin(), p.pixels.end());
  return out;
}

Pixmap load_pgm(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

void save_pgm(const Pixmap& p, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  const auto bytes = write_pgm(p);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

uint32_t blocks_along(uint32_t extent, uint32_t block_extent) {
  return (extent + block_extent - 1) / block_extent;
}

BlockGrid decompose(const Pixmap& p, BlockDims block) {
  if (block.w == 0 || block.h == 0) throw StructuralError("block dimensions must be positive");
  if (p.pixels.size() != static_cast<size_t>(p.width) * p.height || p.pixels.empty()) {
    throw StructuralError("pixmap size does not match its dimensions");
  }
  BlockGrid g;
  g.block = block;
  g.orig_w = p.width;
  g.orig_h = p.height;
  g.grid_w = blocks_along(p.width, block.w);
  g.grid_h = blocks_along(p.height, block.h);
  g.blocks.reserve(static_cast<size_t>(g.grid_w) * g.grid_h);
  for (uint32_t by = 0; by < g.grid_h; ++by) {
    for (uint32_t bx = 0; bx < g.grid_w; ++bx) {
      BlockVector v(block.area());
      size_t k = 0;
      for (uint32_t y = 0; y < block.h; ++y) {
        const uint32_t sy = std::min(by * block.h + y, p.height - 1);
        for (uint32_t x = 0; x < block.w; ++x) {
          const uint32_t sx = std::min(bx * block.w + x, p.width - 1);
          v[k++] = p.at(sx, sy);
        }
      }
      g.blocks.push_back(std::move(v));
    }
  }
  return g;
}

Pixmap reassemble(const BlockGrid& g) {
  if (g.blocks.size() != static_cast<size_t>(g.grid_w) * g.grid_h) {
    throw StructuralError("block count does not match grid dimensions");
  }
  if (g.grid_w != blocks_along(g.orig_w, g.block.w) || g.grid_h != blocks_along(g.orig_h, g.block.h)) {
    throw StructuralError("grid dimensions do not cover the original image");
  }
  Pixmap p(g.orig_w, g.orig_h);
  for (uint32_t by = 0; by < g.grid_h; ++by) {
    for (uint32_t bx = 0; bx < g.grid_w; ++bx) {
      const auto& v = g.blocks[static_cast<size_t>(by) * g.grid_w + bx];
      if (v.size() != g.block.area()) throw StructuralError("block vector has wrong length");
      for (uint32_t y = 0; y < g.block.h; ++y) {
        const uint32_t py = by * g.block.h + y;
        if (py >= g.orig_h) break;
        for (uint32_t x = 0; x < g.block.w; ++x) {
          const uint32_t px = bx * g.block.w + x;
          if (px >= g.orig_w) break;
          p.at(px, py) = v[static_cast<size_t>(y) * g.block.w + x];
        }
      }
    }
  }
  return p;
}

double mse(const Pixmap& a, const Pixmap& b) {
  if (a.width != b.width || a.height != b.height) throw StructuralError("mse: dimension mismatch");
  if (a.pixels.empty()) return 0.0;
  uint64_t sum = 0;
  for (size_t i = 0; i < a.pixels.size(); ++i) {
    const int64_t d = int64_t{a.pixels[i]} - int64_t{b.pixels[i]};
    sum += static_cast<uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(a.pixels.size());
}

double psnr(const Pixmap& a, const Pixmap& b) {
  const double e = mse(a, b);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / e);
}

uint64_t total_variation(const Pixmap& p) {
  uint64_t tv = 0;
  for (uint32_t y = 0; y < p.height; ++y) {
    for (uint32_t x = 0; x < p.width; ++x) {
      const int v = p.at(x, y);
      if (x + 1 < p.width) tv += static_cast<uint64_t>(std::abs(v - p.at(x + 1, y)));
      if (y + 1 < p.height) tv += static_cast<uint64_t>(std::abs(v - p.at(x, y + 1)));
    }
  }
  return tv;
}

}  // namespace vqcrypt
