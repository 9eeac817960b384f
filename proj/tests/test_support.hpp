#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vqcrypt/codebook.hpp"
#include "vqcrypt/pixmap.hpp"

namespace vqcrypt::testing {

inline Pixmap random_pixmap(std::mt19937_64& rng, uint32_t w, uint32_t h) {
  Pixmap p(w, h);
  std::uniform_int_distribution<int> px(0, 255);
  for (auto& v : p.pixels) v = static_cast<uint8_t>(px(rng));
  return p;
}

// Random image with a smooth trend so VQ has structure to exploit.
inline Pixmap random_smooth_pixmap(std::mt19937_64& rng, uint32_t w, uint32_t h) {
  Pixmap p(w, h);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  std::uniform_int_distribution<int> noise(-12, 12);
  const double a = coef(rng), b = coef(rng), c = 128.0;
  for (uint32_t y = 0; y < h; ++y) {
    for (uint32_t x = 0; x < w; ++x) {
      const int v = static_cast<int>(c + a * x + b * y) + noise(rng);
      p.at(x, y) = static_cast<uint8_t>(std::clamp(v, 0, 255));
    }
  }
  return p;
}

inline Codebook random_codebook(std::mt19937_64& rng, size_t m, size_t dim, int levels = 256) {
  std::uniform_int_distribution<int> px(0, levels - 1);
  std::vector<uint8_t> data(m * dim);
  for (auto& v : data) v = static_cast<uint8_t>(px(rng) * (255 / std::max(1, levels - 1)));
  return Codebook(dim, std::move(data));
}

// Exhaustive nearest-codeword scan written independently of vq.cpp: collects
// every minimal-distance position, then picks by content, then by position.
inline size_t brute_nearest(const Codebook& cb, std::span<const uint8_t> v) {
  uint64_t best = std::numeric_limits<uint64_t>::max();
  std::vector<size_t> ties;
  for (size_t k = 0; k < cb.size(); ++k) {
    uint64_t d = 0;
    for (size_t j = 0; j < v.size(); ++j) {
      const int64_t diff = static_cast<int64_t>(cb[k][j]) - v[j];
      d += static_cast<uint64_t>(diff * diff);
    }
    if (d < best) {
      best = d;
      ties.assign(1, k);
    } else if (d == best) {
      ties.push_back(k);
    }
  }
  size_t pick = ties.front();
  for (size_t k : ties) {
    std::vector<uint8_t> a(cb[k].begin(), cb[k].end()), b(cb[pick].begin(), cb[pick].end());
    if (a < b) pick = k;
  }
  return pick;
}

inline uint64_t brute_min_distance(const Codebook& cb, std::span<const uint8_t> v) {
  uint64_t best = std::numeric_limits<uint64_t>::max();
  for (size_t k = 0; k < cb.size(); ++k) {
    uint64_t d = 0;
    for (size_t j = 0; j < v.size(); ++j) {
      const int64_t diff = static_cast<int64_t>(cb[k][j]) - v[j];
      d += static_cast<uint64_t>(diff * diff);
    }
    best = std::min(best, d);
  }
  return best;
}

inline std::vector<uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace vqcrypt::testing
