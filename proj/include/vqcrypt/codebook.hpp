#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace vqcrypt {

/// Ordered set of codewords stored contiguously. Position order is
/// significant: the cryptosystem uses it as mutable state.
class Codebook {
 public:
  Codebook() = default;
  Codebook(size_t size, size_t dim) : dim_(dim), data_(size * dim, 0) {}
  Codebook(size_t dim, std::vector<uint8_t> data);

  size_t size() const { return dim_ == 0 ? 0 : data_.size() / dim_; }
  size_t dim() const { return dim_; }
  bool empty() const { return data_.empty(); }

  std::span<const uint8_t> operator[](size_t pos) const { return {data_.data() + pos * dim_, dim_}; }
  std::span<uint8_t> operator[](size_t pos) { return {data_.data() + pos * dim_, dim_}; }

  void swap_positions(size_t a, size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<ptrdiff_t>(a * dim_),
                     data_.begin() + static_cast<ptrdiff_t>((a + 1) * dim_),
                     data_.begin() + static_cast<ptrdiff_t>(b * dim_));
  }

  const std::vector<uint8_t>& data() const { return data_; }

  /// True when both hold the same codewords irrespective of order.
  bool same_content(const Codebook& other) const;

  bool operator==(const Codebook&) const = default;

 private:
  size_t dim_ = 0;
  std::vector<uint8_t> data_;
};

}  // namespace vqcrypt
