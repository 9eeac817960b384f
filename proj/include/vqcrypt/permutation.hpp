#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace vqcrypt {

struct Seed {
  uint64_t value = 0;
  bool operator==(const Seed&) const = default;
};

struct PrngStep {
  uint64_t output;
  uint64_t next_state;
};

/// SplitMix64 state transition.
constexpr PrngStep prng_next(uint64_t state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return {z ^ (z >> 31), state};
}

/// Bijection on codebook positions: forward maps a position to the
/// pseudo-index written to the index matrix, inverse maps it back.
class KeyedPermutation {
 public:
  KeyedPermutation() = default;

  /// Throws std::invalid_argument unless `forward` is a bijection on [0, n).
  explicit KeyedPermutation(std::vector<uint16_t> forward);

  static KeyedPermutation identity(size_t m);

  size_t size() const { return forward_.size(); }
  uint16_t forward(size_t pos) const { return forward_[pos]; }
  uint16_t inverse(size_t idx) const { return inverse_[idx]; }
  const std::vector<uint16_t>& forward() const { return forward_; }
  const std::vector<uint16_t>& inverse() const { return inverse_; }

  KeyedPermutation inverted() const;

  bool operator==(const KeyedPermutation&) const = default;

 private:
  std::vector<uint16_t> forward_;
  std::vector<uint16_t> inverse_;
};

/// Down-counting Fisher-Yates over [0, m) driven by SplitMix64 from `seed`,
/// drawing j = output mod (i + 1).
KeyedPermutation derive_permutation(Seed seed, size_t m);

/// Accepts "0x"-prefixed hexadecimal or plain decimal 64-bit values.
std::optional<Seed> parse_seed(std::string_view text);

inline KeyedPermutation invert(const KeyedPermutation& p) { return p.inverted(); }

}  // namespace vqcrypt
