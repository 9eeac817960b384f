#include "vqcrypt/permutation.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace vqcrypt {

KeyedPermutation::KeyedPermutation(std::vector<uint16_t> forward) : forward_(std::move(forward)) {
  if (forward_.size() > 65536) throw std::invalid_argument("permutation: too many positions");
  inverse_.assign(forward_.size(), 0);
  std::vector<bool> seen(forward_.size(), false);
  for (size_t i = 0; i < forward_.size(); ++i) {
    const auto v = forward_[i];
    if (v >= forward_.size() || seen[v]) throw std::invalid_argument("permutation: not a bijection");
    seen[v] = true;
    inverse_[v] = static_cast<uint16_t>(i);
  }
}

KeyedPermutation KeyedPermutation::identity(size_t m) {
  std::vector<uint16_t> a(m);
  std::iota(a.begin(), a.end(), uint16_t{0});
  return KeyedPermutation(std::move(a));
}

KeyedPermutation KeyedPermutation::inverted() const {
  KeyedPermutation p;
  p.forward_ = inverse_;
  p.inverse_ = forward_;
  return p;
}

KeyedPermutation derive_permutation(Seed seed, size_t m) {
  if (m == 0) throw std::invalid_argument("derive_permutation: m must be positive");
  if (m > 65536) throw std::invalid_argument("derive_permutation: m exceeds 65536");
  std::vector<uint16_t> a(m);
  std::iota(a.begin(), a.end(), uint16_t{0});
  uint64_t state = seed.value;
  for (size_t i = m - 1; i >= 1; --i) {
    const auto step = prng_next(state);
    state = step.next_state;
    std::swap(a[i], a[step.output % (i + 1)]);
  }
  return KeyedPermutation(std::move(a));
}

std::optional<Seed> parse_seed(std::string_view text) {
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
    base = 16;
  }
  if (text.empty()) return std::nullopt;
  uint64_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
  if (ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
  return Seed{v};
}

}  // namespace vqcrypt
