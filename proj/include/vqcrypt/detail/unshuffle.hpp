#pragma once

#include <span>
#include <string>
#include <utility>

#include "vqcrypt/codebook.hpp"
#include "vqcrypt/error.hpp"
#include "vqcrypt/permutation.hpp"

namespace vqcrypt::detail {

/// Reverse swap walk shared by the decoder and the seed search. `cb` holds
/// the transmitted codebook on entry and the original order on full
/// completion. visit(i, content) is called for i = n-1 down to 0; returning
/// false stops the walk early.
template <typename Visit>
bool unshuffle(std::span<const uint16_t> ix, Codebook& cb, const KeyedPermutation& perm, Visit&& visit) {
  if (ix.empty()) return true;
  const size_t n = ix.size();
  cb.swap_positions(ix[n - 1], perm.inverse(ix[n - 1]));
  for (size_t i = n; i-- > 0;) {
    const size_t p = ix[i];
    if (!visit(i, std::as_const(cb)[p])) return false;
    cb.swap_positions(p, perm.inverse(p));
  }
  return true;
}

inline void check_indices(std::span<const uint16_t> ix, size_t m) {
  for (auto k : ix) {
    if (k >= m) {
      throw CorruptionError(CorruptionKind::kIndexOutOfRange,
                            "index " + std::to_string(k) + " >= codebook size " + std::to_string(m));
    }
  }
}

}  // namespace vqcrypt::detail
