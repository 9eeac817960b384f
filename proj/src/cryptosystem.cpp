#include "vqcrypt/cryptosystem.hpp"

#include <stdexcept>

#include "vqcrypt/detail/unshuffle.hpp"
#include "vqcrypt/error.hpp"

namespace vqcrypt {
namespace {

void check_inputs(const BlockGrid& g, const Codebook& cb, const KeyedPermutation& perm) {
  if (cb.empty()) throw StructuralError("empty codebook");
  if (cb.dim() != g.block.area()) throw StructuralError("codebook dimension does not match block size");
  if (perm.size() != cb.size()) throw StructuralError("permutation length does not match codebook size");
}

}  // namespace

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::kFull: return "full";
    case Scheme::kRandomIndex: return "random-index";
    case Scheme::kPlain: return "plain";
  }
  return "unknown";
}

EncryptResult encrypt_encode(const BlockGrid& g, const Codebook& cb, const KeyedPermutation& perm) {
  check_inputs(g, cb, perm);
  EncryptResult r{{{}, g.grid_w, g.grid_h}, cb};
  auto& working = r.shuffled_codebook;
  r.index_matrix.indices.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    const size_t original = nearest(working, g.blocks[i]);
    const uint16_t pseudo = perm.forward(original);
    r.index_matrix.indices[i] = pseudo;
    if (i + 1 < g.size()) working.swap_positions(original, pseudo);
  }
  return r;
}

DecryptResult decrypt_decode(const IndexMatrix& ix, const Codebook& shuffled_cb, const KeyedPermutation& perm) {
  if (perm.size() != shuffled_cb.size()) throw StructuralError("permutation length does not match codebook size");
  detail::check_indices(ix.indices, shuffled_cb.size());
  DecryptResult r{std::vector<BlockVector>(ix.size()), shuffled_cb};
  detail::unshuffle(ix.indices, r.restored_codebook, perm, [&](size_t i, std::span<const uint8_t> content) {
    r.blocks[i].assign(content.begin(), content.end());
    return true;
  });
  return r;
}

EncryptResult encode_random_index_only(const BlockGrid& g, const Codebook& cb, const KeyedPermutation& perm) {
  check_inputs(g, cb, perm);
  EncryptResult r{encode_plain(g, cb), cb};
  for (auto& k : r.index_matrix.indices) k = perm.forward(k);
  return r;
}

IndexMatrix recover_random_index_only(const IndexMatrix& ix, const KeyedPermutation& perm) {
  detail::check_indices(ix.indices, perm.size());
  IndexMatrix out = ix;
  for (auto& k : out.indices) k = perm.inverse(k);
  return out;
}

}  // namespace vqcrypt
