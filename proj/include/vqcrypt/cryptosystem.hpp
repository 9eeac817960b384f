#pragma once

#include <vector>

#include "vqcrypt/codebook.hpp"
#include "vqcrypt/permutation.hpp"
#include "vqcrypt/pixmap.hpp"
#include "vqcrypt/vq.hpp"

namespace vqcrypt {

enum class Scheme : uint8_t {
  kFull,         // pseudo-indices plus per-block codeword swaps
  kRandomIndex,  // pseudo-indices only; leaks flat regions
  kPlain,        // no encryption
};

const char* to_string(Scheme s);

struct EncryptResult {
  IndexMatrix index_matrix;
  Codebook shuffled_codebook;
};

struct DecryptResult {
  std::vector<BlockVector> blocks;  // forward block order
  Codebook restored_codebook;
};

/// Encodes the blocks in order. Each block's nearest position o emits the
/// pseudo-index p = perm.forward(o), after which the codewords at positions
/// o and p trade places (skipped after the last block). `cb` is not modified.
EncryptResult encrypt_encode(const BlockGrid& g, const Codebook& cb, const KeyedPermutation& perm);

/// Exact inverse of encrypt_encode: first redoes the swap the encoder skipped
/// for the last block, then walks the index matrix backwards, reading each
/// block at its pseudo-index and undoing that block's swap.
DecryptResult decrypt_decode(const IndexMatrix& ix, const Codebook& shuffled_cb, const KeyedPermutation& perm);

/// Pseudo-indices without swapping; the codebook is returned as given.
EncryptResult encode_random_index_only(const BlockGrid& g, const Codebook& cb, const KeyedPermutation& perm);

/// Maps pseudo-indices back through the inverse permutation.
IndexMatrix recover_random_index_only(const IndexMatrix& ix, const KeyedPermutation& perm);

}  // namespace vqcrypt
