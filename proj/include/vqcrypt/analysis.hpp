#pragma once

#include <cstdint>
#include <optional>

#include "vqcrypt/container.hpp"
#include "vqcrypt/permutation.hpp"
#include "vqcrypt/pixmap.hpp"

namespace vqcrypt {

/// Largest seed width brute_force_seed will search.
inline constexpr unsigned kMaxBruteForceBits = 24;

/// Reconstructs the image with the correct key.
Pixmap decrypt_container(const CipherContainer& c, Seed seed);

/// Key-less reconstruction: every index is looked up positionally in the
/// codebook exactly as received.
Pixmap naive_decode(const CipherContainer& c);

struct AttackReport {
  Scheme scheme = Scheme::kFull;
  std::optional<double> psnr_vs_reference;
  uint64_t seeds_tried = 0;
  uint64_t blocks_tried = 0;
  double elapsed_seconds = 0.0;
  std::optional<uint64_t> recovered_seed;
  bool exact_match = false;  // true when a candidate reproduced the reference exactly
};

/// Searches seeds [0, 2^seed_bits). With a reference image, a seed is
/// accepted when its decryption equals the VQ reconstruction of the
/// reference under the received codewords; the lowest such seed wins and the
/// search stops. Without one, the candidate with the smallest total
/// variation wins (lowest seed on ties).
/// Throws std::invalid_argument for seed_bits > kMaxBruteForceBits or a
/// plain container.
AttackReport brute_force_seed(const CipherContainer& c, unsigned seed_bits,
                              const std::optional<Pixmap>& reference = std::nullopt, unsigned threads = 0);

/// Years needed to try 2^bits keys at the given rate.
double keyspace_years(unsigned bits, double guesses_per_second);

/// log2(m!) by direct summation.
double log2_factorial(uint64_t m);

}  // namespace vqcrypt
