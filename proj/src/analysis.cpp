#include "vqcrypt/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "vqcrypt/detail/parallel.hpp"
#include "vqcrypt/detail/unshuffle.hpp"
#include "vqcrypt/error.hpp"
#include "vqcrypt/vq.hpp"

namespace vqcrypt {
namespace {

constexpr uint64_t kBatchSize = 4096;

Pixmap from_blocks(const CipherContainer& c, std::vector<BlockVector> blocks) {
  return reassemble(make_grid(std::move(blocks), c.block, c.orig_w, c.orig_h));
}

// Blocks the correct key must reproduce: each reference block replaced by its
// nearest received codeword. Nearest is order-independent in content, so the
// shuffled codebook gives the same answer as the original.
std::vector<BlockVector> reference_target(const CipherContainer& c, const Pixmap& reference) {
  if (reference.width != c.orig_w || reference.height != c.orig_h) {
    throw StructuralError("reference image dimensions do not match the container");
  }
  const auto grid = decompose(reference, c.block);
  std::vector<BlockVector> target;
  target.reserve(grid.size());
  for (const auto& b : grid.blocks) {
    const auto cw = c.codebook[nearest(c.codebook, b)];
    target.emplace_back(cw.begin(), cw.end());
  }
  return target;
}

struct MatchResult {
  bool match;
  uint64_t blocks_visited;
};

MatchResult matches_target(const CipherContainer& c, Seed seed, const std::vector<BlockVector>& target) {
  const auto perm = derive_permutation(seed, c.codebook.size());
  const auto& ix = c.index_matrix.indices;
  uint64_t visited = 0;
  if (c.scheme == Scheme::kRandomIndex) {
    for (size_t i = 0; i < ix.size(); ++i) {
      ++visited;
      const auto cw = c.codebook[perm.inverse(ix[i])];
      if (!std::equal(cw.begin(), cw.end(), target[i].begin())) return {false, visited};
    }
    return {true, visited};
  }
  Codebook working = c.codebook;
  const bool ok = detail::unshuffle(ix, working, perm, [&](size_t i, std::span<const uint8_t> cw) {
    ++visited;
    return std::equal(cw.begin(), cw.end(), target[i].begin());
  });
  return {ok, visited};
}

}  // namespace

Pixmap decrypt_container(const CipherContainer& c, Seed seed) {
  switch (c.scheme) {
    case Scheme::kPlain:
      return decode_plain(c.index_matrix, c.codebook, c.block, c.orig_w, c.orig_h);
    case Scheme::kRandomIndex: {
      const auto perm = derive_permutation(seed, c.codebook.size());
      return decode_plain(recover_random_index_only(c.index_matrix, perm), c.codebook, c.block, c.orig_w,
                          c.orig_h);
    }
    case Scheme::kFull: {
      const auto perm = derive_permutation(seed, c.codebook.size());
      return from_blocks(c, decrypt_decode(c.index_matrix, c.codebook, perm).blocks);
    }
  }
  throw std::invalid_argument("unknown scheme");
}

Pixmap naive_decode(const CipherContainer& c) {
  return decode_plain(c.index_matrix, c.codebook, c.block, c.orig_w, c.orig_h);
}

AttackReport brute_force_seed(const CipherContainer& c, unsigned seed_bits, const std::optional<Pixmap>& reference,
                              unsigned threads) {
  if (seed_bits > kMaxBruteForceBits) {
    throw std::invalid_argument("brute force limited to " + std::to_string(kMaxBruteForceBits) + " seed bits");
  }
  if (c.scheme == Scheme::kPlain) throw std::invalid_argument("plain container carries no key to search");
  detail::check_indices(c.index_matrix.indices, c.codebook.size());

  const auto start = std::chrono::steady_clock::now();
  const uint64_t total = uint64_t{1} << seed_bits;
  AttackReport report;
  report.scheme = c.scheme;

  if (reference) {
    const auto target = reference_target(c, *reference);
    // Batches are searched in order; within a batch every seed is tried so
    // the counters do not depend on thread scheduling.
    for (uint64_t base = 0; base < total && !report.recovered_seed; base += kBatchSize) {
      const uint64_t count = std::min(kBatchSize, total - base);
      std::vector<MatchResult> results(count);
      detail::parallel_chunks(count, threads, [&](size_t begin, size_t end) {
        for (size_t s = begin; s < end; ++s) results[s] = matches_target(c, Seed{base + s}, target);
      });
      report.seeds_tried += count;
      for (uint64_t s = 0; s < count; ++s) {
        report.blocks_tried += results[s].blocks_visited;
        if (results[s].match && !report.recovered_seed) report.recovered_seed = base + s;
      }
    }
    report.exact_match = report.recovered_seed.has_value();
    if (report.recovered_seed) {
      report.psnr_vs_reference = psnr(decrypt_container(c, Seed{*report.recovered_seed}), *reference);
    }
  } else {
    struct Best {
      uint64_t score = std::numeric_limits<uint64_t>::max();
      uint64_t seed = 0;
    };
    std::vector<Best> best(std::max(1u, threads == 0 ? std::thread::hardware_concurrency() : threads));
    const size_t chunk = (total + best.size() - 1) / best.size();
    detail::parallel_chunks(best.size(), threads, [&](size_t wbegin, size_t wend) {
      for (size_t w = wbegin; w < wend; ++w) {
        for (uint64_t s = w * chunk; s < std::min<uint64_t>(total, (w + 1) * chunk); ++s) {
          const uint64_t tv = total_variation(decrypt_container(c, Seed{s}));
          if (tv < best[w].score) best[w] = {tv, s};
        }
      }
    });
    // Chunks are in seed order, so strict < keeps the lowest seed on ties.
    Best overall;
    for (const auto& b : best) {
      if (b.score < overall.score) overall = b;
    }
    report.recovered_seed = overall.seed;
    report.seeds_tried = total;
    report.blocks_tried = total * c.index_matrix.size();
  }

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

double keyspace_years(unsigned bits, double guesses_per_second) {
  if (bits > 128) throw std::invalid_argument("keyspace_years: bits must be in [0, 128]");
  if (!(guesses_per_second > 0.0)) throw std::invalid_argument("keyspace_years: rate must be positive");
  constexpr double kSecondsPerYear = 3600.0 * 24.0 * 365.0;
  return std::ldexp(1.0, static_cast<int>(bits)) / (guesses_per_second * kSecondsPerYear);
}

double log2_factorial(uint64_t m) {
  if (m == 0) throw std::invalid_argument("log2_factorial: m must be positive");
  double bits = 0.0;
  for (uint64_t k = 2; k <= m; ++k) bits += std::log2(static_cast<double>(k));
  return bits;
}

}  // namespace vqcrypt
