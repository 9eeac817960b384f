#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vqcrypt/codebook.hpp"
#include "vqcrypt/pixmap.hpp"

namespace vqcrypt {

struct TrainParams {
  size_t target_size = 256;  // must be a power of two
  double split_delta = 0.01;
  double rel_tol = 1e-4;
  size_t max_iters = 100;  // Lloyd iterations per codebook size
  unsigned threads = 1;    // 0 = hardware concurrency; output does not depend on it
};

/// One Lloyd assignment pass, recorded when a trace is requested.
struct LloydStep {
  size_t codebook_size;
  size_t iteration;
  double distortion;  // mean squared error against the real-valued codebook
};

/// LBG codebook design by splitting: grows from the global centroid by
/// doubling (c * (1 + delta), c * (1 - delta)) and Lloyd-refines each size.
/// Empty cells take the training vector farthest from its codeword.
/// Final codewords are rounded half away from zero to 8 bits.
Codebook train(std::span<const BlockVector> blocks, const TrainParams& params,
               std::vector<LloydStep>* trace = nullptr);

/// Mean squared distance from each block to its nearest codeword.
double distortion(std::span<const BlockVector> blocks, const Codebook& cb);

}  // namespace vqcrypt
