#include "vqcrypt/lbg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "vqcrypt/detail/parallel.hpp"
#include "vqcrypt/error.hpp"
#include "vqcrypt/vq.hpp"

namespace vqcrypt {
namespace {

// Real-valued codebook used while training.
struct WorkingCodebook {
  size_t dim;
  std::vector<double> data;

  size_t size() const { return data.size() / dim; }
  const double* row(size_t k) const { return data.data() + k * dim; }
  double* row(size_t k) { return data.data() + k * dim; }
};

struct Assignment {
  std::vector<uint32_t> label;
  std::vector<double> dist;
};

size_t nearest_real(const WorkingCodebook& cb, const BlockVector& v, double& out_dist) {
  size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < cb.size(); ++k) {
    const double* c = cb.row(k);
    double d = 0.0;
    for (size_t j = 0; j < cb.dim; ++j) {
      const double diff = c[j] - v[j];
      d += diff * diff;
    }
    if (d < best_d) {
      best = k;
      best_d = d;
    } else if (d == best_d &&
               std::lexicographical_compare(c, c + cb.dim, cb.row(best), cb.row(best) + cb.dim)) {
      best = k;
    }
  }
  out_dist = best_d;
  return best;
}

double assign(std::span<const BlockVector> blocks, const WorkingCodebook& cb, unsigned threads,
              Assignment& a) {
  a.label.resize(blocks.size());
  a.dist.resize(blocks.size());
  detail::parallel_chunks(blocks.size(), threads, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) a.label[i] = static_cast<uint32_t>(nearest_real(cb, blocks[i], a.dist[i]));
  });
  // Fixed summation order keeps the result independent of the thread count.
  const double total = std::accumulate(a.dist.begin(), a.dist.end(), 0.0);
  return total / static_cast<double>(blocks.size());
}

void recenter(std::span<const BlockVector> blocks, const Assignment& a, WorkingCodebook& cb) {
  const size_t m = cb.size();
  std::vector<uint64_t> sums(m * cb.dim, 0);
  std::vector<uint64_t> counts(m, 0);
  for (size_t i = 0; i < blocks.size(); ++i) {
    const size_t k = a.label[i];
    ++counts[k];
    for (size_t j = 0; j < cb.dim; ++j) sums[k * cb.dim + j] += blocks[i][j];
  }

  std::vector<size_t> empty;
  for (size_t k = 0; k < m; ++k) {
    if (counts[k] == 0) {
      empty.push_back(k);
      continue;
    }
    for (size_t j = 0; j < cb.dim; ++j) {
      cb.row(k)[j] = static_cast<double>(sums[k * cb.dim + j]) / static_cast<double>(counts[k]);
    }
  }
  if (empty.empty()) return;

  // Empty cells take the worst-represented training vectors, farthest first.
  std::vector<size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return a.dist[x] > a.dist[y]; });
  for (size_t e = 0; e < empty.size(); ++e) {
    const auto& v = blocks[order[e % order.size()]];
    double* c = cb.row(empty[e]);
    for (size_t j = 0; j < cb.dim; ++j) c[j] = v[j];
  }
}

void lloyd(std::span<const BlockVector> blocks, WorkingCodebook& cb, const TrainParams& params,
           std::vector<LloydStep>* trace) {
  Assignment a;
  double prev = std::numeric_limits<double>::infinity();
  for (size_t it = 0; it < params.max_iters; ++it) {
    const double d = assign(blocks, cb, params.threads, a);
    if (trace) trace->push_back({cb.size(), it, d});
    if (d == 0.0) break;
    if (std::isfinite(prev) && (prev - d) / d < params.rel_tol) break;
    prev = d;
    recenter(blocks, a, cb);
  }
}

void split(WorkingCodebook& cb, double delta) {
  const size_t m = cb.size();
  std::vector<double> next(2 * m * cb.dim);
  for (size_t k = 0; k < m; ++k) {
    for (size_t j = 0; j < cb.dim; ++j) {
      const double c = cb.row(k)[j];
      next[(2 * k) * cb.dim + j] = c * (1.0 + delta);
      next[(2 * k + 1) * cb.dim + j] = c * (1.0 - delta);
    }
  }
  cb.data = std::move(next);
}

}  // namespace

Codebook train(std::span<const BlockVector> blocks, const TrainParams& params, std::vector<LloydStep>* trace) {
  if (blocks.empty()) throw std::invalid_argument("train: empty training set");
  if (params.target_size == 0 || !std::has_single_bit(params.target_size)) {
    throw std::invalid_argument("train: codebook size must be a power of two");
  }
  if (params.target_size > 65535) throw std::invalid_argument("train: codebook size exceeds 65535");
  if (!(params.rel_tol > 0.0)) throw std::invalid_argument("train: rel_tol must be positive");
  if (!(params.split_delta > 0.0) || params.split_delta >= 1.0) {
    throw std::invalid_argument("train: split_delta must be in (0, 1)");
  }
  if (params.max_iters == 0) throw std::invalid_argument("train: max_iters must be positive");
  const size_t dim = blocks.front().size();
  if (dim == 0) throw StructuralError("train: zero-length training vectors");
  for (const auto& b : blocks) {
    if (b.size() != dim) throw StructuralError("train: training vectors differ in dimension");
  }

  WorkingCodebook cb{dim, std::vector<double>(dim, 0.0)};
  lloyd(blocks, cb, params, trace);  // size 1 converges to the global centroid
  while (cb.size() < params.target_size) {
    split(cb, params.split_delta);
    lloyd(blocks, cb, params, trace);
  }

  std::vector<uint8_t> out(cb.data.size());
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<uint8_t>(std::clamp(std::round(cb.data[i]), 0.0, 255.0));
  }
  return Codebook(dim, std::move(out));
}

double distortion(std::span<const BlockVector> blocks, const Codebook& cb) {
  if (blocks.empty()) throw std::invalid_argument("distortion: empty block set");
  if (cb.empty()) throw StructuralError("distortion: empty codebook");
  uint64_t total = 0;
  for (const auto& b : blocks) {
    if (b.size() != cb.dim()) throw StructuralError("distortion: dimension mismatch");
    total += squared_distance(cb[nearest(cb, b)], b);
  }
  return static_cast<double>(total) / static_cast<double>(blocks.size());
}

}  // namespace vqcrypt
