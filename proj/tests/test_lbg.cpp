#include <random>
#include <set>

#include "doctest.h"
#include "test_support.hpp"
#include "vqcrypt/error.hpp"
#include "vqcrypt/lbg.hpp"
#include "vqcrypt/vq.hpp"

using namespace vqcrypt;

namespace {

std::vector<BlockVector> random_blocks(std::mt19937_64& rng, size_t n, size_t dim) {
  std::uniform_int_distribution<int> px(0, 255);
  std::vector<BlockVector> out(n, BlockVector(dim));
  for (auto& b : out)
    for (auto& v : b) v = static_cast<uint8_t>(px(rng));
  return out;
}

}  // namespace

TEST_CASE("train: constant training set gives that vector") {
  const std::vector<BlockVector> blocks(30, BlockVector{9, 9, 200, 0});
  TrainParams params;
  params.target_size = 1;
  const auto cb = train(blocks, params);
  REQUIRE(cb.size() == 1);
  CHECK(std::vector<uint8_t>(cb[0].begin(), cb[0].end()) == blocks[0]);
}

TEST_CASE("train: two-cluster instance reaches the Lloyd fixed point") {
  std::vector<BlockVector> blocks(100, BlockVector(16, 0));
  blocks.insert(blocks.end(), 100, BlockVector(16, 255));
  TrainParams params;
  params.target_size = 2;
  const auto cb = train(blocks, params);
  REQUIRE(cb.size() == 2);

  std::set<std::vector<uint8_t>> got;
  for (size_t k = 0; k < 2; ++k) got.emplace(cb[k].begin(), cb[k].end());
  CHECK(got == std::set<std::vector<uint8_t>>{BlockVector(16, 0), BlockVector(16, 255)});

  // Fixed point: every codeword is the centroid of the vectors nearest to it.
  for (size_t k = 0; k < 2; ++k) {
    std::vector<uint64_t> sum(16, 0);
    uint64_t count = 0;
    for (const auto& b : blocks) {
      if (testing::brute_nearest(cb, b) != k) continue;
      ++count;
      for (size_t j = 0; j < 16; ++j) sum[j] += b[j];
    }
    REQUIRE(count == 100);
    for (size_t j = 0; j < 16; ++j) CHECK(sum[j] / count == cb[k][j]);
  }
  CHECK(distortion(blocks, cb) == 0.0);
}

TEST_CASE("train: Lloyd passes never increase distortion within a size level") {
  std::mt19937_64 rng(21);
  const auto img = testing::random_smooth_pixmap(rng, 64, 64);
  const auto grid = decompose(img, {4, 4});
  TrainParams params;
  params.target_size = 32;
  std::vector<LloydStep> trace;
  train(grid.blocks, params, &trace);
  REQUIRE(trace.size() > 6);
  for (size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].codebook_size != trace[i - 1].codebook_size) continue;
    CHECK(trace[i].distortion <= trace[i - 1].distortion);
  }
}

TEST_CASE("train: empty cells are repaired and size is preserved") {
  // Three distinct vectors cannot fill 8 cells.
  std::vector<BlockVector> blocks;
  for (int r = 0; r < 10; ++r) {
    blocks.push_back({0, 0, 0, 0});
    blocks.push_back({100, 100, 100, 100});
    blocks.push_back({250, 250, 250, 250});
  }
  TrainParams params;
  params.target_size = 8;
  std::vector<LloydStep> trace;
  const auto cb = train(blocks, params, &trace);
  CHECK(cb.size() == 8);
  CHECK(distortion(blocks, cb) == 0.0);
  for (const auto& s : trace) CHECK((s.codebook_size & (s.codebook_size - 1)) == 0);
}

TEST_CASE("train: output is independent of thread count") {
  std::mt19937_64 rng(3);
  const auto img = testing::random_smooth_pixmap(rng, 96, 80);
  const auto grid = decompose(img, {4, 4});
  TrainParams params;
  params.target_size = 64;
  params.threads = 1;
  const auto one = train(grid.blocks, params);
  params.threads = 4;
  const auto four = train(grid.blocks, params);
  params.threads = 0;
  const auto all = train(grid.blocks, params);
  CHECK(one == four);
  CHECK(one == all);
}

TEST_CASE("train: 512x512 image, 4x4 blocks, 256 codewords") {
  std::mt19937_64 rng(512);
  const auto img = testing::random_smooth_pixmap(rng, 512, 512);
  const auto grid = decompose(img, {4, 4});
  TrainParams params;
  params.target_size = 256;
  params.threads = 0;
  const auto cb = train(grid.blocks, params);
  CHECK(cb.size() == 256);
  CHECK(cb.dim() == 16);
  const auto ix = encode_plain(grid, cb, 0);
  CHECK(ix.size() == 16384);
}

TEST_CASE("train: argument errors") {
  TrainParams params;
  params.target_size = 2;
  CHECK_THROWS_AS(train({}, params), std::invalid_argument);
  const std::vector<BlockVector> mixed{{1, 2}, {1, 2, 3}};
  CHECK_THROWS_AS(train(mixed, params), StructuralError);
  const std::vector<BlockVector> ok{{1, 2}, {3, 4}};
  params.target_size = 3;
  CHECK_THROWS_AS(train(ok, params), std::invalid_argument);
  params.target_size = 2;
  params.rel_tol = 0.0;
  CHECK_THROWS_AS(train(ok, params), std::invalid_argument);
}

TEST_CASE("distortion") {
  const Codebook cb(2, {3, 4, 10, 10});
  CHECK(distortion(std::vector<BlockVector>{{0, 0}}, Codebook(2, {3, 4})) == 25.0);
  CHECK(distortion(std::vector<BlockVector>{{3, 4}, {10, 10}}, cb) == 0.0);
  CHECK_THROWS_AS(distortion(std::vector<BlockVector>{}, cb), std::invalid_argument);

  std::mt19937_64 rng(50);
  const auto blocks = random_blocks(rng, 50, 8);
  const auto random_cb = testing::random_codebook(rng, 12, 8);
  uint64_t total = 0;
  for (const auto& b : blocks) total += testing::brute_min_distance(random_cb, b);
  CHECK(distortion(blocks, random_cb) == static_cast<double>(total) / 50.0);
}
