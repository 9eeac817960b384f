#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "vqcrypt/permutation.hpp"

using namespace vqcrypt;

// Frozen values from tests/oracles/reference_values.py.
TEST_CASE("prng_next: SplitMix64 reference outputs") {
  const auto first = prng_next(0);
  CHECK(first.output == 0xE220A8397B1DCDAFull);
  CHECK(first.next_state == 0x9E3779B97F4A7C15ull);
  CHECK(prng_next(first.next_state).output == 0x6E789E6AA1B965F4ull);
  static_assert(prng_next(0).output == 0xE220A8397B1DCDAFull);
}

TEST_CASE("prng_next: pure and collision-free over a long run") {
  CHECK(prng_next(12345).output == prng_next(12345).output);
  for (uint64_t start : {0ull, 0xFFFFFFFFFFFFFFFFull, 0xDEADBEEFull}) {
    std::unordered_set<uint64_t> seen;
    uint64_t s = start;
    for (int i = 0; i < 10000; ++i) {
      const auto step = prng_next(s);
      CHECK(seen.insert(step.output).second);
      s = step.next_state;
    }
  }
}

TEST_CASE("derive_permutation: golden vectors") {
  CHECK(derive_permutation(Seed{42}, 1).forward() == std::vector<uint16_t>{0});
  const auto p = derive_permutation(Seed{0xDEADBEEF}, 8);
  CHECK(p.forward() == std::vector<uint16_t>{7, 1, 2, 6, 4, 5, 0, 3});
  CHECK(p.inverse() == std::vector<uint16_t>{6, 1, 2, 7, 4, 5, 3, 0});
  CHECK(invert(p).forward() == std::vector<uint16_t>{6, 1, 2, 7, 4, 5, 3, 0});
}

TEST_CASE("derive_permutation: always a bijection with a consistent inverse") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<size_t> msize(1, 600);
  for (int t = 0; t < 200; ++t) {
    const size_t m = msize(rng);
    const auto p = derive_permutation(Seed{rng()}, m);
    auto sorted = p.forward();
    std::sort(sorted.begin(), sorted.end());
    std::vector<uint16_t> expect(m);
    std::iota(expect.begin(), expect.end(), uint16_t{0});
    CHECK(sorted == expect);
    for (size_t i = 0; i < m; ++i) {
      CHECK(p.inverse(p.forward(i)) == i);
      CHECK(p.forward(p.inverse(i)) == i);
    }
  }
}

TEST_CASE("derive_permutation: deterministic and seed-sensitive") {
  CHECK(derive_permutation(Seed{7}, 256) == derive_permutation(Seed{7}, 256));
  std::mt19937_64 rng(2);
  int differ = 0;
  for (int t = 0; t < 1000; ++t) {
    const uint64_t a = rng(), b = rng();
    if (a == b) continue;
    if (derive_permutation(Seed{a}, 256) != derive_permutation(Seed{b}, 256)) ++differ;
  }
  CHECK(differ >= 999);
  CHECK_THROWS_AS(derive_permutation(Seed{1}, 0), std::invalid_argument);
}

TEST_CASE("invert") {
  const auto p = derive_permutation(Seed{99}, 37);
  CHECK(invert(invert(p)) == p);
  CHECK(invert(KeyedPermutation::identity(5)) == KeyedPermutation::identity(5));
  CHECK_THROWS_AS(KeyedPermutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(KeyedPermutation({0, 3}), std::invalid_argument);
}

TEST_CASE("parse_seed") {
  CHECK(parse_seed("77") == Seed{77});
  CHECK(parse_seed("0xDEADBEEF") == Seed{0xDEADBEEF});
  CHECK(parse_seed("0XffFFffFFffFFffFF") == Seed{0xFFFFFFFFFFFFFFFFull});
  CHECK(parse_seed("18446744073709551615") == Seed{0xFFFFFFFFFFFFFFFFull});
  CHECK_FALSE(parse_seed("18446744073709551616"));
  CHECK_FALSE(parse_seed(""));
  CHECK_FALSE(parse_seed("0x"));
  CHECK_FALSE(parse_seed("12a"));
  CHECK_FALSE(parse_seed("-1"));
}
