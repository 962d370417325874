#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "smallcover/gf2.hpp"

using smallcover::gf2::BitMatrix;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, bit(rng));
  return m;
}

}  // namespace

TEST_CASE("bit access") {
  BitMatrix m(3, 130);
  CHECK(m.is_zero());
  m.set(1, 129, true);
  m.flip(2, 64);
  CHECK(m.get(1, 129));
  CHECK(m.get(2, 64));
  CHECK_FALSE(m.get(0, 0));
  CHECK(m.support(1) == std::vector<std::size_t>{129});
  m.flip(1, 129);
  CHECK_FALSE(m.get(1, 129));
  CHECK_FALSE(m.is_zero());
}

TEST_CASE("rank matches span enumeration") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 12;
    const BitMatrix m = random_matrix(rows, cols, rng, trial % 3 == 0 ? 0.2 : 0.5);
    std::vector<std::uint32_t> vectors;
    for (std::size_t r = 0; r < rows; ++r) {
      std::uint32_t x = 0;
      for (std::size_t c = 0; c < cols; ++c) x |= static_cast<std::uint32_t>(m.get(r, c)) << c;
      vectors.push_back(x);
    }
    CHECK(smallcover::gf2::rank(m) == static_cast<std::size_t>(oracle::span_rank(vectors)));
  }
}

TEST_CASE("rank of wide matrices") {
  BitMatrix identity(100, 200);
  for (std::size_t i = 0; i < 100; ++i) identity.set(i, i + 100, true);
  CHECK(smallcover::gf2::rank(identity) == 100);
  BitMatrix dup(4, 70);
  for (std::size_t r = 0; r < 4; ++r) dup.set(r, 69, true);
  CHECK(smallcover::gf2::rank(dup) == 1);
  CHECK(smallcover::gf2::rank(BitMatrix(0, 5)) == 0);
}

TEST_CASE("multiply agrees with the entrywise definition") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t a = 1 + rng() % 8, b = 1 + rng() % 80, c = 1 + rng() % 8;
    const BitMatrix x = random_matrix(a, b, rng), y = random_matrix(b, c, rng);
    const BitMatrix z = smallcover::gf2::multiply(x, y);
    REQUIRE(z.rows() == a);
    REQUIRE(z.cols() == c);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        bool sum = false;
        for (std::size_t k = 0; k < b; ++k) sum ^= x.get(i, k) && y.get(k, j);
        CHECK(z.get(i, j) == sum);
      }
  }
}
