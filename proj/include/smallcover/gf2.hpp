#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace smallcover::gf2 {

/// Dense matrix over GF(2), one packed row of 64-bit words per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return bits_[r * words_ + c / 64] >> (c % 64) & 1u; }
  void flip(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64); }
  void set(std::size_t r, std::size_t c, bool value) {
    if (get(r, c) != value) flip(r, c);
  }

  std::span<const std::uint64_t> row(std::size_t r) const { return {bits_.data() + r * words_, words_}; }
  std::span<std::uint64_t> row(std::size_t r) { return {bits_.data() + r * words_, words_}; }

  /// Column indices of the set bits of row r, ascending.
  std::vector<std::size_t> support(std::size_t r) const;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Rank by Gaussian elimination on a copy.
std::size_t rank(BitMatrix m);

/// Product a * b.
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

}  // namespace smallcover::gf2
