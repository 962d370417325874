#include "smallcover/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallcover::gf2 {

std::vector<std::size_t> BitMatrix::support(std::size_t r) const {
  std::vector<std::size_t> out;
  const auto words = row(r);
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::uint64_t x = words[w]; x; x &= x - 1) out.push_back(w * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
  return out;
}

bool BitMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t rank(BitMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      auto a = m.row(pivot);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const auto pivot_row = m.row(r);
    const std::size_t first_word = c / 64;
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (!m.get(i, c)) continue;
      auto target = m.row(i);
      for (std::size_t w = first_word; w < target.size(); ++w) target[w] ^= pivot_row[w];
    }
    ++r;
  }
  return r;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("gf2::multiply: shape mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k : a.support(i)) {
      const auto src = b.row(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

}  // namespace smallcover::gf2
