#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace edlat {

/// Sylvester-Hadamard matrix of size 2^k, entries +-1, first row/column all +1.
///
/// Entries are generated on demand from the bit-parity identity
/// H[i][j] = (-1)^popcount(i & j), so even large orders cost no storage.
class HadamardMatrix {
 public:
  explicit HadamardMatrix(int order_log2)
      : order_log2_(order_log2), size_(std::size_t{1} << order_log2) {}

  std::size_t size() const { return size_; }
  int order_log2() const { return order_log2_; }

  int operator()(std::size_t row, std::size_t col) const {
    if (row >= size_ || col >= size_) {
      throw std::out_of_range("HadamardMatrix: index out of range");
    }
    return (std::popcount(row & col) & 1U) ? -1 : 1;
  }

 private:
  int order_log2_;
  std::size_t size_;
};

inline constexpr int kMaxHadamardOrderLog2 = 16;

inline HadamardMatrix sylvester_hadamard(int order_log2) {
  if (order_log2 < 0 || order_log2 > kMaxHadamardOrderLog2) {
    throw std::length_error("sylvester_hadamard: order_log2 must lie in [0, 16]");
  }
  return HadamardMatrix(order_log2);
}

}  // namespace edlat
