#pragma once

// Packed arithmetic over GF(2).
//
// A BitVector holds up to 64 bits in a single machine word. Bit i of the
// vector is bit i of the word (least significant first), so the leftmost
// character of the text form "0110..." is bit 0. Bits at positions >= size()
// are always zero.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcode {

class BitVector {
 public:
  static constexpr std::size_t kMaxLen = 64;

  BitVector() = default;
  /// Builds a vector of `len` bits from the low bits of `bits`; higher bits are masked off.
  explicit BitVector(std::size_t len, std::uint64_t bits = 0);

  /// Parses a string of '0'/'1' characters, leftmost character = bit 0.
  static BitVector from_string(std::string_view text);
  static BitVector ones(std::size_t len);
  static BitVector unit(std::size_t len, std::size_t i);

  std::size_t size() const { return len_; }
  std::uint64_t word() const { return bits_; }
  bool get(std::size_t i) const { return (bits_ >> i) & 1U; }
  void set(std::size_t i, bool value);

  int weight() const { return std::popcount(bits_); }
  bool is_zero() const { return bits_ == 0; }

  /// Inner product over GF(2).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(const BitVector& a, const BitVector& b);
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::uint64_t bits_ = 0;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  /// rows x cols zero matrix.
  BitMatrix(std::size_t rows, std::size_t cols);
  /// Every row must have length `cols`.
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BitMatrix identity(std::size_t k);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows() == cols_; }

  const BitVector& row(std::size_t i) const { return data_.at(i); }
  const std::vector<BitVector>& row_data() const { return data_; }
  bool get(std::size_t i, std::size_t j) const { return data_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool value) { data_.at(i).set(j, value); }

  /// Column j read top to bottom as a vector of length rows().
  BitVector column(std::size_t j) const;
  BitMatrix transpose() const;

  BitMatrix with_zero_columns(std::size_t p) const;
  BitMatrix with_row(const BitVector& row) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> data_;
};

/// M * v for a column vector v; result bit i is the parity of (row i AND v).
BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v);

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Row rank by Gaussian elimination on a copy.
std::size_t rank(const BitMatrix& m);

/// Smallest t >= 1 with M^t == I. `cap` == 0 means 2^k.
std::uint64_t matrix_order(const BitMatrix& m, std::uint64_t cap = 0);

}  // namespace lcode
