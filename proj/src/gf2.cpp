#include "lcode/gf2.hpp"

#include <limits>
#include <utility>

#include "lcode/error.hpp"

namespace lcode {

namespace {

std::uint64_t low_mask(std::size_t len) {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

}  // namespace

BitVector::BitVector(std::size_t len, std::uint64_t bits) : len_(len), bits_(bits & low_mask(len)) {
  if (len > kMaxLen) {
    throw Error("vector length " + std::to_string(len) + " exceeds " + std::to_string(kMaxLen));
  }
}

BitVector BitVector::from_string(std::string_view text) {
  BitVector v(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      v.bits_ |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw ParseError(1, i + 1, std::string("unexpected character '") + text[i] + "'");
    }
  }
  return v;
}

BitVector BitVector::ones(std::size_t len) { return BitVector(len, ~std::uint64_t{0}); }

BitVector BitVector::unit(std::size_t len, std::size_t i) {
  BitVector v(len);
  v.set(i, true);
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= len_) throw Error("bit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

bool BitVector::dot(const BitVector& other) const {
  if (len_ != other.len_) throw Error("inner product of vectors with different lengths");
  return std::popcount(bits_ & other.bits_) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (len_ != other.len_) throw Error("xor of vectors with different lengths");
  bits_ ^= other.bits_;
  return *this;
}

BitVector operator&(const BitVector& a, const BitVector& b) {
  if (a.len_ != b.len_) throw Error("and of vectors with different lengths");
  return BitVector(a.len_, a.bits_ & b.bits_);
}

std::string BitVector::to_string() const {
  std::string out(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVector(cols)) {}

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), data_(std::move(rows)) {
  for (const auto& r : data_) {
    if (r.size() != cols_) throw Error("matrix rows must all have length " + std::to_string(cols_));
  }
}

BitMatrix BitMatrix::identity(std::size_t k) {
  BitMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) m.set(i, i, true);
  return m;
}

BitVector BitMatrix::column(std::size_t j) const {
  if (j >= cols_) throw Error("column index out of range");
  BitVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) c.set(i, get(i, j));
  return c;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (get(i, j)) t.set(j, i, true);
    }
  }
  return t;
}

BitMatrix BitMatrix::with_zero_columns(std::size_t p) const {
  std::vector<BitVector> out;
  out.reserve(rows());
  for (const auto& r : data_) out.emplace_back(cols_ + p, r.word());
  return BitMatrix(cols_ + p, std::move(out));
}

BitMatrix BitMatrix::with_row(const BitVector& row) const {
  auto out = data_;
  out.push_back(row);
  return BitMatrix(cols_, std::move(out));
}

BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.cols()) {
    throw Error("dimension mismatch: matrix has " + std::to_string(m.cols()) + " columns, vector has length " +
                std::to_string(v.size()));
  }
  BitVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).dot(v)) out.set(i, true);
  }
  return out;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error("dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  std::vector<BitVector> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BitVector acc(b.cols());
    std::uint64_t sel = a.row(i).word();
    while (sel != 0) {
      acc ^= b.row(std::countr_zero(sel));
      sel &= sel - 1;
    }
    out.push_back(acc);
  }
  return BitMatrix(b.cols(), std::move(out));
}

std::size_t rank(const BitMatrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(m.rows());
  for (const auto& r : m.row_data()) rows.push_back(r.word());

  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i] & bit) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

std::uint64_t matrix_order(const BitMatrix& m, std::uint64_t cap) {
  if (!m.square()) throw Error("matrix order requires a square matrix");
  const std::size_t k = m.rows();
  if (rank(m) != k) throw Error("matrix is not invertible");
  if (cap == 0) cap = k >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << k;

  const BitMatrix id = BitMatrix::identity(k);
  BitMatrix power = m;
  for (std::uint64_t t = 1; t <= cap; ++t) {
    if (power == id) return t;
    power = mat_mul(power, m);
  }
  throw Error("matrix order exceeds cap " + std::to_string(cap));
}

}  // namespace lcode
