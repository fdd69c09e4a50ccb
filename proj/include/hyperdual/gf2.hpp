#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperdual {

/// Largest vector length supported by the single-word representation.
inline constexpr std::size_t kMaxBits = 64;

/// A vector over GF(2) of at most 64 coordinates, packed into one word.
/// Coordinate i lives in bit i, so the string form "1101" has coordinate 0
/// leftmost.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector from_word(std::size_t length, std::uint64_t word);
  static BitVector from_string(std::string_view bits);
  static BitVector from_support(std::size_t length, std::span<const std::uint32_t> support);

  [[nodiscard]] std::size_t size() const noexcept { return length_; }
  [[nodiscard]] std::uint64_t word() const noexcept { return word_; }

  [[nodiscard]] bool get(std::size_t i) const;
  void set(std::size_t i, bool value);

  [[nodiscard]] std::size_t weight() const noexcept;
  [[nodiscard]] bool none() const noexcept { return word_ == 0; }
  [[nodiscard]] std::vector<std::uint32_t> support() const;
  [[nodiscard]] std::string str() const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::uint64_t word_ = 0;
};

/// Parity of the coordinate-wise AND.
[[nodiscard]] bool dot(const BitVector& a, const BitVector& b);

/// Dense binary matrix stored as rows. Row count is unbounded, column count
/// is capped at kMaxBits.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t cols = 0);
  BitMatrix(std::size_t cols, std::vector<BitVector> rows);

  /// Rows given as strings of '0'/'1'; all strings must share one length.
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t row_count() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t col_count() const noexcept { return cols_; }
  [[nodiscard]] const std::vector<BitVector>& rows() const noexcept { return rows_; }
  [[nodiscard]] const BitVector& row(std::size_t i) const { return rows_.at(i); }

  void push_back(const BitVector& row);
  [[nodiscard]] BitMatrix transpose() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Nonzero rows of the reduced row echelon form. Pivot columns increase
/// down the rows and every pivot column is zero outside its own row.
[[nodiscard]] BitMatrix reduced_row_echelon(const BitMatrix& m);

[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// Basis of {x : m x = 0}. One vector per free column of the reduced echelon
/// form, in increasing column order, with that free coordinate set.
[[nodiscard]] std::vector<BitVector> null_space_basis(const BitMatrix& m);

[[nodiscard]] bool in_span(const BitVector& v, std::span<const BitVector> basis);

/// Greedy scan in row order keeping each row that is independent of the
/// rows kept so far.
[[nodiscard]] std::vector<std::size_t> independent_row_indices(const BitMatrix& m);

/// True when both lists generate the same subspace.
[[nodiscard]] bool same_span(std::span<const BitVector> a, std::span<const BitVector> b);

}  // namespace hyperdual
