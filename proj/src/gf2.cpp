#include "hyperdual/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "hyperdual/errors.hpp"

namespace hyperdual {

namespace {

std::uint64_t low_mask(std::size_t length) {
  return length >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

void check_length(std::size_t length) {
  if (length > kMaxBits) {
    throw CapacityError("bit vector length " + std::to_string(length) +
                        " exceeds the " + std::to_string(kMaxBits) + "-bit ceiling");
  }
}

// Echelon basis kept in insertion order; each entry records its pivot bit
// (lowest set bit) and every later entry is cleared at earlier pivots.
class EchelonBasis {
 public:
  std::uint64_t reduce(std::uint64_t w) const {
    for (const auto& [pivot, row] : rows_) {
      if (w & pivot) w ^= row;
    }
    return w;
  }

  bool insert(std::uint64_t w) {
    w = reduce(w);
    if (w == 0) return false;
    rows_.emplace_back(w & (~w + 1), w);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows_;
};

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length) { check_length(length); }

BitVector BitVector::from_word(std::size_t length, std::uint64_t word) {
  BitVector v(length);
  if (word & ~low_mask(length)) {
    throw ValidationError("word has bits set beyond length " + std::to_string(length));
  }
  v.word_ = word;
  return v;
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.word_ |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw ValidationError("bit string may contain only '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_support(std::size_t length, std::span<const std::uint32_t> support) {
  BitVector v(length);
  for (auto i : support) v.set(i, true);
  return v;
}

bool BitVector::get(std::size_t i) const {
  if (i >= length_) throw ValidationError("bit index " + std::to_string(i) + " out of range");
  return (word_ >> i) & 1;
}

void BitVector::set(std::size_t i, bool value) {
  if (i >= length_) throw ValidationError("bit index " + std::to_string(i) + " out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  word_ = value ? (word_ | bit) : (word_ & ~bit);
}

std::size_t BitVector::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(word_));
}

std::vector<std::uint32_t> BitVector::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint64_t w = word_; w != 0; w &= w - 1) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(w)));
  }
  return out;
}

std::string BitVector::str() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if ((word_ >> i) & 1) s[i] = '1';
  }
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) {
    throw ValidationError("length mismatch: " + std::to_string(length_) + " vs " +
                          std::to_string(other.length_));
  }
  word_ ^= other.word_;
  return *this;
}

bool dot(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) {
    throw ValidationError("length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  }
  return std::popcount(a.word() & b.word()) & 1;
}

BitMatrix::BitMatrix(std::size_t cols) : cols_(cols) { check_length(cols); }

BitMatrix::BitMatrix(std::size_t cols, std::vector<BitVector> rows) : BitMatrix(cols) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("row length does not match column count");
  }
  rows_ = std::move(rows);
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  BitMatrix m(rows.size() == 0 ? 0 : rows.begin()->size());
  for (auto r : rows) m.push_back(BitVector::from_string(r));
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.push_back(BitVector::from_word(n, std::uint64_t{1} << i));
  return m;
}

void BitMatrix::push_back(const BitVector& row) {
  if (row.size() != cols_) throw ValidationError("row length does not match column count");
  rows_.push_back(row);
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(rows_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    std::uint64_t w = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      w |= ((rows_[r].word() >> c) & 1) << r;
    }
    t.rows_.push_back(BitVector::from_word(rows_.size(), w));
  }
  return t;
}

BitMatrix reduced_row_echelon(const BitMatrix& m) {
  std::vector<std::uint64_t> rows;
  rows.reserve(m.row_count());
  for (const auto& r : m.rows()) rows.push_back(r.word());

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.col_count() && rank < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [bit](std::uint64_t w) { return w & bit; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    ++rank;
  }

  BitMatrix out(m.col_count());
  for (std::size_t r = 0; r < rank; ++r) {
    out.push_back(BitVector::from_word(m.col_count(), rows[r]));
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  EchelonBasis basis;
  for (const auto& r : m.rows()) basis.insert(r.word());
  return basis.size();
}

std::vector<BitVector> null_space_basis(const BitMatrix& m) {
  const BitMatrix rref = reduced_row_echelon(m);
  const std::size_t cols = m.col_count();

  std::vector<std::size_t> pivot_col;
  std::uint64_t pivot_mask = 0;
  for (const auto& r : rref.rows()) {
    auto c = static_cast<std::size_t>(std::countr_zero(r.word()));
    pivot_col.push_back(c);
    pivot_mask |= std::uint64_t{1} << c;
  }

  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    const std::uint64_t free_bit = std::uint64_t{1} << f;
    if (pivot_mask & free_bit) continue;
    std::uint64_t w = free_bit;
    for (std::size_t r = 0; r < rref.row_count(); ++r) {
      if (rref.row(r).word() & free_bit) w |= std::uint64_t{1} << pivot_col[r];
    }
    basis.push_back(BitVector::from_word(cols, w));
  }
  return basis;
}

bool in_span(const BitVector& v, std::span<const BitVector> basis) {
  EchelonBasis echelon;
  for (const auto& b : basis) {
    if (b.size() != v.size()) {
      throw ValidationError("length mismatch: vector has " + std::to_string(v.size()) +
                            " coordinates, basis element has " + std::to_string(b.size()));
    }
    echelon.insert(b.word());
  }
  return echelon.reduce(v.word()) == 0;
}

std::vector<std::size_t> independent_row_indices(const BitMatrix& m) {
  EchelonBasis basis;
  std::vector<std::size_t> kept;
  for (std::size_t r = 0; r < m.row_count(); ++r) {
    if (basis.insert(m.row(r).word())) kept.push_back(r);
  }
  return kept;
}

bool same_span(std::span<const BitVector> a, std::span<const BitVector> b) {
  auto covered = [](std::span<const BitVector> xs, std::span<const BitVector> ys) {
    return std::all_of(xs.begin(), xs.end(), [&](const BitVector& x) { return in_span(x, ys); });
  };
  return covered(a, b) && covered(b, a);
}

}  // namespace hyperdual
