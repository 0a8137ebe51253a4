#pragma once

#include <vector>

#include "endcohom/integer.hpp"

namespace endcohom {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, std::vector<Int>(cols, Int(0))) {}
  /// Every row must have `cols` entries.
  IntMatrix(std::vector<std::vector<Int>> rows, std::size_t cols);
  static IntMatrix from_rows(std::vector<std::vector<Int>> rows);

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i][j]; }
  const std::vector<Int>& row(std::size_t i) const { return data_[i]; }
  const std::vector<std::vector<Int>>& row_data() const { return data_; }

  void append_row(std::vector<Int> r);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Int>> data_;
};

/// Rank over Q (fraction-free Bareiss elimination).
std::size_t integer_rank(const IntMatrix& m);

/// Row-style Hermite normal form of the row lattice: nonzero rows only,
/// pivots strictly increasing and positive, entries above a pivot reduced
/// into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Whether v is an integer combination of the rows of m.
bool in_span(const std::vector<Int>& v, const IntMatrix& m);

/// Coefficients k with sum k_i n_i = gcd(n) (gcd taken nonnegative).
std::vector<Int> bezout(const std::vector<Int>& n);

}  // namespace endcohom
