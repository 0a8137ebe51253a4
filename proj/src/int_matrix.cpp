#include "endcohom/int_matrix.hpp"

#include <utility>

#include "endcohom/errors.hpp"

namespace endcohom {

IntMatrix::IntMatrix(std::vector<std::vector<Int>> rows, std::size_t cols) : cols_(cols), data_(std::move(rows)) {
  for (const auto& r : data_) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix row");
  }
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<Int>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  return {std::move(rows), cols};
}

void IntMatrix::append_row(std::vector<Int> r) {
  if (data_.empty() && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw DimensionMismatch("row length differs from matrix width");
  data_.push_back(std::move(r));
}

std::size_t integer_rank(const IntMatrix& m) {
  auto a = m.row_data();
  const std::size_t rows = a.size(), cols = m.cols();
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[rank][c] * a[i][j] - a[i][c] * a[rank][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  auto a = m.row_data();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero entry remains.
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i) {
        if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
      }
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] == 0) continue;
        const Int q = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r == a.size() || a[r][c] == 0) continue;
    if (a[r][c] < 0) {
      for (auto& x : a[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);
  return {std::move(a), cols};
}

bool in_span(const std::vector<Int>& v, const IntMatrix& m) {
  if (v.size() != m.cols()) throw DimensionMismatch("vector length differs from matrix width");
  const IntMatrix h = hermite_normal_form(m);
  std::vector<Int> rest = v;
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    while (h.at(i, c) == 0) {
      if (rest[c] != 0) return false;
      ++c;
    }
    if (rest[c] % h.at(i, c) != 0) return false;
    const Int q = rest[c] / h.at(i, c);
    for (std::size_t j = c; j < rest.size(); ++j) rest[j] -= q * h.at(i, j);
    ++c;
  }
  for (; c < rest.size(); ++c) {
    if (rest[c] != 0) return false;
  }
  return true;
}

std::vector<Int> bezout(const std::vector<Int>& n) {
  std::vector<Int> k(n.size(), Int(0));
  Int g = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] == 0) continue;
    Int next, s, t;
    mpz_gcdext(next.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) k[j] *= s;
    k[i] = t;
    g = next;
  }
  return k;
}

}  // namespace endcohom
