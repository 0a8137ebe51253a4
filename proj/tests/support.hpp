#pragma once

// Generators and brute-force oracles shared by the test binaries. The oracles
// avoid the library's own algorithms: coefficients are summed term by term,
// integers are factored by trial division, ranks come from minors or rational
// elimination.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "endcohom/heights.hpp"
#include "endcohom/int_matrix.hpp"
#include "endcohom/quotients.hpp"
#include "endcohom/series.hpp"

namespace testing_support {

using endcohom::Int;
using endcohom::Rat;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  // Tail built from small integer polynomial and geometric terms.
  endcohom::PowerSeries series(long coeff = 9) {
    std::vector<Int> prefix;
    for (long i = range(0, 6); i > 0; --i) prefix.push_back(range(-coeff, coeff));
    endcohom::TailSpec tail;
    const long shape = range(0, 4);
    if (shape == 1 || shape == 3) {
      std::vector<Rat> q;
      for (long k = range(0, 2); k >= 0; --k) q.push_back(Rat(range(-coeff, coeff)));
      tail = tail + endcohom::TailSpec::poly(q);
    }
    if (shape >= 2) {
      static const long ratios[] = {-2, -1, 2, 3, 4, 7};
      tail = tail + endcohom::TailSpec::geometric(Rat(range(-coeff, coeff)), ratios[range(0, 5)]);
    }
    if (shape == 4 && coin()) {
      tail = tail + endcohom::TailSpec::geometric(Rat(range(-coeff, coeff)), -3);
    }
    return {prefix, tail};
  }

  std::vector<Int> primes_up_to(long bound) {
    std::vector<Int> out;
    for (long n = 2; n <= bound; ++n) {
      bool prime = true;
      for (long d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
      if (prime) out.push_back(n);
    }
    return out;
  }

  endcohom::HeightSeq height(unsigned max_exceptions = 6, long max_prime = 97) {
    const auto primes = primes_up_to(max_prime);
    std::map<Int, endcohom::HeightValue> ex;
    for (long n = range(0, max_exceptions); n > 0; --n) {
      const Int p = primes[range(0, static_cast<long>(primes.size()) - 1)];
      ex.insert_or_assign(p, range(0, 5) == 0 ? endcohom::HeightValue::infinity()
                                              : endcohom::HeightValue::finite(range(0, 6)));
    }
    return {ex, coin() ? endcohom::HeightSeq::Default::Zero : endcohom::HeightSeq::Default::Infinity};
  }

  endcohom::GElem g_elem() { return {range(-20, 20), endcohom::PQElem(series())}; }
  endcohom::KQElem kq_elem() { return {range(-20, 20), series(), range(-20, 20)}; }

 private:
  std::mt19937_64 rng_;
};

// a_i straight from the prefix and the tail definition, one term at a time.
inline Int coefficient_oracle(const endcohom::PowerSeries& s, unsigned long i) {
  if (i < s.prefix().size()) return s.prefix()[i];
  const endcohom::TailSpec& t = s.tail();
  Rat v = 0;
  Rat power = 1;
  for (const auto& c : t.poly_coeffs()) {
    v += c * power;
    power *= Rat(static_cast<long>(i));
  }
  for (const auto& [r, c] : t.geometric_terms()) {
    Int rp = 1;
    for (unsigned long k = 0; k < i; ++k) rp *= r;
    v += c * Rat(rp);
  }
  if (const auto& h = t.height_term()) {
    Int a = h->multiplier;
    std::size_t n = 0;
    for (long p = 2; n < i; ++p) {
      bool prime = true;
      for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
      if (!prime) continue;
      ++n;
      const endcohom::HeightValue hv = h->heights.at(p);
      const unsigned long e = hv.is_infinite() ? i : std::min<unsigned long>(hv.value(), i);
      for (unsigned long k = 0; k < e; ++k) a *= p;
    }
    v += Rat(a);
  }
  if (v.get_den() != 1) return Int(-999999999);
  return v.get_num();
}

// Exponent of p in n by repeated division (n != 0).
inline unsigned long divide_out(Int n, const Int& p) {
  unsigned long e = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

// Rank over Q by Gaussian elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<Rat>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<Rat>> to_rat(const endcohom::IntMatrix& m) {
  std::vector<std::vector<Rat>> out;
  for (const auto& row : m.row_data()) {
    std::vector<Rat> r;
    for (const auto& x : row) r.emplace_back(x);
    out.push_back(r);
  }
  return out;
}

// Determinant by cofactor expansion along the first row.
inline Int laplace_det(const std::vector<std::vector<Int>>& m) {
  if (m.empty()) return 1;
  if (m.size() == 1) return m[0][0];
  Int det = 0;
  for (std::size_t c = 0; c < m.size(); ++c) {
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < m.size(); ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const Int term = m[0][c] * laplace_det(minor);
    det += c % 2 == 0 ? term : Int(-term);
  }
  return det;
}

// Largest k with a nonzero k x k minor.
inline std::size_t minor_rank(const std::vector<std::vector<Int>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k) {
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<Int>> sub;
        for (std::size_t r = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          std::vector<Int> row;
          for (std::size_t c = 0; c < cols; ++c) {
            if (csel[c]) row.push_back(m[r][c]);
          }
          sub.push_back(row);
        }
        if (laplace_det(sub) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

}  // namespace testing_support
