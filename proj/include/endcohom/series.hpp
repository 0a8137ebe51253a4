#pragma once

#include <map>
#include <optional>
#include <vector>

#include "endcohom/height_seq.hpp"
#include "endcohom/integer.hpp"

namespace endcohom {

/// The witness sequence a_i = c * prod_{n <= i} p_n^{min(h_n, i)} built from a
/// prescribed height h (p_n is the n-th prime; the empty product at i = 0 is 1).
struct HeightTerm {
  Int multiplier{1};
  HeightSeq heights;

  friend bool operator==(const HeightTerm&, const HeightTerm&) = default;
};

/// Closed-form description of a_i for all large i: a polynomial in the index,
/// a finite sum of geometric sequences c*r^i, and at most one height witness.
///
/// Polynomial and geometric coefficients are rationals; the combined value is
/// an integer at every index where the owning series uses the tail.
class TailSpec {
 public:
  TailSpec() = default;

  static TailSpec constant(const Rat& c);
  /// q(i) = sum_k coeffs[k] * i^k.
  static TailSpec poly(std::vector<Rat> coeffs);
  static TailSpec geometric(const Rat& c, const Int& r);
  static TailSpec height(HeightSeq h, const Int& multiplier = 1);

  /// Monomial coefficients, no trailing zeros.
  const std::vector<Rat>& poly_coeffs() const { return poly_; }
  /// ratio r -> coefficient c, c != 0, r != 1.
  const std::map<Int, Rat>& geometric_terms() const { return geometric_; }
  const std::optional<HeightTerm>& height_term() const { return height_; }

  bool is_zero() const { return poly_.empty() && geometric_.empty() && !height_; }
  bool has_height() const { return height_.has_value(); }

  /// Value of the formula at index i.
  Rat evaluate(unsigned long i) const;
  /// Value of the polynomial and geometric part only.
  Rat evaluate_periodic_part(unsigned long i) const;

  /// Throws UnsupportedTailCombination when both sides carry different
  /// height witnesses.
  TailSpec operator+(const TailSpec& other) const;
  TailSpec operator-() const;
  TailSpec operator-(const TailSpec& other) const { return *this + (-other); }
  TailSpec scaled(const Int& n) const;

  TailSpec without_height() const;

  friend bool operator==(const TailSpec&, const TailSpec&) = default;

 private:
  void normalize();

  std::vector<Rat> poly_;
  std::map<Int, Rat> geometric_;
  std::optional<HeightTerm> height_;
};

/// Value of a height witness at index i (without multiplier).
Int height_witness_value(const HeightSeq& h, unsigned long i);

/// An integer power series sum a_i x^i given by an explicit prefix
/// a_0..a_{N-1} and a TailSpec for i >= N.
///
/// Construction canonicalizes: the prefix is as short as possible, geometric
/// terms with ratio 0 or 1 are folded away, and a height witness with a zero
/// default (which is eventually geometric) is rewritten as a geometric term.
/// Two canonical series are equal iff their fields are equal.
class PowerSeries {
 public:
  PowerSeries() = default;
  PowerSeries(std::vector<Int> prefix, TailSpec tail);

  static PowerSeries polynomial(std::vector<Int> coeffs) { return {std::move(coeffs), {}}; }
  /// The series with every coefficient equal to c (c = 1 is 1/(1-x)).
  static PowerSeries constant_tail(const Int& c) { return {{}, TailSpec::constant(c)}; }

  Int coefficient(unsigned long i) const;
  std::vector<Int> coefficients(unsigned long count) const;

  const std::vector<Int>& prefix() const { return prefix_; }
  const TailSpec& tail() const { return tail_; }

  bool is_zero() const { return prefix_.empty() && tail_.is_zero(); }

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  void canonicalize();

  std::vector<Int> prefix_;
  TailSpec tail_;
};

PowerSeries add(const PowerSeries& s, const PowerSeries& t);
PowerSeries negate(const PowerSeries& s);
PowerSeries subtract(const PowerSeries& s, const PowerSeries& t);
PowerSeries scalar_mul(const Int& n, const PowerSeries& s);

/// sum_{i>=1} (c_i - c_{i-1}) x^i. Throws UnsupportedTailCombination for a
/// height witness tail.
PowerSeries difference_transform(const PowerSeries& s);

/// sum_i (s0 + sum_{j<=i} a_j) x^i. Throws UnsupportedTailCombination for a
/// height witness tail.
PowerSeries partial_sum_transform(const PowerSeries& s, const Int& s0);

/// True iff the series lies in Z[x].
bool is_polynomial(const PowerSeries& s);

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) { return add(a, b); }
inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return subtract(a, b); }
inline PowerSeries operator-(const PowerSeries& a) { return negate(a); }
inline PowerSeries operator*(const Int& n, const PowerSeries& s) { return scalar_mul(n, s); }

namespace poly {
// Helpers over Q[i] in the monomial basis.
Rat evaluate(const std::vector<Rat>& q, const Rat& i);
void trim(std::vector<Rat>& q);
/// q(i - 1).
std::vector<Rat> shift_back(const std::vector<Rat>& q);
/// Q(i) = sum_{j=0}^{i} q(j).
std::vector<Rat> antidifference(const std::vector<Rat>& q);
/// The polynomial of degree < values.size() taking values[k] at k.
std::vector<Rat> interpolate(const std::vector<Rat>& values);
}  // namespace poly

}  // namespace endcohom
