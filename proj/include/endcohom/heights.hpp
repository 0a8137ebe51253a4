#pragma once

#include <vector>

#include "endcohom/height_seq.hpp"
#include "endcohom/quotients.hpp"
#include "endcohom/series.hpp"

namespace endcohom {

/// Result of a bounded valuation query.
struct Valuation {
  enum class Kind { Finite, Capped, Infinite };
  Kind kind;
  unsigned long k = 0;  // exact value for Finite, the cap for Capped

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

inline constexpr unsigned long kDefaultKMax = 64;

HeightSeq height_of_integer(const Int& n);

/// The largest k such that the tail of s is eventually divisible by p^k.
/// Reported as Capped when that k exceeds k_max.
Valuation tail_valuation(const PowerSeries& s, const Int& p, unsigned long k_max = kDefaultKMax);

/// Exact eventual p-valuation of a tail formula. Throws ValuationUndecidable
/// when the polynomial/geometric part and a height witness tie.
HeightValue eventual_valuation(const TailSpec& tail, const Int& p);

/// Height of [e] in Z[[x]]/Z[x]. `primes` are evaluated in addition to the
/// primes the tail itself singles out; every value above k_max raises
/// ValuationUndecidable.
HeightSeq height_of_quotient_element(const PQElem& e, const std::vector<Int>& primes = {},
                                     unsigned long k_max = kDefaultKMax);

/// An element [sum_{i>=1} a_i x^i] whose height is h, with
/// a_i = prod_{n<=i} p_n^{min(h_n, i)}.
PQElem realize_height(const HeightSeq& h);

/// Pointwise minimum; the height of an element of a direct sum.
HeightSeq height_min(const std::vector<HeightSeq>& hs);

}  // namespace endcohom
