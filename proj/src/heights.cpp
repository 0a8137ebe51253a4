#include "endcohom/heights.hpp"

#include <algorithm>
#include <set>

#include "endcohom/errors.hpp"

namespace endcohom {

HeightSeq::HeightSeq(std::map<Int, HeightValue> exceptions, Default fallback) : fallback_(fallback) {
  const HeightValue dflt = fallback_value();
  for (auto& [p, v] : exceptions) {
    if (!is_prime(p)) throw InvalidParameter("height key " + p.get_str() + " is not prime");
    if (v != dflt) exceptions_.emplace(p, v);
  }
}

HeightValue HeightSeq::at(const Int& p) const {
  auto it = exceptions_.find(p);
  return it == exceptions_.end() ? fallback_value() : it->second;
}

bool HeightSeq::precedes(const HeightSeq& other) const {
  if (fallback_ == Default::Infinity && other.fallback_ == Default::Zero) return false;
  for (const auto& [p, v] : exceptions_) {
    if (v > other.at(p)) return false;
  }
  for (const auto& [p, v] : other.exceptions_) {
    if (at(p) > v) return false;
  }
  return true;
}

std::string HeightSeq::to_string() const {
  const std::string dflt = fallback_value().to_string();
  if (!exceptions_.empty() && exceptions_.rbegin()->first > 1000) {
    std::string out = "{";
    for (const auto& [p, v] : exceptions_) {
      if (out.size() > 1) out += ", ";
      out += p.get_str() + ":" + v.to_string();
    }
    return out + "; else " + dflt + "}";
  }
  std::size_t count = 3;
  if (!exceptions_.empty()) count = std::max(count, prime_index(exceptions_.rbegin()->first) + 1);
  std::string out = "(";
  for (std::uint64_t p : first_primes(count)) out += at(Int(static_cast<unsigned long>(p))).to_string() + ",";
  return out + "...)";
}

HeightSeq height_of_integer(const Int& n) {
  if (n == 0) return HeightSeq::infinity();
  std::map<Int, HeightValue> ex;
  for (const auto& [p, e] : factorize(n)) ex.emplace(p, HeightValue::finite(e));
  return {std::move(ex), HeightSeq::Default::Zero};
}

namespace {

Int lcm_of_denominators(const TailSpec& t, const Int* skip_divisible_by) {
  Int d = 1;
  for (const auto& c : t.poly_coeffs()) d = lcm(d, Int(c.get_den()));
  for (const auto& [r, c] : t.geometric_terms()) {
    if (skip_divisible_by && r % *skip_divisible_by == 0) continue;
    d = lcm(d, Int(c.get_den()));
  }
  return d;
}

// The polynomial and geometric part satisfies a monic integer recurrence of
// this order, so its first `order` values generate the ideal of all values.
struct PeriodicContent {
  Int gcd;  // 0 when there are no terms
  Int den;
};

PeriodicContent periodic_content(const TailSpec& t, const Int* p) {
  TailSpec kept = TailSpec::poly(t.poly_coeffs());
  std::size_t order = t.poly_coeffs().empty() ? 0 : t.poly_coeffs().size();
  for (const auto& [r, c] : t.geometric_terms()) {
    if (p && r % *p == 0) continue;
    kept = kept + TailSpec::geometric(c, r);
    ++order;
  }
  PeriodicContent out{Int(0), lcm_of_denominators(kept, nullptr)};
  for (std::size_t i = 0; i < order; ++i) {
    const Rat v = kept.evaluate_periodic_part(i) * Rat(out.den);
    out.gcd = gcd(out.gcd, v.get_num());
  }
  return out;
}

}  // namespace

HeightValue eventual_valuation(const TailSpec& tail, const Int& p) {
  if (!is_prime(p)) throw InvalidParameter(p.get_str() + " is not prime");
  std::optional<long> periodic;
  const PeriodicContent pc = periodic_content(tail, &p);
  if (pc.gcd != 0) {
    periodic = static_cast<long>(valuation(pc.gcd, p)) - static_cast<long>(valuation(pc.den, p));
    if (*periodic < 0) throw InvalidParameter("tail is not eventually integral at p = " + p.get_str());
  }
  std::optional<unsigned long> witness;
  if (const auto& h = tail.height_term()) {
    const HeightValue hp = h->heights.at(p);
    if (!hp.is_infinite()) witness = hp.value() + valuation(h->multiplier, p);
  }
  if (periodic && witness && static_cast<unsigned long>(*periodic) == *witness) {
    throw ValuationUndecidable("periodic part and height witness both have valuation " +
                               std::to_string(*witness) + " at p = " + p.get_str());
  }
  if (!periodic && !witness) return HeightValue::infinity();
  if (!periodic) return HeightValue::finite(*witness);
  if (!witness) return HeightValue::finite(static_cast<unsigned long>(*periodic));
  return HeightValue::finite(std::min(static_cast<unsigned long>(*periodic), *witness));
}

Valuation tail_valuation(const PowerSeries& s, const Int& p, unsigned long k_max) {
  const HeightValue v = eventual_valuation(s.tail(), p);
  if (v.is_infinite()) return {Valuation::Kind::Infinite, 0};
  if (v.value() > k_max) return {Valuation::Kind::Capped, k_max};
  return {Valuation::Kind::Finite, v.value()};
}

HeightSeq height_of_quotient_element(const PQElem& e, const std::vector<Int>& primes, unsigned long k_max) {
  const TailSpec& t = e.tail();
  if (t.is_zero()) return HeightSeq::infinity();

  // Outside these primes the periodic part is a unit multiple of its content
  // and the witness (default infinity) contributes nothing.
  std::set<Int> candidates(primes.begin(), primes.end());
  const PeriodicContent pc = periodic_content(t, nullptr);
  for (const Int& q : prime_divisors(pc.gcd)) candidates.insert(q);
  for (const Int& q : prime_divisors(pc.den)) candidates.insert(q);
  for (const auto& [r, c] : t.geometric_terms()) {
    for (const Int& q : prime_divisors(r)) candidates.insert(q);
  }
  const auto& h = t.height_term();
  if (h) {
    for (const auto& [q, v] : h->heights.exceptions()) candidates.insert(q);
    for (const Int& q : prime_divisors(h->multiplier)) candidates.insert(q);
  }

  HeightSeq::Default fallback = HeightSeq::Default::Infinity;
  if (pc.gcd != 0) {
    fallback = HeightSeq::Default::Zero;
  } else if (h && h->heights.fallback() == HeightSeq::Default::Zero) {
    fallback = HeightSeq::Default::Zero;
  }

  std::map<Int, HeightValue> ex;
  for (const Int& q : candidates) {
    if (!is_prime(q)) throw InvalidParameter(q.get_str() + " is not prime");
    const HeightValue v = eventual_valuation(t, q);
    if (!v.is_infinite() && v.value() > k_max) {
      throw ValuationUndecidable("valuation at p = " + q.get_str() + " exceeds k_max");
    }
    ex.emplace(q, v);
  }
  return {std::move(ex), fallback};
}

PQElem realize_height(const HeightSeq& h) { return PQElem(PowerSeries({Int(0)}, TailSpec::height(h))); }

HeightSeq height_min(const std::vector<HeightSeq>& hs) {
  if (hs.empty()) throw InvalidParameter("height_min of an empty list");
  bool any_zero = false;
  std::set<Int> keys;
  for (const auto& h : hs) {
    any_zero = any_zero || h.fallback() == HeightSeq::Default::Zero;
    for (const auto& [p, v] : h.exceptions()) keys.insert(p);
  }
  std::map<Int, HeightValue> ex;
  for (const Int& p : keys) {
    HeightValue m = HeightValue::infinity();
    for (const auto& h : hs) m = std::min(m, h.at(p));
    ex.emplace(p, m);
  }
  return {std::move(ex), any_zero ? HeightSeq::Default::Zero : HeightSeq::Default::Infinity};
}

}  // namespace endcohom
