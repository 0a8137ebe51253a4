#include "endcohom/series.hpp"

#include <algorithm>

#include "endcohom/errors.hpp"

namespace endcohom {

namespace poly {

Rat evaluate(const std::vector<Rat>& q, const Rat& i) {
  Rat out = 0;
  for (auto it = q.rbegin(); it != q.rend(); ++it) out = out * i + *it;
  return out;
}

void trim(std::vector<Rat>& q) {
  while (!q.empty() && q.back() == 0) q.pop_back();
}

std::vector<Rat> shift_back(const std::vector<Rat>& q) {
  // (i - 1)^k = sum_j C(k, j) i^j (-1)^{k-j}
  std::vector<Rat> out(q.size(), Rat(0));
  for (std::size_t k = 0; k < q.size(); ++k) {
    Int binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
      if (j > 0) binom = binom * Int(static_cast<unsigned long>(k - j + 1)) / Int(static_cast<unsigned long>(j));
      const bool negative = (k - j) % 2 == 1;
      Rat term = q[k] * Rat(binom);
      out[j] += negative ? Rat(-term) : term;
    }
  }
  trim(out);
  return out;
}

std::vector<Rat> interpolate(const std::vector<Rat>& values) {
  // Newton forward differences at 0, 1, 2, ... then expand the binomials.
  std::vector<Rat> diffs = values;
  std::vector<Rat> newton;
  for (std::size_t level = 0; level < values.size(); ++level) {
    newton.push_back(diffs[0]);
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j) diffs[j] = diffs[j + 1] - diffs[j];
    diffs.pop_back();
  }
  std::vector<Rat> out(values.size(), Rat(0));
  std::vector<Rat> falling{Rat(1)};  // i(i-1)...(i-k+1) / k!
  for (std::size_t k = 0; k < newton.size(); ++k) {
    if (k > 0) {
      std::vector<Rat> next(falling.size() + 1, Rat(0));
      const Rat shift(static_cast<long>(k - 1));
      for (std::size_t j = 0; j < falling.size(); ++j) {
        next[j + 1] += falling[j];
        next[j] -= falling[j] * shift;
      }
      for (auto& c : next) c /= Rat(static_cast<long>(k));
      falling = std::move(next);
    }
    for (std::size_t j = 0; j < falling.size(); ++j) out[j] += newton[k] * falling[j];
  }
  trim(out);
  return out;
}

std::vector<Rat> antidifference(const std::vector<Rat>& q) {
  std::vector<Rat> values;
  Rat running = 0;
  for (std::size_t i = 0; i <= q.size(); ++i) {
    running += evaluate(q, Rat(static_cast<long>(i)));
    values.push_back(running);
  }
  return interpolate(values);
}

}  // namespace poly

namespace {

Rat rat_pow(const Int& r, unsigned long i) { return Rat(ipow(r, i)); }

}  // namespace

Int height_witness_value(const HeightSeq& h, unsigned long i) {
  Int out = 1;
  if (i == 0) return out;
  for (std::uint64_t p : first_primes(i)) {
    const Int pz = static_cast<unsigned long>(p);
    const HeightValue hv = h.at(pz);
    const unsigned long e = hv.is_infinite() ? i : std::min(hv.value(), i);
    out *= ipow(pz, e);
  }
  return out;
}

TailSpec TailSpec::constant(const Rat& c) { return poly({c}); }

TailSpec TailSpec::poly(std::vector<Rat> coeffs) {
  TailSpec t;
  t.poly_ = std::move(coeffs);
  t.normalize();
  return t;
}

TailSpec TailSpec::geometric(const Rat& c, const Int& r) {
  TailSpec t;
  t.geometric_[r] = c;
  t.normalize();
  return t;
}

TailSpec TailSpec::height(HeightSeq h, const Int& multiplier) {
  TailSpec t;
  t.height_ = HeightTerm{multiplier, std::move(h)};
  t.normalize();
  return t;
}

void TailSpec::normalize() {
  for (auto it = geometric_.begin(); it != geometric_.end();) {
    if (it->first == 1) {
      if (poly_.empty()) poly_.push_back(Rat(0));
      poly_[0] += it->second;
      it = geometric_.erase(it);
    } else if (it->second == 0) {
      it = geometric_.erase(it);
    } else {
      ++it;
    }
  }
  poly::trim(poly_);
  if (height_ && height_->multiplier == 0) height_.reset();
}

Rat TailSpec::evaluate_periodic_part(unsigned long i) const {
  Rat out = poly::evaluate(poly_, Rat(static_cast<long>(i)));
  for (const auto& [r, c] : geometric_) out += c * rat_pow(r, i);
  return out;
}

Rat TailSpec::evaluate(unsigned long i) const {
  Rat out = evaluate_periodic_part(i);
  if (height_) out += Rat(height_->multiplier * height_witness_value(height_->heights, i));
  return out;
}

TailSpec TailSpec::operator+(const TailSpec& other) const {
  TailSpec out = *this;
  if (out.poly_.size() < other.poly_.size()) out.poly_.resize(other.poly_.size(), Rat(0));
  for (std::size_t k = 0; k < other.poly_.size(); ++k) out.poly_[k] += other.poly_[k];
  for (const auto& [r, c] : other.geometric_) out.geometric_[r] += c;
  if (other.height_) {
    if (!out.height_) {
      out.height_ = other.height_;
    } else if (out.height_->heights == other.height_->heights) {
      out.height_->multiplier += other.height_->multiplier;
    } else {
      throw UnsupportedTailCombination("sum of two different height witnesses");
    }
  }
  out.normalize();
  return out;
}

TailSpec TailSpec::operator-() const { return scaled(-1); }

TailSpec TailSpec::scaled(const Int& n) const {
  TailSpec out = *this;
  const Rat factor(n);
  for (auto& c : out.poly_) c *= factor;
  for (auto& [r, c] : out.geometric_) c *= factor;
  if (out.height_) out.height_->multiplier *= n;
  out.normalize();
  return out;
}

TailSpec TailSpec::without_height() const {
  TailSpec out = *this;
  out.height_.reset();
  return out;
}

PowerSeries::PowerSeries(std::vector<Int> prefix, TailSpec tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  canonicalize();
}

void PowerSeries::canonicalize() {
  // A zero-default witness equals C * R^i from index i0 on.
  if (tail_.has_height() && tail_.height_term()->heights.fallback() == HeightSeq::Default::Zero) {
    const HeightTerm term = *tail_.height_term();
    Int c = 1, r = 1;
    unsigned long start = 0;
    for (const auto& [p, hv] : term.heights.exceptions()) {
      start = std::max<unsigned long>(start, prime_index(p));
      if (hv.is_infinite()) {
        r *= p;
      } else {
        c *= ipow(p, hv.value());
        start = std::max(start, hv.value());
      }
    }
    for (unsigned long i = prefix_.size(); i < start; ++i) {
      const Rat v = tail_.evaluate(i);
      if (!is_integral(v)) throw InvalidParameter("tail is not integral at index " + std::to_string(i));
      prefix_.push_back(v.get_num());
    }
    tail_ = tail_.without_height() + TailSpec::geometric(Rat(term.multiplier * c), r);
  }

  // c * 0^i only touches index 0.
  if (auto it = tail_.geometric_terms().find(Int(0)); it != tail_.geometric_terms().end()) {
    if (prefix_.empty()) {
      const Rat v = tail_.evaluate(0);
      if (!is_integral(v)) throw InvalidParameter("tail is not integral at index 0");
      prefix_.push_back(v.get_num());
    }
    tail_ = tail_ - TailSpec::geometric(it->second, Int(0));
  }

  // The formula must produce integers wherever it is used.
  for (unsigned long i = prefix_.size(); i < prefix_.size() + 8; ++i) {
    if (!is_integral(tail_.evaluate_periodic_part(i))) {
      throw InvalidParameter("tail is not integral at index " + std::to_string(i));
    }
  }

  while (!prefix_.empty() && Rat(prefix_.back()) == tail_.evaluate(prefix_.size() - 1)) prefix_.pop_back();
}

Int PowerSeries::coefficient(unsigned long i) const {
  if (i < prefix_.size()) return prefix_[i];
  const Rat v = tail_.evaluate(i);
  if (!is_integral(v)) throw InvalidParameter("tail is not integral at index " + std::to_string(i));
  return v.get_num();
}

std::vector<Int> PowerSeries::coefficients(unsigned long count) const {
  std::vector<Int> out;
  out.reserve(count);
  for (unsigned long i = 0; i < count; ++i) out.push_back(coefficient(i));
  return out;
}

PowerSeries add(const PowerSeries& s, const PowerSeries& t) {
  TailSpec tail = s.tail() + t.tail();
  const std::size_t n = std::max(s.prefix().size(), t.prefix().size());
  std::vector<Int> prefix;
  prefix.reserve(n);
  for (std::size_t i = 0; i < n; ++i) prefix.push_back(s.coefficient(i) + t.coefficient(i));
  return {std::move(prefix), std::move(tail)};
}

PowerSeries negate(const PowerSeries& s) { return scalar_mul(-1, s); }

PowerSeries subtract(const PowerSeries& s, const PowerSeries& t) { return add(s, negate(t)); }

PowerSeries scalar_mul(const Int& n, const PowerSeries& s) {
  if (n == 0) return {};
  std::vector<Int> prefix = s.prefix();
  for (auto& c : prefix) c *= n;
  return {std::move(prefix), s.tail().scaled(n)};
}

PowerSeries difference_transform(const PowerSeries& s) {
  if (s.tail().has_height()) {
    throw UnsupportedTailCombination("difference transform of a height witness tail");
  }
  const std::size_t n = s.prefix().size();
  std::vector<Int> prefix{Int(0)};
  for (std::size_t i = 1; i <= n; ++i) prefix.push_back(s.coefficient(i) - s.coefficient(i - 1));

  const auto& q = s.tail().poly_coeffs();
  std::vector<Rat> delta = q;
  const std::vector<Rat> shifted = poly::shift_back(q);
  for (std::size_t k = 0; k < shifted.size(); ++k) delta[k] -= shifted[k];
  TailSpec tail = TailSpec::poly(std::move(delta));
  for (const auto& [r, c] : s.tail().geometric_terms()) {
    // c r^i - c r^{i-1} = c (r - 1) / r * r^i
    tail = tail + TailSpec::geometric(c * Rat(r - 1) / Rat(r), r);
  }
  return {std::move(prefix), std::move(tail)};
}

PowerSeries partial_sum_transform(const PowerSeries& s, const Int& s0) {
  if (s.tail().has_height()) {
    throw UnsupportedTailCombination("partial-sum transform of a height witness tail");
  }
  const std::size_t n = s.prefix().size();
  std::vector<Int> prefix;
  Int running = s0;
  for (std::size_t i = 0; i < n; ++i) {
    running += s.coefficient(i);
    prefix.push_back(running);
  }

  // F(i) = sum_{j=0}^{i} T(j) in closed form.
  TailSpec antidiff = TailSpec::poly(poly::antidifference(s.tail().poly_coeffs()));
  for (const auto& [r, c] : s.tail().geometric_terms()) {
    const Rat denom = Rat(r - 1);
    antidiff = antidiff + TailSpec::geometric(c * Rat(r) / denom, r) + TailSpec::constant(-c / denom);
  }
  // For i >= n: S_i = S_{n-1} + F(i) - F(n-1).
  const Rat offset = n == 0 ? Rat(s0) : Rat(running) - antidiff.evaluate(n - 1);
  return {std::move(prefix), antidiff + TailSpec::constant(offset)};
}

bool is_polynomial(const PowerSeries& s) { return s.tail().is_zero(); }

}  // namespace endcohom
