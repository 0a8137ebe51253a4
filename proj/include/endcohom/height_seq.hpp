#pragma once

#include <compare>
#include <map>
#include <string>

#include "endcohom/integer.hpp"

namespace endcohom {

/// One entry of a height sequence: a nonnegative integer or infinity.
class HeightValue {
 public:
  static HeightValue finite(unsigned long k) { return HeightValue(false, k); }
  static HeightValue infinity() { return HeightValue(true, 0); }

  bool is_infinite() const { return infinite_; }
  /// Only meaningful when finite.
  unsigned long value() const { return value_; }

  friend bool operator==(const HeightValue&, const HeightValue&) = default;
  friend std::strong_ordering operator<=>(const HeightValue& a, const HeightValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  HeightValue(bool infinite, unsigned long value) : infinite_(infinite), value_(infinite ? 0 : value) {}
  bool infinite_;
  unsigned long value_;
};

/// A prime-indexed sequence in {0,1,...,inf} that agrees with a default
/// value (zero or infinity) at all but finitely many primes.
///
/// Always canonical: no exception equals the default, and every exception key
/// is a verified prime.
class HeightSeq {
 public:
  enum class Default { Zero, Infinity };

  /// The all-zero sequence (height of a unit).
  HeightSeq() = default;

  /// Throws InvalidParameter if a key is not prime.
  HeightSeq(std::map<Int, HeightValue> exceptions, Default fallback);

  static HeightSeq zero() { return {}; }
  static HeightSeq infinity() { return HeightSeq({}, Default::Infinity); }

  HeightValue at(const Int& p) const;
  const std::map<Int, HeightValue>& exceptions() const { return exceptions_; }
  Default fallback() const { return fallback_; }
  HeightValue fallback_value() const {
    return fallback_ == Default::Zero ? HeightValue::finite(0) : HeightValue::infinity();
  }

  friend bool operator==(const HeightSeq&, const HeightSeq&) = default;

  /// Pointwise order: a <= b iff a_p <= b_p at every prime.
  bool precedes(const HeightSeq& other) const;

  /// Human-readable prefix such as "(3,0,2,1,0,...)".
  std::string to_string() const;

 private:
  std::map<Int, HeightValue> exceptions_;
  Default fallback_ = Default::Zero;
};

}  // namespace endcohom
