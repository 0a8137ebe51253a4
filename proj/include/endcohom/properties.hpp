#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "endcohom/heights.hpp"
#include "endcohom/quotients.hpp"

namespace endcohom {

/// Seeded generators for the property checks run by `verify`.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi);
  /// Random prefix and a tail of polynomial and geometric terms.
  PowerSeries series(bool allow_tail = true);
  /// At most `max_exceptions` exceptions at primes <= max_prime.
  HeightSeq height(unsigned max_exceptions = 6, unsigned max_prime = 97);
  GElem g_elem();
  KQElem kq_elem();

 private:
  std::mt19937_64 rng_;
};

struct PropertyOutcome {
  std::string name;
  unsigned passed = 0;
  unsigned failed = 0;
  std::string first_failure;
};

/// Runs every algebraic roundtrip and symmetry check on `trials` samples each.
std::vector<PropertyOutcome> run_properties(std::uint64_t seed, unsigned trials = 100);

}  // namespace endcohom
