#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace endcohom {

using Int = mpz_class;
using Rat = mpq_class;

Int ipow(const Int& base, unsigned long exponent);

/// p-adic valuation of a nonzero integer.
unsigned long valuation(const Int& n, const Int& p);

/// p-adic valuation of a nonzero rational (may be negative).
long valuation(const Rat& q, const Int& p);

bool is_prime(const Int& n);

/// Prime factorization of |n| for n != 0 (empty for n = +-1).
std::map<Int, unsigned long> factorize(const Int& n);

/// Distinct prime divisors of |n|; empty for n = 0 or +-1.
std::vector<Int> prime_divisors(const Int& n);

/// The n-th prime, 1-based (nth_prime(1) == 2).
std::uint64_t nth_prime(std::size_t n);

/// 1-based index of the prime p among all primes. Throws InvalidParameter
/// when p is not prime or lies beyond the sieve limit.
std::size_t prime_index(const Int& p);

/// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

/// First `count` primes in increasing order.
std::vector<std::uint64_t> first_primes(std::size_t count);

bool is_integral(const Rat& q);

Int parse_int(const std::string& text);

}  // namespace endcohom
