#include "endcohom/integer.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "endcohom/errors.hpp"

namespace endcohom {

namespace {

// Primes are kept in a lazily grown table. Indices beyond this bound are
// refused rather than sieved.
constexpr std::uint64_t kSieveLimit = 200'000'000;

using PrimeList = std::shared_ptr<const std::vector<std::uint64_t>>;

// Readers get an immutable snapshot, so growth never invalidates a list in use.
class PrimeTable {
 public:
  PrimeList upto(std::uint64_t bound) {
    std::lock_guard lock(mutex_);
    if (bound > sieved_) grow(std::max<std::uint64_t>(bound, 2 * sieved_));
    return primes_;
  }

  PrimeList count(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (primes_->size() < n) grow(std::max<std::uint64_t>(1024, 2 * sieved_));
    return primes_;
  }

 private:
  void grow(std::uint64_t bound) {
    if (bound > kSieveLimit) {
      throw InvalidParameter("prime table limit exceeded (" + std::to_string(bound) + ")");
    }
    std::vector<bool> composite(bound + 1, false);
    auto primes = std::make_shared<std::vector<std::uint64_t>>();
    for (std::uint64_t i = 2; i <= bound; ++i) {
      if (composite[i]) continue;
      primes->push_back(i);
      for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    primes_ = std::move(primes);
    sieved_ = bound;
  }

  std::mutex mutex_;
  PrimeList primes_ = std::make_shared<std::vector<std::uint64_t>>();
  std::uint64_t sieved_ = 0;
};

PrimeTable& table() {
  static PrimeTable t;
  return t;
}

Int pollard_brent(const Int& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const Int& v) {
      Int out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Int d = abs(x - y);
          q = (q * d) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Int n, std::map<Int, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Int ipow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw InvalidParameter("valuation of zero");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

long valuation(const Rat& q, const Int& p) {
  if (q == 0) throw InvalidParameter("valuation of zero");
  return static_cast<long>(valuation(q.get_num(), p)) -
         static_cast<long>(valuation(q.get_den(), p));
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::map<Int, unsigned long> factorize(const Int& n) {
  if (n == 0) throw InvalidParameter("factorization of zero");
  std::map<Int, unsigned long> out;
  Int m = abs(n);
  const auto small = table().upto(100'000);
  for (std::uint64_t p : *small) {
    if (p > 100'000) break;
    Int pz = static_cast<unsigned long>(p);
    if (m % pz != 0) continue;
    Int rest;
    out[pz] = mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
    m = rest;
    if (m == 1) break;
  }
  factor_into(m, out);
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  if (n == 0) return out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) throw InvalidParameter("prime indices are 1-based");
  return (*table().count(n))[n - 1];
}

std::size_t prime_index(const Int& p) {
  if (!is_prime(p)) throw InvalidParameter(p.get_str() + " is not prime");
  if (p > kSieveLimit) throw InvalidParameter("prime " + p.get_str() + " is beyond the indexable range");
  const auto value = p.get_ui();
  const auto primes = table().upto(value);
  auto it = std::lower_bound(primes->begin(), primes->end(), value);
  return static_cast<std::size_t>(it - primes->begin()) + 1;
}

Int next_prime(const Int& n) {
  Int out;
  mpz_nextprime(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  const auto primes = table().count(count);
  return {primes->begin(), primes->begin() + static_cast<std::ptrdiff_t>(count)};
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

Int parse_int(const std::string& text) {
  Int out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw InvalidParameter("not an integer: '" + text + "'");
  }
  return out;
}

}  // namespace endcohom
