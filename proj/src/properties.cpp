#include "endcohom/properties.hpp"

#include <functional>

#include "endcohom/classify.hpp"
#include "endcohom/errors.hpp"
#include "endcohom/rays.hpp"

namespace endcohom {

long Sampler::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

PowerSeries Sampler::series(bool allow_tail) {
  std::vector<Int> prefix;
  const long len = uniform(0, 5);
  for (long i = 0; i < len; ++i) prefix.push_back(uniform(-9, 9));
  TailSpec tail;
  if (allow_tail) {
    const long kind = uniform(0, 3);
    if (kind == 1 || kind == 3) {
      std::vector<Rat> q;
      const long deg = uniform(0, 2);
      for (long k = 0; k <= deg; ++k) q.push_back(Rat(uniform(-5, 5)));
      tail = tail + TailSpec::poly(std::move(q));
    }
    if (kind >= 2) {
      static const long ratios[] = {-3, -2, -1, 2, 3, 5};
      tail = tail + TailSpec::geometric(Rat(uniform(-4, 4)), ratios[uniform(0, 5)]);
    }
  }
  return {std::move(prefix), std::move(tail)};
}

HeightSeq Sampler::height(unsigned max_exceptions, unsigned max_prime) {
  std::vector<Int> primes;
  for (unsigned p = 2; p <= max_prime; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  std::map<Int, HeightValue> ex;
  const long count = uniform(0, max_exceptions);
  for (long i = 0; i < count; ++i) {
    const Int& p = primes[uniform(0, static_cast<long>(primes.size()) - 1)];
    ex.insert_or_assign(p, uniform(0, 6) == 0 ? HeightValue::infinity() : HeightValue::finite(uniform(0, 5)));
  }
  return {std::move(ex), uniform(0, 1) ? HeightSeq::Default::Zero : HeightSeq::Default::Infinity};
}

GElem Sampler::g_elem() { return {uniform(-9, 9), PQElem(series())}; }

KQElem Sampler::kq_elem() { return {uniform(-9, 9), series(), uniform(-9, 9)}; }

namespace {

void check(PropertyOutcome& out, unsigned trials, const std::function<std::string(unsigned)>& trial) {
  for (unsigned t = 0; t < trials; ++t) {
    std::string failure;
    try {
      failure = trial(t);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (failure.empty()) {
      ++out.passed;
    } else {
      if (!out.failed) out.first_failure = "trial " + std::to_string(t) + ": " + failure;
      ++out.failed;
    }
  }
}

}  // namespace

std::vector<PropertyOutcome> run_properties(std::uint64_t seed, unsigned trials) {
  Sampler s(seed);
  std::vector<PropertyOutcome> out;
  auto add = [&](std::string name, unsigned n, const std::function<std::string(unsigned)>& trial) {
    PropertyOutcome o;
    o.name = std::move(name);
    check(o, n, trial);
    out.push_back(std::move(o));
  };

  add("series: (a + b) - b = a", trials, [&](unsigned) {
    const PowerSeries a = s.series(), b = s.series();
    return (a + b) - b == a ? "" : "difference does not cancel";
  });
  add("series: coefficients of a + b", trials, [&](unsigned) {
    const PowerSeries a = s.series(), b = s.series();
    const PowerSeries c = a + b;
    for (unsigned long i = 0; i < 40; ++i) {
      if (c.coefficient(i) != a.coefficient(i) + b.coefficient(i)) return "mismatch at " + std::to_string(i);
    }
    return std::string();
  });
  add("height: realize then measure", trials, [&](unsigned) {
    const HeightSeq h = s.height();
    return height_of_quotient_element(realize_height(h)) == h ? "" : "roundtrip changed " + h.to_string();
  });
  add("height: integer factorization", trials, [&](unsigned) {
    const Int n = s.uniform(1, 1000000);
    Int back = 1;
    const HeightSeq h = height_of_integer(n);
    for (const auto& [p, v] : h.exceptions()) back *= ipow(p, v.value());
    return back == n ? "" : "product of prime powers differs from " + n.get_str();
  });
  add("quotients: f o f^-1 = id", trials, [&](unsigned) {
    const KQElem k = s.kq_elem();
    return f(f_inv(k)) == k ? "" : "not the identity";
  });
  add("quotients: f^-1 o f = id", trials, [&](unsigned) {
    const GElem g = s.g_elem();
    return f_inv(f(g)) == g ? "" : "not the identity";
  });
  add("quotients: psi o psi = id", trials, [&](unsigned) {
    const GElem g = s.g_elem();
    return psi(psi(g)) == g ? "" : "not an involution";
  });
  add("quotients: r + s kills K", trials, [&](unsigned) {
    const PowerSeries b = s.series(false);
    Int sum = 0;
    for (const auto& c : b.prefix()) sum += c;
    const KQElem k(sum, b, -sum);
    return k == KQElem() && kq_dual_generator(k) == 0 ? "" : "K generator is nonzero";
  });
  add("rays: swindle then epsilons", trials, [&](unsigned) {
    const PowerSeries a = s.series();
    return path_to_epsilons(swindle(a)) == a ? "" : "roundtrip changed the sequence";
  });
  add("classify: symmetric on genera <= 2", 1, [&](unsigned) {
    std::vector<SpaceSpec> specs;
    for (unsigned g = 0; g <= 2; ++g) {
      specs.push_back({Family::Stringer, {g}});
      specs.push_back({Family::SurgeredStringer, {g}});
      for (unsigned h = 0; h <= 2; ++h) {
        specs.push_back({Family::Ladder, {g, h}});
        specs.push_back({Family::Wedge, {g, h}});
      }
    }
    for (const auto& a : specs) {
      for (const auto& b : specs) {
        if (classify_pair(a, b).isomorphic != classify_pair(b, a).isomorphic) {
          return a.to_string() + " vs " + b.to_string();
        }
      }
    }
    return std::string();
  });
  return out;
}

}  // namespace endcohom
