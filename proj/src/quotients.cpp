#include "endcohom/quotients.hpp"

#include <algorithm>

#include "endcohom/errors.hpp"

namespace endcohom {

PQElem::PQElem(const PowerSeries& any_rep) {
  const PowerSeries canonical = any_rep;
  std::vector<Int> prefix;
  for (unsigned long i = 0; i < canonical.prefix().size(); ++i) {
    const Rat v = canonical.tail().evaluate(i);
    prefix.push_back(is_integral(v) ? v.get_num() : Int(0));
  }
  rep_ = PowerSeries(std::move(prefix), canonical.tail());
}

PQElem operator+(const PQElem& a, const PQElem& b) { return PQElem(a.rep_ + b.rep_); }
PQElem operator-(const PQElem& a, const PQElem& b) { return PQElem(a.rep_ - b.rep_); }
PQElem operator-(const PQElem& a) { return PQElem(-a.rep_); }
PQElem operator*(const Int& n, const PQElem& a) { return PQElem(n * a.rep_); }

KQElem::KQElem(Int r, const PowerSeries& gamma, Int s) : r_(std::move(r)), s_(std::move(s)) {
  gamma_ = PQElem(gamma).representative();
  // gamma - gamma_ is a polynomial b; subtract (sum b, b, -sum b).
  const std::size_t n = std::max(gamma.prefix().size(), gamma_.prefix().size());
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) total += gamma.coefficient(i) - gamma_.coefficient(i);
  r_ -= total;
  s_ += total;
}

KQElem operator+(const KQElem& a, const KQElem& b) { return {a.r_ + b.r_, a.gamma_ + b.gamma_, a.s_ + b.s_}; }
KQElem operator-(const KQElem& a, const KQElem& b) { return {a.r_ - b.r_, a.gamma_ - b.gamma_, a.s_ - b.s_}; }
KQElem operator-(const KQElem& a) { return {-a.r_, -a.gamma_, -a.s_}; }
KQElem operator*(const Int& n, const KQElem& a) { return {n * a.r_, n * a.gamma_, n * a.s_}; }

KQElem f(const GElem& g) {
  const PowerSeries& c = g.q.representative();
  const Int c0 = c.coefficient(0);
  return {g.n - c0, difference_transform(c), c0};
}

GElem f_inv(const KQElem& k) {
  return {k.r() + k.s(), PQElem(partial_sum_transform(k.gamma(), k.s()))};
}

KQElem rho(const KQElem& k) { return {k.s(), -k.gamma(), k.r()}; }

GElem psi(const GElem& g) { return f_inv(rho(f(g))); }

Int kq_dual_generator(const KQElem& k) { return k.r() + k.s(); }

GElem eta(const Int& i, const PQElem& beta, const Int& j, const PQElem& alpha) {
  return {i + j, beta + j * alpha};
}

IElem::IElem(const Int& i, const PQElem& beta, const Int& j, const PQElem& alpha)
    : normal_(eta(i, beta, j, alpha)), alpha_(alpha) {}

GElem eta(const IElem& a) { return a.normal_form(); }

const std::vector<DualRule>& dual_rule_table() {
  static const std::vector<DualRule> table = {
      {DualModule::PowerSeriesModPoly, "Z[[x]]/Z[x]", 0u, "0",
       "every homomorphism Z[[x]] -> Z vanishing on Z[x] is zero"},
      {DualModule::WedgeTop, "Z + Z[[x]]/Z[x] + Z", 2u, "Z^2", "dual of a direct sum; the middle summand has zero dual"},
      {DualModule::LadderTop, "(Z + Z[[x]] + Z)/K", 1u, "Z", "every functional is [(r,g,s)] -> j(r+s)"},
      {DualModule::PowerSeries, "Z[[x]]", std::nullopt, "Z[x]",
       "a functional on Z[[x]] kills x^k for cofinitely many k"},
  };
  return table;
}

const DualRule& dual_rule(DualModule m) {
  for (const auto& rule : dual_rule_table()) {
    if (rule.module == m) return rule;
  }
  throw InvalidParameter("no dual rule");
}

}  // namespace endcohom
