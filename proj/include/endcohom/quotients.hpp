#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "endcohom/series.hpp"

namespace endcohom {

/// An element of Z[[x]]/Z[x].
///
/// The class is determined by the tail formula alone. The stored
/// representative uses the formula at every index where it is integral and 0
/// at the finitely many indices where it is not, so for integral formulas the
/// representative has an empty prefix.
class PQElem {
 public:
  PQElem() = default;
  explicit PQElem(const PowerSeries& any_rep);

  const PowerSeries& representative() const { return rep_; }
  const TailSpec& tail() const { return rep_.tail(); }
  bool is_zero() const { return rep_.is_zero(); }

  friend bool operator==(const PQElem&, const PQElem&) = default;
  friend PQElem operator+(const PQElem& a, const PQElem& b);
  friend PQElem operator-(const PQElem& a, const PQElem& b);
  friend PQElem operator-(const PQElem& a);
  friend PQElem operator*(const Int& n, const PQElem& a);

 private:
  PowerSeries rep_;
};

/// An element of (Z + Z[[x]] + Z)/K with K = {(sum b_i, b, -sum b_i) : b in Z[x]}.
///
/// Canonical form: gamma is the PQElem representative of its own class; the
/// polynomial difference b is absorbed as (r - sum b, gamma - b, s + sum b).
class KQElem {
 public:
  KQElem() = default;
  KQElem(Int r, const PowerSeries& gamma, Int s);

  const Int& r() const { return r_; }
  const PowerSeries& gamma() const { return gamma_; }
  const Int& s() const { return s_; }

  friend bool operator==(const KQElem&, const KQElem&) = default;
  friend KQElem operator+(const KQElem& a, const KQElem& b);
  friend KQElem operator-(const KQElem& a, const KQElem& b);
  friend KQElem operator-(const KQElem& a);
  friend KQElem operator*(const Int& n, const KQElem& a);

 private:
  Int r_;
  PowerSeries gamma_;
  Int s_;
};

/// An element of G = Z + Z[[x]]/Z[x].
struct GElem {
  Int n;
  PQElem q;

  friend bool operator==(const GElem&, const GElem&) = default;
  friend GElem operator+(const GElem& a, const GElem& b) { return {a.n + b.n, a.q + b.q}; }
  friend GElem operator-(const GElem& a, const GElem& b) { return {a.n - b.n, a.q - b.q}; }
  friend GElem operator-(const GElem& a) { return {-a.n, -a.q}; }
  friend GElem operator*(const Int& k, const GElem& a) { return {k * a.n, k * a.q}; }
};

/// The module isomorphism G -> (Z + Z[[x]] + Z)/K,
/// (r, [sum c_i x^i]) -> [(r - c_0, sum_{i>=1} (c_i - c_{i-1}) x^i, c_0)].
KQElem f(const GElem& g);

/// Inverse of f: [(r, sum a_i x^i, s)] -> (r + s, [sum (s + sum_{j<=i} a_j) x^i]).
GElem f_inv(const KQElem& k);

/// The involution [(r, gamma, s)] -> [(s, -gamma, r)].
KQElem rho(const KQElem& k);

/// f^{-1} o rho o f; swaps (1,[0]) and (1,[1/(1-x)]).
GElem psi(const GElem& g);

/// The generator of the dual of (Z + Z[[x]] + Z)/K: [(r, gamma, s)] -> r + s.
Int kq_dual_generator(const KQElem& k);

/// An element of ((Z + Z[[x]]/Z[x]) + Z)/I with I generated by ((1,[alpha]), -1),
/// held only in its eta-normal form.
class IElem {
 public:
  /// The class of ((i, [beta]), j).
  IElem(const Int& i, const PQElem& beta, const Int& j, const PQElem& alpha);

  const GElem& normal_form() const { return normal_; }
  const PQElem& alpha() const { return alpha_; }

  friend bool operator==(const IElem&, const IElem&) = default;

 private:
  GElem normal_;
  PQElem alpha_;
};

/// ((i,[beta]), j) -> (i + j, [beta] + j[alpha]).
GElem eta(const IElem& a);
GElem eta(const Int& i, const PQElem& beta, const Int& j, const PQElem& alpha);

/// Duals of the infinitely generated modules that occur, as fixed facts.
enum class DualModule { PowerSeriesModPoly, WedgeTop, LadderTop, PowerSeries };

struct DualRule {
  DualModule module;
  std::string_view module_name;
  /// nullopt for a free module of countably infinite rank.
  std::optional<unsigned> dual_rank;
  std::string_view dual_name;
  std::string_view source;
};

const std::vector<DualRule>& dual_rule_table();
const DualRule& dual_rule(DualModule m);

}  // namespace endcohom
