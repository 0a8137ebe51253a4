#include "endcohom/endsum_invariant.hpp"

#include <set>

#include "endcohom/errors.hpp"
#include "endcohom/rays.hpp"

namespace endcohom {

DegreeProfile DegreeProfile::main_theorem() { return {"main-theorem", 3, {1, 1, 1}, {1, 2}}; }

DegreeProfile DegreeProfile::variation1(unsigned m) {
  if (m < 5) throw InvalidParameter("variation1 needs m >= 5");
  return {"variation1(m=" + std::to_string(m) + ")", m - 1, {2, m - 3}, {1, m - 2}};
}

namespace {

// Every product of basis elements of the given degrees, left to right, as raw
// top-degree coordinates.
std::vector<Coords> basis_products(const EndAlgebra& c, const std::vector<unsigned>& degrees) {
  std::vector<AlgElem> partial = c.free_basis(degrees.front());
  for (std::size_t i = 1; i + 1 < degrees.size(); ++i) {
    std::vector<AlgElem> next;
    for (const auto& a : partial) {
      for (const auto& b : c.free_basis(degrees[i])) next.push_back(cup(a, b));
    }
    partial = std::move(next);
  }
  std::vector<Coords> out;
  if (degrees.size() == 1) {
    for (const auto& a : partial) out.push_back(a.coords());
    return out;
  }
  for (const auto& a : partial) {
    for (const auto& b : c.free_basis(degrees.back())) out.push_back(cup_raw(a, b));
  }
  return out;
}

// Quotient of Z^a + PQ^b by rows that each eliminate one integer coordinate
// with a unit pivot.
class UnitElimination {
 public:
  UnitElimination(const std::vector<TrueVec>& rows, std::size_t nints, const char* what) {
    std::vector<std::size_t> order;
    for (std::size_t col = nints; col-- > 0;) order.push_back(col);
    echelon_ = echelonize(rows, order);
    if (!echelon_.integer_free.empty()) {
      throw ProcedureUnsupported(std::string(what) + " has a generator with no integer coordinate");
    }
    for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
      if (echelon_.rows[i].ints[echelon_.pivots[i]] != 1) {
        throw ProcedureUnsupported(std::string(what) + " needs a non-unit pivot");
      }
    }
    std::set<std::size_t> piv(echelon_.pivots.begin(), echelon_.pivots.end());
    for (std::size_t col = 0; col < nints; ++col) {
      if (!piv.count(col)) kept_.push_back(col);
    }
  }

  TrueVec apply(const TrueVec& x) const {
    const TrueVec r = echelon_.reduce(x);
    TrueVec out;
    for (std::size_t col : kept_) out.ints.push_back(r.ints[col]);
    out.pqs = r.pqs;
    return out;
  }

  std::size_t rank() const { return echelon_.rows.size(); }

 private:
  Echelon echelon_;
  std::vector<std::size_t> kept_;
};

bool is_main_shape(const EndAlgebra& c) {
  if (c.family() != Family::EndSum) return false;
  return c.summand_a()->family() == Family::SurgeredStringer && c.summand_b()->family() == Family::Stringer;
}

InvariantResult empty_result(InvariantTrace trace) { return {InvariantResult::Outcome::Empty, std::nullopt, std::move(trace)}; }

}  // namespace

InvariantResult invariant_h(const EndAlgebra& c, const DegreeProfile& profile) {
  InvariantTrace trace;
  trace.profile = profile.name;
  const unsigned n = profile.target;
  if (n != c.top_degree()) {
    throw InvalidParameter("profile target degree " + std::to_string(n) + " differs from the top degree " +
                           std::to_string(c.top_degree()));
  }
  for (const auto* degs : {&profile.u_degrees, &profile.v_degrees}) {
    unsigned total = 0;
    for (unsigned d : *degs) {
      if (d == 0) throw InvalidParameter("profile degrees must be positive");
      total += d;
    }
    if (degs->empty() || total != n) throw InvalidParameter("profile degrees must add up to the target degree");
  }
  if (!is_main_shape(c)) {
    trace.notes.push_back("U and V were evaluated on products of basis elements only");
  }

  // (1) J and the ideal check.
  const RadicalJ j = radical_j(c, 1);
  trace.j_shape = j.shape;
  trace.j_is_ideal = j.is_ideal;
  trace.ideal_products_checked = j.products_checked;
  if (!j.is_ideal) return empty_result(std::move(trace));

  // (2) D = C/J keeps the Free atoms of degree one; D_n is identified with
  // Z^a + PQ^b by eliminating the end-sum relations.
  const ModuleShape& top = c.module(n);
  const std::size_t nints = to_true(top, c.zero(n).coords()).ints.size();
  const UnitElimination rel(c.top_relations(), nints, "the end-sum ideal");
  auto reduced = [&](const Coords& raw) { return rel.apply(to_true(top, raw)); };
  trace.quotient_ints = nints - rel.rank();
  trace.quotient_pqs = to_true(top, c.zero(n).coords()).pqs.size();

  // (3) U.
  std::vector<TrueVec> u;
  for (const auto& raw : basis_products(c, profile.u_degrees)) u.push_back(reduced(raw));
  trace.u_products = u.size();
  const IntMatrix u_emb = embed_true(u);
  trace.u_rank = integer_rank(u_emb);

  // (4) V from the products that are not in U.
  const std::vector<Coords> v_raw_all = basis_products(c, profile.v_degrees);
  std::vector<TrueVec> together = u;
  for (const auto& raw : v_raw_all) together.push_back(reduced(raw));
  const IntMatrix all_emb = embed_true(together);
  IntMatrix u_rows(0, all_emb.cols());
  for (std::size_t i = 0; i < u.size(); ++i) u_rows.append_row(all_emb.row(i));
  std::vector<std::size_t> v_index;
  IntMatrix v_rows(0, all_emb.cols());
  for (std::size_t i = 0; i < v_raw_all.size(); ++i) {
    const auto& row = all_emb.row(u.size() + i);
    if (in_span(row, u_rows)) continue;
    v_index.push_back(i);
    v_rows.append_row(row);
  }
  trace.v_candidates = v_index.size();
  trace.v_rank = integer_rank(v_rows);

  // (5) V must be infinite cyclic (finitely generated and torsion-free, so rank one).
  if (trace.v_rank != 1) return empty_result(std::move(trace));
  std::size_t col = 0;
  while (v_rows.at(0, col) == 0) ++col;
  std::vector<Int> lead;
  for (std::size_t i = 0; i < v_rows.rows(); ++i) lead.push_back(v_rows.at(i, col));
  const std::vector<Int> k = bezout(lead);
  Coords v_raw = c.zero(n).coords();
  AlgElem v_gen = c.zero(n);
  TrueVec v = reduced(v_raw);
  for (std::size_t i = 0; i < v_index.size(); ++i) {
    if (k[i] == 0) continue;
    v_gen = v_gen + k[i] * c.element(n, v_raw_all[v_index[i]]);
    v = v + k[i] * together[u.size() + v_index[i]];
  }
  trace.v_generator = v_gen;
  trace.v_reduced = v;

  // (6) pi: D_n -> D_n / U.
  const UnitElimination pi(u, trace.quotient_ints, "U");
  const TrueVec image = pi.apply(v);
  trace.pi_v = image;

  // (7) Height in Z^a' + PQ^b is the pointwise minimum over the summands.
  std::vector<HeightSeq> parts;
  for (const auto& x : image.ints) parts.push_back(height_of_integer(x));
  for (const auto& q : image.pqs) parts.push_back(height_of_quotient_element(q));
  const HeightSeq h = parts.empty() ? HeightSeq::infinity() : height_min(parts);
  trace.height = h;
  return {InvariantResult::Outcome::Height, h, std::move(trace)};
}

EndAlgebra end_sum(const EndAlgebra& a, const AlgElem& class_a, const EndAlgebra& b, const AlgElem& class_b) {
  if (!(class_a.algebra() == a) || !(class_b.algebra() == b)) {
    throw AlgebraMismatch("ray class does not belong to its summand");
  }
  return EndAlgebra::end_sum(class_a, class_b);
}

namespace {

Preset make_preset(const BaseRing& x, const BaseRing& y, const PowerSeries& alpha, DegreeProfile profile) {
  const EndAlgebra m = EndAlgebra::surgered_stringer(x);
  const AlgElem cm = surgered_ray_class(m, {Ambient::SurgeredStringer, alpha});
  const EndAlgebra n = EndAlgebra::stringer(y);
  const AlgElem cn = straight_ray_class(n);
  return {m, cm, n, cn, end_sum(m, cm, n, cn), std::move(profile)};
}

}  // namespace

Preset main_theorem_preset(const PowerSeries& alpha) {
  return make_preset(torus(3), sphere_product(1, 2), alpha, DegreeProfile::main_theorem());
}

Preset variation1_preset(unsigned m, const PowerSeries& alpha) {
  const DegreeProfile profile = DegreeProfile::variation1(m);
  return make_preset(sphere_product(2, m - 3), sphere_product(1, m - 2), alpha, profile);
}

FamilyReport main_theorem_family(const std::vector<HeightSeq>& heights, unsigned m) {
  FamilyReport report;
  report.inputs = heights;
  for (const auto& h : heights) {
    const PowerSeries alpha = realize_height(h).representative();
    const Preset p = m == 4 ? main_theorem_preset(alpha) : variation1_preset(m, alpha);
    report.results.push_back(invariant_h(p.sum, p.profile));
  }
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    for (std::size_t j = i + 1; j < report.results.size(); ++j) {
      const auto& a = report.results[i];
      const auto& b = report.results[j];
      if (a.outcome == b.outcome && a.height == b.height) report.collisions.emplace_back(i, j);
    }
  }
  return report;
}

}  // namespace endcohom
