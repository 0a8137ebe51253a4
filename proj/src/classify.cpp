#include "endcohom/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "endcohom/errors.hpp"

namespace endcohom {

void SpaceSpec::validate() const {
  const std::size_t want = (family == Family::Ladder || family == Family::Wedge) ? 2 : 1;
  if (family == Family::EndSum) throw InvalidParameter("end-sums are not model spaces");
  if (genera.size() != want) {
    throw InvalidParameter(endcohom::to_string(family) + " takes " + std::to_string(want) + " genera");
  }
}

std::string SpaceSpec::to_string() const {
  std::string out = endcohom::to_string(family) + "(";
  for (std::size_t i = 0; i < genera.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(genera[i]);
  }
  return out + ")";
}

EndAlgebra build_space(const SpaceSpec& s) {
  s.validate();
  switch (s.family) {
    case Family::Stringer:
      return EndAlgebra::stringer(surface(s.genera[0]));
    case Family::SurgeredStringer:
      return EndAlgebra::surgered_stringer(surface(s.genera[0]));
    case Family::Ladder:
      return EndAlgebra::ladder(surface(s.genera[0]), surface(s.genera[1]));
    case Family::Wedge:
      return EndAlgebra::wedge(surface(s.genera[0]), surface(s.genera[1]));
    case Family::EndSum:
      break;
  }
  throw InvalidParameter("unsupported family");
}

long rank_bound(long r_g, long r_h, long r_f) {
  if (r_g < 0 || r_h < 0 || r_f < 0) throw InvalidParameter("ranks must be nonnegative");
  if (r_g > r_f || r_h > r_f) throw InvalidParameter("submodule rank exceeds the ambient rank");
  return std::max(0L, r_g + r_h - r_f);
}

namespace {

unsigned span_rank(const EndAlgebra& a, unsigned k, const std::vector<Coords>& raw) {
  if (raw.empty()) return 0;
  std::vector<TrueVec> vs;
  for (const auto& c : raw) vs.push_back(to_true(a.module(k), a.element(k, c).coords()));
  return static_cast<unsigned>(integer_rank(embed_true(vs)));
}

// Unit vectors of one Free atom of degree one.
std::vector<AlgElem> slot_basis(const EndAlgebra& a, std::size_t atom) {
  std::vector<AlgElem> out;
  const ModuleShape& m = a.module(1);
  for (unsigned j = 0; j < m.atoms[atom].rank; ++j) {
    Coords c = a.zero(1).coords();
    std::get<std::vector<Int>>(c[atom])[j] = 1;
    out.push_back(a.element(1, std::move(c)));
  }
  return out;
}

// A slot qualifies when its products lie on one line and the induced pairing
// into that line is nondegenerate.
unsigned flat_slot_rank(const EndAlgebra& a, std::size_t atom) {
  const std::vector<AlgElem> basis = slot_basis(a, atom);
  const std::size_t r = basis.size();
  std::vector<TrueVec> prods;
  for (const auto& x : basis) {
    for (const auto& y : basis) prods.push_back(to_true(a.module(2), cup(x, y).coords()));
  }
  const IntMatrix emb = embed_true(prods);
  const std::size_t line = integer_rank(emb);
  if (line != 1) return 0;
  std::size_t col = 0;
  auto column_is_zero = [&](std::size_t c) {
    for (std::size_t i = 0; i < emb.rows(); ++i) {
      if (emb.at(i, c) != 0) return false;
    }
    return true;
  };
  while (column_is_zero(col)) ++col;
  IntMatrix pairing(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) pairing.at(i, j) = emb.at(i * r + j, col);
  }
  return integer_rank(pairing) == r ? static_cast<unsigned>(r) : 0;
}

std::string flag(bool countable) { return countable ? "countable" : "uncountable"; }

}  // namespace

SpaceInvariants space_invariants(const EndAlgebra& a) {
  if (a.top_degree() < 2) throw InvalidParameter("invariants need a top degree of at least 2");
  SpaceInvariants inv{};
  const ModuleShape& h1 = a.module(1);
  inv.h1_countable = h1.count(AtomKind::PQ) == 0 && h1.count(AtomKind::KQ) == 0;
  inv.h1_rank = h1.free_rank();
  inv.h1_dual_rank = dual_shape(a, 1).free_rank();
  inv.top_dual_rank = dual_shape(a, a.top_degree()).free_rank();

  const std::vector<AlgElem> basis = a.free_basis(1);
  std::vector<Coords> prods;
  for (const auto& x : basis) {
    for (const auto& y : basis) prods.push_back(cup(x, y).coords());
  }
  inv.cup_span_rank = span_rank(a, 2, prods);

  inv.max_flat_side = 0;
  for (std::size_t i = 0; i < h1.atoms.size(); ++i) {
    if (h1.atoms[i].kind == AtomKind::Free) inv.max_flat_side = std::max(inv.max_flat_side, flat_slot_rank(a, i));
  }
  return inv;
}

namespace {

using Key = std::pair<char, std::vector<unsigned>>;

// Isomorphism type of the algebra: a surgered stringer on g behaves as the
// ladder on {g, 0}.
Key type_key(const SpaceSpec& s) {
  std::vector<unsigned> g = s.genera;
  switch (s.family) {
    case Family::Stringer:
      return {'S', g};
    case Family::SurgeredStringer:
      g.push_back(0);
      break;
    case Family::Ladder:
      break;
    case Family::Wedge:
      std::sort(g.begin(), g.end());
      return {'W', g};
    case Family::EndSum:
      throw InvalidParameter("end-sums are not model spaces");
  }
  std::sort(g.begin(), g.end());
  return {'L', g};
}

std::string num(unsigned v) { return std::to_string(v); }

}  // namespace

Verdict classify_pair(const SpaceSpec& a, const SpaceSpec& b) {
  a.validate();
  b.validate();
  const SpaceInvariants ia = space_invariants(build_space(a));
  const SpaceInvariants ib = space_invariants(build_space(b));

  std::vector<Certificate> differing;
  if (ia.h1_countable != ib.h1_countable) {
    differing.push_back({"countability of H1", flag(ia.h1_countable), flag(ib.h1_countable)});
  }
  if (ia.h1_countable && ib.h1_countable && ia.h1_rank != ib.h1_rank) {
    differing.push_back({"rank of H1", num(ia.h1_rank), num(ib.h1_rank)});
  }
  if (ia.h1_dual_rank != ib.h1_dual_rank) {
    differing.push_back({"rank of the dual of H1", num(ia.h1_dual_rank), num(ib.h1_dual_rank)});
  }
  if (ia.top_dual_rank != ib.top_dual_rank) {
    differing.push_back({"rank of the dual of the top degree", num(ia.top_dual_rank), num(ib.top_dual_rank)});
  }
  if (ia.cup_span_rank != ib.cup_span_rank) {
    differing.push_back({"rank of the degree-2 cup span", num(ia.cup_span_rank), num(ib.cup_span_rank)});
  }
  if (ia.max_flat_side != ib.max_flat_side) {
    differing.push_back({"largest degree-1 side with rank-1 cup span", num(ia.max_flat_side), num(ib.max_flat_side)});
  }

  const bool iso = type_key(a) == type_key(b);
  if (iso) {
    if (!differing.empty()) {
      throw std::logic_error("isomorphic " + a.to_string() + " and " + b.to_string() + " differ in " +
                             differing.front().invariant);
    }
    std::string why = "identical";
    if (a.family != b.family) {
      why = "exceptional identification";
    } else if (!(a == b)) {
      why = "ladder sides swapped";
    }
    return {true, {why, a.to_string(), b.to_string()}};
  }
  if (differing.empty()) {
    throw std::logic_error("no computed invariant separates " + a.to_string() + " and " + b.to_string());
  }
  return {false, differing.front()};
}

Verdict wedge_vs_ladder(const BaseRing& x, const BaseRing& y) {
  if (x.dim() != y.dim()) throw InvalidParameter("wedge and ladder need base rings of equal dimension");
  const EndAlgebra w = EndAlgebra::wedge(x, y);
  const EndAlgebra l = EndAlgebra::ladder(x, y);
  const unsigned rw = dual_shape(w, w.top_degree()).free_rank();
  const unsigned rl = dual_shape(l, l.top_degree()).free_rank();
  if (rw == rl) throw std::logic_error("wedge and ladder top duals agree");
  return {false, {"rank of the dual of the top degree", num(rw), num(rl)}};
}

}  // namespace endcohom
