#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endcohom/end_algebras.hpp"
#include "endcohom/heights.hpp"

namespace endcohom {

/// Which products define U and V, and the degree they land in.
struct DegreeProfile {
  std::string name;
  unsigned target;
  std::vector<unsigned> u_degrees;
  std::vector<unsigned> v_degrees;

  /// Triples of degree-one elements for U; degree one times degree two for V.
  static DegreeProfile main_theorem();
  /// Dimension m >= 5: U from degrees (2, m-3), V from (1, m-2), target m-1.
  static DegreeProfile variation1(unsigned m);
};

struct InvariantTrace {
  std::string profile;
  std::string j_shape;
  bool j_is_ideal = false;
  std::size_t ideal_products_checked = 0;
  /// D_target after eliminating the end-sum relations: counts of Z and PQ summands.
  std::size_t quotient_ints = 0;
  std::size_t quotient_pqs = 0;
  std::size_t u_products = 0;
  std::size_t u_rank = 0;
  std::size_t v_candidates = 0;  // products not in U
  std::size_t v_rank = 0;
  std::optional<AlgElem> v_generator;       // normal form in D_target
  std::optional<TrueVec> v_reduced;         // the same element after the relations are eliminated
  std::optional<TrueVec> pi_v;              // its image in D_target / U
  std::optional<HeightSeq> height;
  std::vector<std::string> notes;
};

struct InvariantResult {
  enum class Outcome { Empty, Height };
  Outcome outcome;
  std::optional<HeightSeq> height;
  InvariantTrace trace;
};

/// Runs the seven-step procedure on C. Products are evaluated on basis
/// elements only; the trace notes this when C is not an end-sum of a surgered
/// stringer and a stringer.
InvariantResult invariant_h(const EndAlgebra& c, const DegreeProfile& profile = DegreeProfile::main_theorem());

/// The end-sum algebra of (M, [r]) and (N, [s]); the ideal is generated by
/// (class_a, -class_b).
EndAlgebra end_sum(const EndAlgebra& a, const AlgElem& class_a, const EndAlgebra& b, const AlgElem& class_b);

struct Preset {
  EndAlgebra m;
  AlgElem class_m;
  EndAlgebra n;
  AlgElem class_n;
  EndAlgebra sum;
  DegreeProfile profile;
};

/// Surgered stringer on T^3 with class (1,[alpha]) summed with the stringer on
/// S^1 x S^2 and its straight ray.
Preset main_theorem_preset(const PowerSeries& alpha);
/// Surgered stringer on S^2 x S^(m-3) and stringer on S^1 x S^(m-2).
Preset variation1_preset(unsigned m, const PowerSeries& alpha);

struct FamilyReport {
  std::vector<HeightSeq> inputs;
  std::vector<InvariantResult> results;
  /// Index pairs (i < j) whose invariants agree.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  bool all_distinct() const { return collisions.empty(); }
};

/// For each h: realize alpha_h, build the preset end-sum, run invariant_h and
/// compare all outcomes pairwise. m = 4 uses the main preset.
FamilyReport main_theorem_family(const std::vector<HeightSeq>& heights, unsigned m = 4);

}  // namespace endcohom
