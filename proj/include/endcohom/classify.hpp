#pragma once

#include <string>
#include <vector>

#include "endcohom/end_algebras.hpp"

namespace endcohom {

/// A model space based on closed oriented surfaces.
struct SpaceSpec {
  Family family;  // Stringer, SurgeredStringer, Ladder or Wedge
  std::vector<unsigned> genera;

  /// Throws InvalidParameter when the genus count does not match the family.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

EndAlgebra build_space(const SpaceSpec& s);

/// The invariant that separates two algebras, or the reason they agree, with
/// the value computed on each side.
struct Certificate {
  std::string invariant;
  std::string value_a;
  std::string value_b;
};

struct Verdict {
  bool isomorphic;
  Certificate certificate;
};

/// Decides isomorphism of the two end-cohomology algebras and recomputes the
/// deciding invariant on the built algebras.
Verdict classify_pair(const SpaceSpec& a, const SpaceSpec& b);

/// Always distinct: the duals of the top degree have ranks 2 and 1.
Verdict wedge_vs_ladder(const BaseRing& x, const BaseRing& y);

/// Lower bound max(0, rG + rH - rF) for the rank of G n H inside a free
/// module F of rank rF.
long rank_bound(long r_g, long r_h, long r_f);

/// Invariants used by classify_pair, exposed for tests.
struct SpaceInvariants {
  bool h1_countable;
  unsigned h1_rank;        // meaningful only when countable
  unsigned h1_dual_rank;
  unsigned top_dual_rank;
  unsigned cup_span_rank;  // degree-two span of products of degree-one elements
  /// Largest rank of a degree-one side slot whose products span rank <= 1
  /// and pair nondegenerately.
  unsigned max_flat_side;
};

SpaceInvariants space_invariants(const EndAlgebra& a);

}  // namespace endcohom
