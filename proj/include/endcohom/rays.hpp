#pragma once

#include <utility>
#include <vector>

#include "endcohom/end_algebras.hpp"

namespace endcohom {

enum class Ambient { Stringer, SurgeredStringer, Ladder };

/// A ray recorded by its signed intersection numbers with the rung spheres:
/// epsilons = sum_i e_i x^i. Unused for a stringer.
struct RayDatum {
  Ambient ambient;
  PowerSeries epsilons;
};

/// [(1, sum e_i x^i, 0)] in the top degree of a ladder algebra.
AlgElem ladder_ray_class(const EndAlgebra& ladder, const RayDatum& d);

/// (1, [sum e_i x^i]) in the top degree of a surgered stringer algebra.
AlgElem surgered_ray_class(const EndAlgebra& surgered, const RayDatum& d);

/// The class of a straight ray in a stringer, as an integer.
Int straight_ray_class();
/// The same class as a top-degree element of a stringer algebra.
AlgElem straight_ray_class(const EndAlgebra& stringer);

/// Segment r_k winds w_k = a_0 + ... + a_k times: it meets S_k with sign
/// +w_k and S_{k+1} with sign -w_k.
struct SwindlePath {
  PowerSeries winding;

  std::pair<Int, Int> segment(unsigned long k) const { return {winding.coefficient(k), -winding.coefficient(k)}; }
};

/// Symbolic swindle; throws UnsupportedTailCombination for a height tail.
SwindlePath swindle(const PowerSeries& alpha);
/// Windings w_0..w_{horizon-1}; defined for every tail.
std::vector<Int> swindle_windings(const PowerSeries& alpha, unsigned long horizon);

/// Net intersection with S_k: w_k - w_{k-1} (w_{-1} = 0).
PowerSeries path_to_epsilons(const SwindlePath& p);
std::vector<Int> path_to_epsilons(const std::vector<Int>& windings);

}  // namespace endcohom
