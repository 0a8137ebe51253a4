#include "endcohom/rays.hpp"

#include "endcohom/errors.hpp"

namespace endcohom {

namespace {

void require(const EndAlgebra& a, Family fam, const RayDatum* d, Ambient amb) {
  if (a.family() != fam) throw AmbientMismatch("algebra is a " + to_string(a.family()) + ", not a " + to_string(fam));
  if (d && d->ambient != amb) throw AmbientMismatch("ray datum belongs to a different ambient");
}

}  // namespace

AlgElem ladder_ray_class(const EndAlgebra& ladder, const RayDatum& d) {
  require(ladder, Family::Ladder, &d, Ambient::Ladder);
  return ladder.element(ladder.top_degree(), {KQElem(Int(1), d.epsilons, Int(0))});
}

AlgElem surgered_ray_class(const EndAlgebra& surgered, const RayDatum& d) {
  require(surgered, Family::SurgeredStringer, &d, Ambient::SurgeredStringer);
  return surgered.element(surgered.top_degree(), {std::vector<Int>{Int(1)}, PQElem(d.epsilons)});
}

Int straight_ray_class() { return 1; }

AlgElem straight_ray_class(const EndAlgebra& stringer) {
  require(stringer, Family::Stringer, nullptr, Ambient::Stringer);
  return stringer.element(stringer.top_degree(), {std::vector<Int>{straight_ray_class()}});
}

SwindlePath swindle(const PowerSeries& alpha) { return {partial_sum_transform(alpha, 0)}; }

std::vector<Int> swindle_windings(const PowerSeries& alpha, unsigned long horizon) {
  std::vector<Int> w;
  Int running = 0;
  for (unsigned long k = 0; k < horizon; ++k) {
    running += alpha.coefficient(k);
    w.push_back(running);
  }
  return w;
}

PowerSeries path_to_epsilons(const SwindlePath& p) {
  return difference_transform(p.winding) + PowerSeries::polynomial({p.winding.coefficient(0)});
}

std::vector<Int> path_to_epsilons(const std::vector<Int>& windings) {
  std::vector<Int> e;
  for (std::size_t k = 0; k < windings.size(); ++k) e.push_back(k == 0 ? windings[0] : windings[k] - windings[k - 1]);
  return e;
}

}  // namespace endcohom
