#include <gtest/gtest.h>

#include "endcohom/errors.hpp"
#include "endcohom/rays.hpp"
#include "support.hpp"

using namespace endcohom;
using testing_support::coefficient_oracle;
using testing_support::Gen;

namespace {

PowerSeries ones() { return PowerSeries::constant_tail(1); }

EndAlgebra ladder() { return EndAlgebra::ladder(surface(1), surface(1)); }

}  // namespace

TEST(Rays, LadderClasses) {
  const EndAlgebra l = ladder();
  EXPECT_EQ(std::get<KQElem>(ladder_ray_class(l, {Ambient::Ladder, PowerSeries()}).coords()[0]),
            KQElem(1, PowerSeries(), 0));
  EXPECT_EQ(std::get<KQElem>(ladder_ray_class(l, {Ambient::Ladder, ones()}).coords()[0]), KQElem(1, ones(), 0));
  // A polynomial epsilon sequence moves into the integer entries.
  const PowerSeries eps = PowerSeries::polynomial({2, -1, 4});
  EXPECT_EQ(std::get<KQElem>(ladder_ray_class(l, {Ambient::Ladder, eps}).coords()[0]), KQElem(1 - 5, PowerSeries(), 5));
  EXPECT_THROW(ladder_ray_class(l, {Ambient::SurgeredStringer, ones()}), AmbientMismatch);
}

TEST(Rays, SurgeredClasses) {
  const EndAlgebra m = EndAlgebra::surgered_stringer(torus(3));
  auto klass = [&](const PowerSeries& e) { return surgered_ray_class(m, {Ambient::SurgeredStringer, e}); };
  EXPECT_EQ(std::get<std::vector<Int>>(klass(PowerSeries()).coords()[0]), (std::vector<Int>{1}));
  EXPECT_TRUE(std::get<PQElem>(klass(PowerSeries()).coords()[1]).is_zero());
  EXPECT_EQ(std::get<PQElem>(klass(ones()).coords()[1]), PQElem(ones()));
  EXPECT_EQ(klass(PowerSeries::polynomial({3, 1})), klass(PowerSeries()));
  EXPECT_THROW(surgered_ray_class(m, {Ambient::Ladder, ones()}), AmbientMismatch);
  EXPECT_THROW(surgered_ray_class(ladder(), {Ambient::SurgeredStringer, ones()}), AmbientMismatch);
}

TEST(Rays, StraightRay) {
  EXPECT_EQ(straight_ray_class(), 1);
  const EndAlgebra s = EndAlgebra::stringer(sphere_product(1, 2));
  EXPECT_EQ(std::get<std::vector<Int>>(straight_ray_class(s).coords()[0]), (std::vector<Int>{1}));
}

TEST(Rays, SwindleWorkedCase) {
  const PowerSeries alpha = PowerSeries::polynomial({1, 2});
  const auto w = swindle_windings(alpha, 2);
  EXPECT_EQ(w, (std::vector<Int>{1, 3}));
  EXPECT_EQ(path_to_epsilons(swindle_windings(alpha, 4)), (std::vector<Int>{1, 2, 0, 0}));
  EXPECT_EQ(swindle(alpha).segment(1), std::make_pair(Int(3), Int(-3)));
  EXPECT_EQ(path_to_epsilons(swindle(alpha)), alpha);
}

TEST(Rays, SwindleOfZeroAndOnes) {
  for (const auto& w : swindle_windings(PowerSeries(), 10)) EXPECT_EQ(w, 0);
  const auto w = swindle_windings(ones(), 101);
  for (std::size_t k = 0; k < w.size(); ++k) EXPECT_EQ(w[k], static_cast<long>(k) + 1);
  for (const auto& e : path_to_epsilons(w)) EXPECT_EQ(e, 1);
}

TEST(RaysProperties, SwindleRoundtrip) {
  Gen gen(61);
  for (int t = 0; t < 300; ++t) {
    const PowerSeries alpha = gen.series();
    const SwindlePath path = swindle(alpha);
    ASSERT_EQ(path_to_epsilons(path), alpha);
    // Telescoping on indices 0..100 with running sums done here.
    Int running = 0;
    Int previous = 0;
    for (unsigned long k = 0; k <= 100; ++k) {
      running += coefficient_oracle(alpha, k);
      ASSERT_EQ(path.winding.coefficient(k), running);
      ASSERT_EQ(running - previous, alpha.coefficient(k));
      previous = running;
    }
  }
}

TEST(RaysProperties, SwindleRealizesLadderClass) {
  Gen gen(62);
  const EndAlgebra l = ladder();
  for (int t = 0; t < 50; ++t) {
    const PowerSeries alpha = gen.series();
    const PowerSeries eps = path_to_epsilons(swindle(alpha));
    ASSERT_EQ(std::get<KQElem>(ladder_ray_class(l, {Ambient::Ladder, eps}).coords()[0]), KQElem(1, alpha, 0));
  }
}
