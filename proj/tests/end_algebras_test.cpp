#include <gtest/gtest.h>

#include "endcohom/end_algebras.hpp"
#include "endcohom/endsum_invariant.hpp"
#include "endcohom/errors.hpp"
#include "endcohom/rays.hpp"
#include "support.hpp"

using namespace endcohom;
using testing_support::Gen;

namespace {

PowerSeries ones() { return PowerSeries::constant_tail(1); }

AlgElem random_element(Gen& gen, const EndAlgebra& a, unsigned k) {
  Coords c;
  for (const auto& atom : a.module(k).atoms) {
    switch (atom.kind) {
      case AtomKind::Free: {
        std::vector<Int> v;
        for (unsigned i = 0; i < atom.rank; ++i) v.push_back(gen.range(-5, 5));
        c.emplace_back(v);
        break;
      }
      case AtomKind::PQ:
        c.emplace_back(PQElem(gen.series()));
        break;
      case AtomKind::KQ:
        c.emplace_back(gen.kq_elem());
        break;
    }
  }
  return a.element(k, c);
}

std::vector<EndAlgebra> zoo() {
  const Preset p = main_theorem_preset(PowerSeries({}, TailSpec::geometric(Rat(2), 3)));
  return {EndAlgebra::stringer(torus(3)),
          EndAlgebra::surgered_stringer(torus(3)),
          EndAlgebra::ladder(surface(1), surface(2)),
          EndAlgebra::wedge(surface(2), surface(1)),
          EndAlgebra::ladder(torus(3), sphere_product(1, 2)),
          p.sum,
          variation1_preset(5, ones()).sum};
}

}  // namespace

TEST(EndAlgebras, SurgeredStringerOnTorus) {
  const EndAlgebra m = EndAlgebra::surgered_stringer(torus(3));
  EXPECT_EQ(m.module(3).to_string(), "Free(1) + PQ");
  EXPECT_EQ(m.module(1).to_string(), "Free(3) + PQ");
  EXPECT_EQ(m.module(2).to_string(), "Free(3)");
  EXPECT_EQ(m.ends(), 1u);
}

TEST(EndAlgebras, StringerMatchesBaseRing) {
  const EndAlgebra s = EndAlgebra::stringer(torus(3));
  for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(s.module(k).free_rank(), torus(3).rank(k));
  EXPECT_TRUE(s.module(0).atoms.empty());
  EXPECT_TRUE(s.module(4).atoms.empty());
}

TEST(EndAlgebras, MainEndSumTable) {
  const Preset p = main_theorem_preset(ones());
  const EndAlgebra& c = p.sum;
  EXPECT_EQ(c.module(1).to_string(), "Free(3) + PQ + Free(1)");
  EXPECT_EQ(c.module(2).to_string(), "Free(3) + Free(1)");
  EXPECT_EQ(c.module(3).to_string(), "(Free(1) + PQ + Free(1))/I");
  EXPECT_TRUE(c.module(3).quotient);
  EXPECT_EQ(c.ends(), 1u);
}

TEST(EndAlgebras, LadderOfSpheresIsOneEnded) {
  EXPECT_EQ(EndAlgebra::ladder(surface(0), surface(0)).ends(), 1u);
  EXPECT_EQ(EndAlgebra::ladder(surface(0), surface(0)).module(2).to_string(), "KQ");
}

TEST(EndAlgebras, EndSumOfEndSumsCountsEnds) {
  const Preset p = main_theorem_preset(ones());
  const EndAlgebra n2 = EndAlgebra::stringer(sphere_product(1, 2));
  const EndAlgebra again = end_sum(p.sum, p.sum.free_basis(3).back(), n2, straight_ray_class(n2));
  EXPECT_EQ(again.ends(), 1u);
}

TEST(EndAlgebras, LadderCupOfSymplecticPair) {
  const EndAlgebra l = EndAlgebra::ladder(surface(1), surface(1));
  const auto b = l.free_basis(1);
  const AlgElem top = cup(b[0], b[1]);
  ASSERT_EQ(top.coords().size(), 1u);
  EXPECT_EQ(std::get<KQElem>(top.coords()[0]), KQElem(1, PowerSeries(), 0));
  EXPECT_EQ(std::get<KQElem>(cup(b[2], b[3]).coords()[0]), KQElem(0, PowerSeries(), 1));
  EXPECT_EQ(cup(b[1], b[0]), -top);
}

TEST(EndAlgebras, MiddleCoordinateKillsProducts) {
  for (const auto& a : zoo()) {
    const auto samples = a.pq_samples(1);
    for (const auto& s : samples) {
      for (unsigned k = 1; k < a.top_degree(); ++k) {
        for (const auto& g : a.free_basis(k)) {
          EXPECT_TRUE(cup(s, g).is_zero()) << a.describe();
          EXPECT_TRUE(cup(g, s).is_zero()) << a.describe();
        }
      }
    }
  }
}

TEST(EndAlgebras, EndSumNSideProduct) {
  const PowerSeries alpha({}, TailSpec::geometric(Rat(5), 2));
  const Preset p = main_theorem_preset(alpha);
  const EndAlgebra& c = p.sum;
  const AlgElem y1 = c.free_basis(1).back();
  const AlgElem y2 = c.free_basis(2).back();
  const AlgElem prod = cup(y1, y2);
  // Coordinates (A.X, A.sigma, B.X): the B class is rewritten as (1, [alpha], 0).
  ASSERT_EQ(prod.coords().size(), 3u);
  EXPECT_EQ(std::get<std::vector<Int>>(prod.coords()[0]), (std::vector<Int>{1}));
  EXPECT_EQ(std::get<PQElem>(prod.coords()[1]), PQElem(alpha));
  EXPECT_EQ(std::get<std::vector<Int>>(prod.coords()[2]), (std::vector<Int>{0}));
  const GElem image = eta(IElem(0, PQElem(), 1, PQElem(alpha)));
  EXPECT_EQ(image, (GElem{1, PQElem(alpha)}));
}

TEST(EndAlgebras, QuotientIgnoresIdealMultiples) {
  Gen gen(51);
  const Preset p = main_theorem_preset(ones());
  const EndAlgebra& c = p.sum;
  for (int t = 0; t < 50; ++t) {
    const AlgElem x = random_element(gen, c, 3);
    Coords shifted = x.coords();
    const long k = gen.range(-5, 5);
    std::get<std::vector<Int>>(shifted[0])[0] += k;
    std::get<PQElem>(shifted[1]) = std::get<PQElem>(shifted[1]) + Int(k) * PQElem(ones());
    std::get<std::vector<Int>>(shifted[2])[0] -= k;
    ASSERT_EQ(c.element(3, shifted), x);
  }
}

TEST(EndAlgebras, CupIsBilinearAndGradedCommutative) {
  Gen gen(52);
  for (const auto& a : zoo()) {
    const unsigned n = a.top_degree();
    for (int t = 0; t < 20; ++t) {
      const unsigned p = static_cast<unsigned>(gen.range(1, n - 1));
      const unsigned q = static_cast<unsigned>(gen.range(1, n - p));
      const AlgElem x = random_element(gen, a, p), x2 = random_element(gen, a, p);
      const AlgElem y = random_element(gen, a, q);
      const Int k = gen.range(-4, 4);
      ASSERT_EQ(cup(x + x2, y), cup(x, y) + cup(x2, y)) << a.describe();
      ASSERT_EQ(cup(k * x, y), k * cup(x, y));
      const AlgElem yx = cup(y, x);
      ASSERT_EQ(yx, (p * q) % 2 ? -cup(x, y) : cup(x, y)) << a.describe() << " " << p << " " << q;
    }
  }
}

TEST(EndAlgebras, LadderTopProductsHaveNoMiddlePart) {
  Gen gen(53);
  const EndAlgebra l = EndAlgebra::ladder(torus(3), sphere_product(1, 2));
  for (int t = 0; t < 50; ++t) {
    const AlgElem x = random_element(gen, l, 1);
    const AlgElem y = random_element(gen, l, 2);
    const KQElem k = std::get<KQElem>(cup(x, y).coords()[0]);
    ASSERT_TRUE(k.gamma().is_zero());
  }
}

TEST(EndAlgebras, Errors) {
  const EndAlgebra s = EndAlgebra::stringer(torus(3));
  const EndAlgebra other = EndAlgebra::stringer(torus(3));
  const auto b1 = s.free_basis(1);
  const auto b2 = s.free_basis(2);
  EXPECT_THROW(cup(b2[0], b2[1]), DegreeOverflow);
  EXPECT_THROW(cup(b1[0], other.free_basis(1)[0]), AlgebraMismatch);
  EXPECT_THROW(EndAlgebra::ladder(torus(3), surface(1)), DimensionMismatch);
  const EndAlgebra flat = EndAlgebra::stringer(surface(1));
  EXPECT_THROW(end_sum(s, straight_ray_class(s), flat, straight_ray_class(flat)), DimensionMismatch);
  EXPECT_THROW(s.element(0, {}), DegreeOverflow);
}

TEST(EndAlgebras, Duals) {
  EXPECT_EQ(dual_shape(EndAlgebra::wedge(surface(1), surface(1)), 2).to_string(), "Free(2)");
  EXPECT_EQ(dual_shape(EndAlgebra::ladder(surface(1), surface(1)), 2).to_string(), "Free(1)");
  for (unsigned g = 0; g <= 4; ++g) {
    EXPECT_EQ(dual_shape(EndAlgebra::surgered_stringer(surface(g)), 1).free_rank(), 2 * g);
  }
  EXPECT_EQ(dual_shape(main_theorem_preset(ones()).sum, 3).free_rank(), 1u);
}

TEST(EndAlgebras, RadicalJ) {
  const RadicalJ j = radical_j(main_theorem_preset(ones()).sum, 1);
  EXPECT_EQ(j.shape, "0 + PQ(A.tau) + 0");
  EXPECT_TRUE(j.is_ideal);
  EXPECT_GT(j.products_checked, 0u);
  const EndAlgebra s = EndAlgebra::stringer(torus(3));
  for (unsigned k = 1; k <= 3; ++k) EXPECT_TRUE(radical_j(s, k).atoms.empty());
  const RadicalJ w = radical_j(EndAlgebra::wedge(surface(1), surface(2)), 1);
  ASSERT_EQ(w.atoms.size(), 1u);
  EXPECT_EQ(w.shape, "0 + PQ(tau) + 0");
  EXPECT_TRUE(w.is_ideal);
}

TEST(EndAlgebras, TrueCoordinatesRoundtrip) {
  Gen gen(54);
  for (const auto& a : zoo()) {
    const unsigned n = a.top_degree();
    for (int t = 0; t < 20; ++t) {
      const AlgElem x = random_element(gen, a, n);
      ASSERT_EQ(a.element(n, from_true(a.module(n), to_true(a.module(n), x.coords()))), x);
    }
  }
}
