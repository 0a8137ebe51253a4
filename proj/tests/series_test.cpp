#include <gtest/gtest.h>

#include "endcohom/errors.hpp"
#include "endcohom/series.hpp"
#include "support.hpp"

using namespace endcohom;
using testing_support::coefficient_oracle;
using testing_support::Gen;

namespace {

PowerSeries ones() { return PowerSeries::constant_tail(1); }

HeightSeq h_3_0_inf() {
  return {{{2, HeightValue::finite(3)}, {5, HeightValue::infinity()}}, HeightSeq::Default::Zero};
}

}  // namespace

TEST(Series, GeometricSeriesCoefficient) { EXPECT_EQ(ones().coefficient(7), 1); }

TEST(Series, ZeroSeries) {
  EXPECT_EQ(PowerSeries().coefficient(3), 0);
  EXPECT_TRUE(PowerSeries().is_zero());
}

TEST(Series, HeightWitnessFollowsProductFormula) {
  const PowerSeries s({}, TailSpec::height(h_3_0_inf()));
  // p_1 = 2 and p_2 = 3 enter at i = 2 with exponents min(3,2) and 0.
  EXPECT_EQ(s.coefficient(2), 4);
  EXPECT_EQ(s.coefficient(5), 25000);
  for (unsigned long i = 0; i < 30; ++i) EXPECT_EQ(s.coefficient(i), coefficient_oracle(s, i));
}

TEST(Series, WitnessWithInfiniteDefaultKeepsHeightTerm) {
  const HeightSeq h({{Int(3), HeightValue::finite(1)}}, HeightSeq::Default::Infinity);
  const PowerSeries s({}, TailSpec::height(h));
  ASSERT_TRUE(s.tail().has_height());
  // i = 3: 2^3 * 3^1 * 5^3
  EXPECT_EQ(s.coefficient(3), Int(8) * 3 * 125);
}

TEST(Series, AddNegate) {
  EXPECT_TRUE(add(ones(), negate(ones())).is_zero());
  const PowerSeries a = PowerSeries::polynomial({1, 2});
  const PowerSeries b = PowerSeries::constant_tail(3);
  const PowerSeries c = a + b;
  EXPECT_EQ(c, PowerSeries({4, 5}, TailSpec::constant(3)));
  for (unsigned long i = 0; i <= 20; ++i) EXPECT_EQ(c.coefficient(i), coefficient_oracle(a, i) + coefficient_oracle(b, i));
}

TEST(Series, ScalarMultiple) { EXPECT_EQ(scalar_mul(2, ones()), PowerSeries::constant_tail(2)); }

TEST(Series, DifferenceOfConstantIsZero) {
  const PowerSeries d = difference_transform(ones());
  for (unsigned long i = 0; i < 20; ++i) EXPECT_EQ(d.coefficient(i), 0);
  EXPECT_TRUE(is_polynomial(d));
}

TEST(Series, PartialSums) {
  EXPECT_EQ(partial_sum_transform(PowerSeries(), 1), ones());
  const PowerSeries s = partial_sum_transform(PowerSeries::polynomial({1, 2, 3}), 0);
  EXPECT_EQ(s, PowerSeries({1, 3, 6}, TailSpec::constant(6)));
  Int running = 0;
  for (unsigned long i = 0; i < 20; ++i) {
    running += i < 3 ? Int(static_cast<long>(i) + 1) : Int(0);
    EXPECT_EQ(s.coefficient(i), running);
  }
}

TEST(Series, PartialSumRaisesPolynomialDegree) {
  const PowerSeries s({}, TailSpec::poly({Rat(1), Rat(1)}));
  EXPECT_EQ(partial_sum_transform(s, 0).tail().poly_coeffs().size(), 3u);
}

TEST(Series, TransformsRejectHeightTails) {
  const HeightSeq h({}, HeightSeq::Default::Infinity);
  const PowerSeries s({}, TailSpec::height(h));
  EXPECT_THROW(difference_transform(s), UnsupportedTailCombination);
  EXPECT_THROW(partial_sum_transform(s, 0), UnsupportedTailCombination);
}

TEST(Series, DistinctHeightTailsDoNotAdd) {
  const PowerSeries a({}, TailSpec::height(HeightSeq({}, HeightSeq::Default::Infinity)));
  const PowerSeries b({}, TailSpec::height(HeightSeq({{Int(2), HeightValue::finite(1)}}, HeightSeq::Default::Infinity)));
  EXPECT_THROW(a + b, UnsupportedTailCombination);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a + a, scalar_mul(2, a));
}

TEST(Series, Polynomiality) {
  EXPECT_TRUE(is_polynomial(PowerSeries::polynomial({5, -2})));
  EXPECT_FALSE(is_polynomial(ones()));
  EXPECT_TRUE(is_polynomial(PowerSeries({}, TailSpec::poly({Rat(0)}))));
}

TEST(Series, CanonicalPrefixIsMinimal) {
  const PowerSeries s({1, 1, 1}, TailSpec::constant(1));
  EXPECT_TRUE(s.prefix().empty());
  EXPECT_EQ(s, ones());
  const PowerSeries g({1}, TailSpec::geometric(Rat(1), 0));
  EXPECT_EQ(g, PowerSeries::polynomial({1}));
}

TEST(SeriesProperties, AdditionIsCoefficientwise) {
  Gen gen(11);
  for (int t = 0; t < 200; ++t) {
    const PowerSeries a = gen.series(), b = gen.series();
    const PowerSeries c = a + b;
    for (unsigned long i = 0; i <= 200; i += 7) {
      ASSERT_EQ(c.coefficient(i), coefficient_oracle(a, i) + coefficient_oracle(b, i)) << "trial " << t << " i " << i;
    }
  }
}

TEST(SeriesProperties, DifferenceThenPartialSum) {
  Gen gen(12);
  for (int t = 0; t < 200; ++t) {
    const PowerSeries s = gen.series();
    const PowerSeries back = partial_sum_transform(difference_transform(s), s.coefficient(0));
    ASSERT_EQ(back, s);
    for (unsigned long i = 0; i <= 200; i += 13) ASSERT_EQ(back.coefficient(i), coefficient_oracle(s, i));
  }
}

TEST(SeriesProperties, PartialSumMatchesRunningTotals) {
  Gen gen(13);
  for (int t = 0; t < 100; ++t) {
    const PowerSeries s = gen.series();
    const Int s0 = gen.range(-5, 5);
    const PowerSeries p = partial_sum_transform(s, s0);
    Int running = s0;
    for (unsigned long i = 0; i <= 60; ++i) {
      running += coefficient_oracle(s, i);
      ASSERT_EQ(p.coefficient(i), running);
    }
  }
}

TEST(SeriesProperties, CanonicalFormIsStable) {
  Gen gen(14);
  for (int t = 0; t < 200; ++t) {
    const PowerSeries s = gen.series();
    const PowerSeries again(s.prefix(), s.tail());
    ASSERT_EQ(again, s);
    // Padding the prefix with tail values must not change the canonical form.
    std::vector<Int> longer = s.coefficients(s.prefix().size() + 4);
    ASSERT_EQ(PowerSeries(longer, s.tail()), s);
  }
}
