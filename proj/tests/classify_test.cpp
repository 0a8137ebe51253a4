#include <gtest/gtest.h>

#include <set>

#include "endcohom/classify.hpp"
#include "endcohom/errors.hpp"
#include "support.hpp"

using namespace endcohom;
using testing_support::Gen;

namespace {

SpaceSpec stringer(unsigned g) { return {Family::Stringer, {g}}; }
SpaceSpec surgered(unsigned g) { return {Family::SurgeredStringer, {g}}; }
SpaceSpec ladder(unsigned a, unsigned b) { return {Family::Ladder, {a, b}}; }
SpaceSpec wedge(unsigned a, unsigned b) { return {Family::Wedge, {a, b}}; }

std::vector<SpaceSpec> grid(unsigned max_genus) {
  std::vector<SpaceSpec> out;
  for (unsigned g = 0; g <= max_genus; ++g) {
    out.push_back(stringer(g));
    out.push_back(surgered(g));
    for (unsigned h = 0; h <= max_genus; ++h) {
      out.push_back(ladder(g, h));
      out.push_back(wedge(g, h));
    }
  }
  return out;
}

// The classification written out case by case.
bool expected_isomorphic(const SpaceSpec& a, const SpaceSpec& b) {
  auto as_ladder = [](const SpaceSpec& s) -> std::multiset<unsigned> {
    if (s.family == Family::SurgeredStringer) return {s.genera[0], 0};
    return {s.genera.begin(), s.genera.end()};
  };
  const bool a_l = a.family == Family::Ladder || a.family == Family::SurgeredStringer;
  const bool b_l = b.family == Family::Ladder || b.family == Family::SurgeredStringer;
  if (a_l && b_l) return as_ladder(a) == as_ladder(b);
  if (a.family != b.family) return false;
  return std::multiset<unsigned>(a.genera.begin(), a.genera.end()) ==
         std::multiset<unsigned>(b.genera.begin(), b.genera.end());
}

}  // namespace

TEST(Classify, LadderSidesCommute) {
  const Verdict v = classify_pair(ladder(1, 2), ladder(2, 1));
  EXPECT_TRUE(v.isomorphic);
  EXPECT_EQ(v.certificate.invariant, "ladder sides swapped");
}

TEST(Classify, CupSpanSeparatesLadders) {
  const Verdict v = classify_pair(ladder(1, 2), ladder(0, 3));
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.certificate.invariant, "rank of the degree-2 cup span");
  EXPECT_EQ(v.certificate.value_a, "2");
  EXPECT_EQ(v.certificate.value_b, "1");
}

TEST(Classify, ExceptionalIdentification) {
  for (unsigned g = 0; g <= 4; ++g) {
    for (const auto& other : {ladder(g, 0), ladder(0, g)}) {
      const Verdict v = classify_pair(surgered(g), other);
      EXPECT_TRUE(v.isomorphic);
      EXPECT_EQ(v.certificate.invariant, "exceptional identification");
    }
  }
}

TEST(Classify, OtherCertificates) {
  EXPECT_EQ(classify_pair(stringer(1), surgered(1)).certificate.invariant, "countability of H1");
  EXPECT_EQ(classify_pair(stringer(1), stringer(2)).certificate.invariant, "rank of H1");
  EXPECT_EQ(classify_pair(surgered(1), surgered(2)).certificate.invariant, "rank of the dual of H1");
  EXPECT_EQ(classify_pair(ladder(1, 1), wedge(1, 1)).certificate.invariant, "rank of the dual of the top degree");
  const Verdict v = classify_pair(ladder(1, 3), ladder(2, 2));
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.certificate.value_a, "6");
  EXPECT_EQ(v.certificate.value_b, "4");
}

TEST(Classify, CertificatesDifferWhenNotIsomorphic) {
  for (const auto& a : grid(2)) {
    for (const auto& b : grid(2)) {
      const Verdict v = classify_pair(a, b);
      if (!v.isomorphic) EXPECT_NE(v.certificate.value_a, v.certificate.value_b);
    }
  }
}

TEST(Classify, FullGridMatchesTheClassification) {
  const auto specs = grid(4);
  for (const auto& a : specs) {
    for (const auto& b : specs) {
      const Verdict v = classify_pair(a, b);
      ASSERT_EQ(v.isomorphic, expected_isomorphic(a, b)) << a.to_string() << " vs " << b.to_string();
      ASSERT_EQ(v.isomorphic, classify_pair(b, a).isomorphic);
    }
  }
}

TEST(Classify, WedgeVersusLadder) {
  const Verdict v = wedge_vs_ladder(surface(1), surface(1));
  EXPECT_FALSE(v.isomorphic);
  EXPECT_EQ(v.certificate.value_a, "2");
  EXPECT_EQ(v.certificate.value_b, "1");
  EXPECT_FALSE(wedge_vs_ladder(sphere(2), sphere(2)).isomorphic);
  EXPECT_FALSE(wedge_vs_ladder(torus(3), sphere_product(1, 2)).isomorphic);
  EXPECT_THROW(wedge_vs_ladder(torus(3), surface(1)), InvalidParameter);
}

TEST(Classify, SpecValidation) {
  EXPECT_THROW(classify_pair({Family::Ladder, {1}}, ladder(1, 1)), InvalidParameter);
  EXPECT_THROW(build_space({Family::Stringer, {1, 2}}), InvalidParameter);
}

TEST(RankBound, Examples) {
  EXPECT_EQ(rank_bound(4, 3, 6), 1);
  EXPECT_EQ(rank_bound(2, 2, 4), 0);
  EXPECT_THROW(rank_bound(5, 1, 4), InvalidParameter);
  EXPECT_THROW(rank_bound(-1, 1, 4), InvalidParameter);
}

TEST(RankBound, RandomSublatticesOfZ5) {
  // rank(G n H) is the dimension of the kernel of (x, y) -> xG - yH,
  // computed by rational elimination.
  Gen gen(81);
  for (int t = 0; t < 200; ++t) {
    auto sample = [&](long count) {
      std::vector<std::vector<Rat>> rows;
      for (long i = 0; i < count; ++i) {
        std::vector<Rat> r;
        for (int k = 0; k < 5; ++k) r.emplace_back(gen.range(-3, 3));
        rows.push_back(r);
      }
      return rows;
    };
    const auto g = sample(gen.range(0, 5));
    const auto h = sample(gen.range(0, 5));
    const std::size_t rg = testing_support::rational_rank(g);
    const std::size_t rh = testing_support::rational_rank(h);
    // Use independent generators so that the kernel dimension is the intersection rank.
    std::vector<std::vector<Rat>> gi, hi;
    for (const auto& r : g) {
      auto trial = gi;
      trial.push_back(r);
      if (testing_support::rational_rank(trial) > gi.size()) gi = trial;
    }
    for (const auto& r : h) {
      auto trial = hi;
      trial.push_back(r);
      if (testing_support::rational_rank(trial) > hi.size()) hi = trial;
    }
    std::vector<std::vector<Rat>> stacked = gi;
    stacked.insert(stacked.end(), hi.begin(), hi.end());
    const std::size_t kernel = stacked.size() - testing_support::rational_rank(stacked);
    ASSERT_GE(static_cast<long>(kernel), rank_bound(static_cast<long>(rg), static_cast<long>(rh), 5));
  }
}
