#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "distid/bounds.hpp"
#include "distid/errors.hpp"

namespace distid {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

TEST(PairwiseSum, TwoPointExample) {
  const auto family = make_family(ExplicitFamily{{{0.5, 0.5}, {0.9, 0.1}}});
  const auto sum = pairwise_sum_S(family, 10);
  EXPECT_NEAR(sum.S, std::pow(0.8, 10), 1e-15);
  EXPECT_NEAR(sum.S, 0.1073741824, 1e-12);
  EXPECT_NEAR(sum.log_S, 10 * std::log(0.8), 1e-13);
}

TEST(PairwiseSum, DisjointSupports) {
  const auto family = make_family(ExplicitFamily{{{1.0, 0.0}, {0.0, 1.0}}});
  const auto sum = pairwise_sum_S(family, 5);
  EXPECT_EQ(sum.S, 0.0);
  EXPECT_EQ(sum.log_S, kNegInf);
}

TEST(PairwiseSum, ThreeEquidistantMembers) {
  // three pmfs on a 3-letter alphabet related by cyclic shifts share every pairwise B
  const auto family = make_family(ExplicitFamily{{{0.6, 0.3, 0.1}, {0.1, 0.6, 0.3}, {0.3, 0.1, 0.6}}});
  const double b = bhattacharyya(family[0], family[1]);
  EXPECT_NEAR(bhattacharyya(family[1], family[2]), b, 1e-15);
  EXPECT_NEAR(bhattacharyya(family[0], family[2]), b, 1e-15);
  for (std::uint64_t n : {1, 7, 40}) {
    EXPECT_NEAR(pairwise_sum_S(family, n).S, 3.0 * std::exp(-2.0 * n * b), 1e-12 * 3.0 * std::exp(-2.0 * n * b));
  }
}

TEST(PairwiseSum, AgreesWithNaiveSumAndDecreasesInN) {
  const auto family = make_family(RandomSimplex{12, 4, Seed{5}});
  double previous = std::numeric_limits<double>::infinity();
  for (std::uint64_t n = 1; n <= 60; n += 3) {
    double naive = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        naive += std::exp(-2.0 * static_cast<double>(n) * bhattacharyya(family[i], family[j]));
      }
    }
    const auto sum = pairwise_sum_S(family, n);
    EXPECT_NEAR(sum.S, naive, 1e-10 * naive);
    EXPECT_LT(sum.S, previous);
    previous = sum.S;
  }
}

TEST(PairwiseSum, LogDomainSurvivesUnderflow) {
  const auto family = make_family(ExplicitFamily{{{0.5, 0.5}, {0.9, 0.1}}});
  const auto sum = pairwise_sum_S(family, 10000);
  EXPECT_EQ(sum.S, 0.0);
  EXPECT_NEAR(sum.log_S, 10000 * std::log(0.8), 1e-8);
}

TEST(PairwiseBhattacharyya, ParallelMatchesSerial) {
  const auto family = make_family(RandomSimplex{40, 7, Seed{6}});
  EXPECT_EQ(pairwise_bhattacharyya(family), pairwise_bhattacharyya_serial(family));
}

TEST(UpperBound, Examples) {
  EXPECT_EQ(upper_bound(0.0).value, 0.0);
  EXPECT_NEAR(*upper_bound(1e-4).value, 16e-4 / 0.96, 1e-15);
  EXPECT_FALSE(upper_bound(0.1).applicable());
  EXPECT_FALSE(upper_bound(1.0 / 16.0).applicable());
  const auto clamped = upper_bound(0.05);
  ASSERT_TRUE(clamped.applicable());
  EXPECT_EQ(*clamped.value, 1.0);
  EXPECT_TRUE(clamped.clamped);
}

TEST(UpperBound, AlgebraicIdentity) {
  for (double s : {1e-12, 1e-8, 1e-4, 1e-3, 5e-3, 1e-2, 2e-2}) {
    const auto u = upper_bound(s);
    ASSERT_TRUE(u.applicable());
    if (u.clamped) continue;
    EXPECT_NEAR(*u.value * (1 - 4 * std::sqrt(s)), 16 * s, 1e-12);
  }
}

TEST(LowerBound, ExamplesAndIdentity) {
  EXPECT_EQ(lower_bound(0.0), 0.0);
  EXPECT_NEAR(lower_bound(0.01), 0.1 / 8.1, 1e-15);
  EXPECT_NEAR(lower_bound(64.0), 0.5, 1e-15);
  double previous = -1.0;
  for (double s = 1e-6; s < 1e6; s *= 3.7) {
    const double l = lower_bound(s);
    EXPECT_NEAR(l * (8 + std::sqrt(s)), std::sqrt(s), 1e-12 * std::max(1.0, std::sqrt(s)));
    EXPECT_GT(l, previous);
    previous = l;
  }
  EXPECT_THROW(lower_bound(-1.0), PreconditionError);
}

TEST(CycleSumBound, PairsReproduceS) {
  for (std::uint64_t a : {2, 3, 5}) {
    const auto family = make_family(BinaryGrid{a, 0.1, 0.9});
    for (std::uint64_t n : {1, 10, 50}) {
      const auto s = pairwise_sum_S(family, n);
      const auto c = cycle_sum_bound(family, n, 2);
      EXPECT_EQ(c.S, s.S);
      EXPECT_EQ(c.log_S, s.log_S);
    }
  }
}

TEST(CycleSumBound, BelowGeometricChain) {
  const auto family = make_family(BinaryGrid{4, 0.1, 0.9});
  for (std::uint64_t n : {5, 20, 80}) {
    const double s = pairwise_sum_S(family, n).S;
    double chain = 0.0;
    for (int r = 2; r <= 4; ++r) chain += std::pow(4.0, r) * std::pow(s, r / 2.0);
    EXPECT_LE(cycle_sum_bound(family, n, 4).S, chain);
  }
}

TEST(CountRatio, Examples) {
  EXPECT_NEAR(count_ratio(4, 4), 3.0 / 36.0, 1e-14);
  EXPECT_NEAR(count_ratio(5, 3), 10.0 / std::pow(10.0, 1.5), 1e-14);
  EXPECT_NEAR(count_ratio(4, 2), 0.5, 1e-14);
  EXPECT_TRUE(count_ratio_within_four_pow(4, 4));
  EXPECT_TRUE(count_ratio_within_four_pow(64, 64));
}

TEST(CountRatio, ExactAndFloatingAgree) {
  for (std::uint64_t k = 2; k <= 30; ++k) {
    for (std::uint64_t r = 2; r <= k; ++r) {
      EXPECT_EQ(count_ratio_within_four_pow(k, r), count_ratio(k, r) <= std::pow(4.0, r));
    }
  }
}

TEST(BoundReport, TwoPointRow) {
  const auto family = make_family(ExplicitFamily{{{0.5, 0.5}, {0.9, 0.1}}});
  const auto report = make_bound_report(family, 10);
  EXPECT_EQ(report.A, 2u);
  EXPECT_FALSE(report.upper.applicable());
  const double root = std::pow(0.8, 5);
  EXPECT_NEAR(report.lower, root / (8 + root), 1e-16);
  EXPECT_NEAR(report.lower, 0.039348, 1e-6);
}

FamilySequenceSpec constant_pair_spec() {
  FamilySequenceSpec spec;
  spec.growth.kind = GrowthRule::Kind::kConstant;
  spec.growth.size = 2;
  spec.generator = ExplicitFamily{{{0.5, 0.5}, {0.9, 0.1}}};
  spec.n_grid = {10, 20, 30, 40, 50, 60};
  return spec;
}

TEST(Verdict, ConstantPairIsIdentifiable) {
  const auto report = identifiability_verdict(constant_pair_spec());
  EXPECT_EQ(report.verdict, Verdict::kIdentifiableTrend);
  EXPECT_EQ(report.window, 3u);
  EXPECT_NEAR(report.slope, std::log(0.8), 1e-12);
}

TEST(Verdict, DenseGridGrowthIsNotIdentifiable) {
  FamilySequenceSpec spec;
  spec.growth.kind = GrowthRule::Kind::kPolynomial;
  spec.growth.degree = 1.0;
  spec.generator = BinaryGrid{2, 0.1, 0.9};
  spec.n_grid = {20, 40, 80, 160};
  // A_n = n equally spaced binary pmfs: neighbour distance shrinks like 1/n^2
  EXPECT_EQ(identifiability_verdict(spec).verdict, Verdict::kNotIdentifiableTrend);
}

TEST(Verdict, SampledPointsStayCloseToExact) {
  FamilySequenceSpec spec;
  spec.growth.kind = GrowthRule::Kind::kConstant;
  spec.growth.size = 400;
  spec.generator = RandomSimplex{2, 32, Seed{1}};
  spec.n_grid = {5, 10, 15};
  spec.pair_budget = 100000;
  const TrendPoint exact = trend_point(spec, 10);
  EXPECT_FALSE(exact.sampled);
  spec.pair_budget = 5000;
  const TrendPoint sampled = trend_point(spec, 10);
  EXPECT_TRUE(sampled.sampled);
  EXPECT_EQ(sampled.pairs_evaluated, 5000u);
  EXPECT_NEAR(sampled.log_S, exact.log_S, 0.1);
}

TEST(Verdict, SpecValidation) {
  auto spec = constant_pair_spec();
  spec.n_grid = {10, 10, 20};
  EXPECT_THROW(identifiability_verdict(spec), PreconditionError);
  spec.n_grid = {10, 20};
  EXPECT_THROW(identifiability_verdict(spec), PreconditionError);
  EXPECT_EQ(verdict_from_string(to_string(Verdict::kInconclusive)), Verdict::kInconclusive);
  EXPECT_THROW(verdict_from_string("maybe"), PreconditionError);
}

}  // namespace
}  // namespace distid
