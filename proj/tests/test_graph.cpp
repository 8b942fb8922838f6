#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "distid/errors.hpp"
#include "distid/graph.hpp"
#include "oracles.hpp"

namespace distid {
namespace {

std::uint64_t choose(unsigned n, unsigned k) {
  return static_cast<std::uint64_t>(std::llround(boost::math::binomial_coefficient<double>(n, k)));
}

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

TEST(CycleCount, ClosedFormExamples) {
  EXPECT_EQ(cycle_count(4, 4), 3u);
  EXPECT_EQ(cycle_count(5, 3), 10u);
  EXPECT_EQ(cycle_count(3, 2), 3u);
  for (unsigned k = 3; k <= 10; ++k) {
    for (unsigned r = 3; r <= k; ++r) {
      EXPECT_EQ(cycle_count(k, r), choose(k, r) * factorial(r - 1) / 2);
    }
  }
}

TEST(EnumerateCycles, MatchesBruteForce) {
  for (std::size_t k = 2; k <= 7; ++k) {
    for (std::size_t r = 2; r <= k; ++r) {
      const auto cycles = enumerate_cycles(k, r);
      std::set<std::vector<std::size_t>> seen;
      for (const auto& c : cycles) {
        ASSERT_EQ(c.length(), r);
        EXPECT_EQ(c.vertices.front(), *std::min_element(c.vertices.begin(), c.vertices.end()));
        if (r >= 3) EXPECT_LT(c.vertices[1], c.vertices.back());
        seen.insert(c.vertices);
      }
      EXPECT_EQ(seen.size(), cycles.size()) << "duplicates at k=" << k << " r=" << r;
      EXPECT_EQ(seen, oracle::brute_force_cycles(k, r)) << "k=" << k << " r=" << r;
      EXPECT_EQ(cycles.size(), cycle_count(k, r));
    }
  }
}

TEST(EnumerateCycles, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_cycles(11, 3), PreconditionError);
  EXPECT_THROW(enumerate_cycles(4, 5), PreconditionError);
  EXPECT_THROW(enumerate_cycles(4, 1), PreconditionError);
}

TEST(EdgeIncidence, EveryEdgeEqually) {
  for (std::size_t k = 2; k <= 7; ++k) {
    const std::uint64_t edges = k * (k - 1) / 2;
    for (std::size_t r = 2; r <= k; ++r) {
      const auto inc = edge_incidence(k, r);
      ASSERT_EQ(inc.size(), edges);
      const std::uint64_t expected = cycle_count(k, r) * r / edges;
      EXPECT_EQ(cycle_count(k, r) * r % edges, 0u);
      for (auto v : inc) EXPECT_EQ(v, expected) << "k=" << k << " r=" << r;
    }
  }
}

TEST(CycleGain, Examples) {
  const auto ones = WeightedCompleteGraph::uniform(5, 1.0);
  for (const auto& c : enumerate_cycles(5, 4)) EXPECT_EQ(cycle_gain(ones, c), 1.0);

  const WeightedCompleteGraph g(3, {0.3, 0.5, 0.7});
  EXPECT_DOUBLE_EQ(cycle_gain(g, Cycle{{0, 1}}), 0.09);
  EXPECT_DOUBLE_EQ(cycle_gain(g, Cycle{{0, 1, 2}}), 0.3 * 0.7 * 0.5);

  // edges in pair order: 01 02 03 12 13 23
  const WeightedCompleteGraph k4(4, {2, 3, 5, 7, 11, 13});
  EXPECT_EQ(cycle_gain(k4, Cycle{{0, 1, 2, 3}}), 2.0 * 7 * 13 * 5);
}

TEST(VerifyLemma, ExamplesAndEquality) {
  const WeightedCompleteGraph g(4, {1, 0, 1, 1, 0, 1});
  // edges 01,12,23,03 are 1; 02 and 13 are 0, so only cycle 0-1-2-3 survives
  const auto check = verify_lemma(g, 4);
  EXPECT_NEAR(check.lhs, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(check.rhs, 4.0 / 9.0, 1e-15);
  EXPECT_TRUE(check.holds);

  for (std::size_t k = 2; k <= 7; ++k) {
    for (std::size_t r = 2; r <= k; ++r) {
      const auto eq = verify_lemma(WeightedCompleteGraph::uniform(k, 0.7), r);
      EXPECT_NEAR(eq.lhs, std::pow(0.7, static_cast<double>(r)), 1e-12 * eq.rhs);
      EXPECT_NEAR(eq.lhs, eq.rhs, 1e-12 * eq.rhs);
      EXPECT_TRUE(eq.holds);
    }
  }
}

TEST(VerifyLemma, HoldsOnRandomGraphs) {
  for (std::size_t k = 3; k <= 6; ++k) {
    for (std::size_t r = 2; r <= k; ++r) {
      for (std::uint64_t t = 0; t < 20; ++t) {
        const auto g = WeightedCompleteGraph::random(k, derive_seed(Seed{k * 100 + r}, t));
        EXPECT_TRUE(verify_lemma(g, r).holds);
      }
    }
  }
}

TEST(VerifyLemma, ScaleCovariance) {
  const auto g = WeightedCompleteGraph::random(6, Seed{77});
  const double lambda = 1.7;
  std::vector<double> scaled(g.weights().begin(), g.weights().end());
  for (double& w : scaled) w *= lambda;
  const WeightedCompleteGraph h(6, scaled);
  for (std::size_t r = 2; r <= 6; ++r) {
    const auto a = verify_lemma(g, r);
    const auto b = verify_lemma(h, r);
    const double factor = std::pow(lambda, static_cast<double>(r));
    EXPECT_NEAR(b.lhs, a.lhs * factor, 1e-12 * b.lhs);
    EXPECT_NEAR(b.rhs, a.rhs * factor, 1e-12 * b.rhs);
    EXPECT_EQ(a.holds, b.holds);
  }
}

TEST(VerifyLemma, TwoCyclesAreTheQuadraticMean) {
  const auto g = WeightedCompleteGraph::random(5, Seed{3});
  const auto check = verify_lemma(g, 2);
  EXPECT_NEAR(check.lhs, check.rhs, 1e-14);
}

TEST(WeightedCompleteGraph, Validation) {
  EXPECT_THROW(WeightedCompleteGraph(3, {1, 2}), PreconditionError);
  EXPECT_THROW(WeightedCompleteGraph(3, {1, -2, 3}), PreconditionError);
  EXPECT_EQ(WeightedCompleteGraph::edge_index(4, 2, 3), 5u);
  EXPECT_EQ(WeightedCompleteGraph::edge_index(4, 3, 0), 2u);
}

TEST(VerifyFacts, FourVerticesFourCycles) {
  const auto f = verify_facts(4, 4);
  EXPECT_EQ(f.cycles, 3u);
  EXPECT_EQ(f.edges, 6u);
  EXPECT_EQ(f.incidence, 2u);
  EXPECT_EQ(f.monomials, 72u);
  EXPECT_EQ(f.monomials_closed, 72u);
  EXPECT_EQ(f.degree, 48u);
  EXPECT_EQ(f.degree_closed, 48u);
  EXPECT_EQ(f.group_size, 24u);
  EXPECT_EQ(f.group_size_closed, 24u);
  EXPECT_NEAR(f.log_product, f.log_product_closed, 1e-9 * std::fabs(f.log_product_closed));
  EXPECT_TRUE(f.degrees_uniform);
  EXPECT_TRUE(f.holds);
}

TEST(VerifyFacts, PairsWithTheTwoCycleConvention) {
  // N = C(4,2) = 6 two-cycles, Nr/n = 2, so 2 * 6 = 12 monomials, group size 2
  const auto f = verify_facts(4, 2);
  EXPECT_EQ(f.cycles, 6u);
  EXPECT_EQ(f.monomials, 12u);
  EXPECT_EQ(f.monomials_closed, 12u);
  EXPECT_EQ(f.group_size, 2u);
  EXPECT_EQ(f.group_size_closed, 2u);
  EXPECT_TRUE(f.holds);
}

TEST(VerifyFacts, AllEvenCasesHold) {
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::size_t r = 2; r <= k; r += 2) EXPECT_TRUE(verify_facts(k, r).holds) << k << "," << r;
  }
  EXPECT_THROW(verify_facts(5, 3), PreconditionError);
  EXPECT_THROW(verify_facts(7, 4), PreconditionError);
}

}  // namespace
}  // namespace distid
