#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "steiner/errors.hpp"
#include "steiner/feasibility.hpp"
#include "steiner/invariants.hpp"
#include "steiner/porism.hpp"

using namespace steiner;

namespace {

struct OracleParents {
  double R, r, d;
};

// Schoolbook solution of the parent-bend quadratic in long double.
OracleParents oracle_parents(const RadiusQuadruple& radii) {
  long double I1 = 0, I2 = 0;
  for (double u : radii) {
    I1 += 1.0L / u;
    I2 += 1.0L / (u * (long double)u);
  }
  const long double qa = 16, qb = -8 * I1, qc = 8 * I2 - 3 * I1 * I1;
  const long double s = std::sqrt(qb * qb - 4 * qa * qc);
  const long double hi = (-qb + s) / (2 * qa), lo = (-qb - s) / (2 * qa);
  const long double r = 1 / hi, R = -1 / lo;
  return {double(R), double(r), double(std::sqrt(std::max(0.0L, R * R - 6 * R * r + r * r)))};
}

}  // namespace

TEST(ActualMoments, Examples) {
  const ActualMoments m = actual_moments({1, 2, 3, 4});
  EXPECT_NEAR(m.I1, 25.0 / 12.0, 1e-15);
  EXPECT_NEAR(m.I2, 205.0 / 144.0, 1e-15);
  EXPECT_NEAR(m.I3, 2035.0 / 1728.0, 1e-15);
  EXPECT_THROW(actual_moments({1, 0, 3, 4}), InvalidInput);
  EXPECT_THROW(actual_moments({1, -2, 3, 4}), InvalidInput);
  EXPECT_THROW(actual_moments({1, NAN, 3, 4}), InvalidInput);
}

TEST(VirtualGauge, SquareGaugeIsRecovered) {
  const VirtualGaugeResult res = virtual_gauge(5.0 / 3.0, 17.0 / 24.0);
  ASSERT_TRUE(res.gauge);
  EXPECT_NEAR(res.gauge->R, 6.0, 1e-12);
  EXPECT_NEAR(res.gauge->r, 1.0, 1e-12);
  EXPECT_NEAR(res.gauge->d, 1.0, 1e-12);
  EXPECT_NEAR(res.gauge->a, 1.0, 1e-12);
  EXPECT_NEAR(res.gauge->A, -1.0 / 6.0, 1e-12);
}

TEST(VirtualGauge, Example2MatchesOracle) {
  const ActualMoments m = actual_moments({1, 2, 3, 4});
  const VirtualGaugeResult res = virtual_gauge(m.I1, m.I2);
  ASSERT_TRUE(res.gauge);
  const OracleParents want = oracle_parents({1, 2, 3, 4});
  EXPECT_NEAR(res.gauge->R, want.R, 1e-12 * want.R);
  EXPECT_NEAR(res.gauge->r, want.r, 1e-12);
  EXPECT_NEAR(res.gauge->d, want.d, 1e-12 * want.R);
  EXPECT_NEAR(res.gauge->R, 11.096324751774715, 1e-12);
  EXPECT_NEAR(res.gauge->r, 0.8835587943279035, 1e-12);
  EXPECT_NEAR(res.gauge->d, 8.067438702896276, 1e-11);
}

TEST(VirtualGauge, EqualRadiiGiveConcentricParents) {
  const VirtualGaugeResult res = virtual_gauge(4.0, 4.0);
  ASSERT_TRUE(res.gauge);
  EXPECT_EQ(res.gauge->d, 0.0);
  EXPECT_NEAR(res.gauge->R / res.gauge->r, 3.0 + 2.0 * std::sqrt(2.0), 1e-12);
}

TEST(VirtualGauge, RejectsComplexAndSameSignRoots) {
  // I1^2 < 2 I2: a single dominant bend.
  const VirtualGaugeResult complex_roots = virtual_gauge(1.0, 1.0);
  EXPECT_FALSE(complex_roots.gauge);
  EXPECT_FALSE(complex_roots.roots);
  EXPECT_FALSE(complex_roots.reason.empty());

  // I1^2 = 2 I2 exactly with 3 I1^2 > 8 I2 forces both roots positive.
  const VirtualGaugeResult same_sign = virtual_gauge(2.0, 2.0);
  EXPECT_FALSE(same_sign.gauge);
  ASSERT_TRUE(same_sign.roots);
  EXPECT_GT((*same_sign.roots)[1], 0.0);
}

TEST(VirtualGauge, InvertsClosedFormMoments) {
  std::mt19937_64 rng(83);
  for (int i = 0; i < 50; ++i) {
    const Gauge g = oracle::random_gauge(rng, 4);
    const VirtualGaugeResult res = virtual_gauge(closed_form_I(4, 1, g), closed_form_I(4, 2, g));
    ASSERT_TRUE(res.gauge);
    EXPECT_NEAR(res.gauge->R, g.R, 1e-9 * g.R);
    EXPECT_NEAR(res.gauge->r, g.r, 1e-9);
    EXPECT_NEAR(res.gauge->d, g.d, 1e-6 * g.R);
  }
}

TEST(Feasibility, Example2IsInfeasible) {
  for (FeasibilityMode mode : {FeasibilityMode::Paper, FeasibilityMode::Constructive}) {
    const FeasibilityReport rep = feasibility_check({1, 2, 3, 4}, mode);
    EXPECT_FALSE(rep.feasible);
    EXPECT_NEAR(rep.relation_residual, 1155.0 / 13824.0, 1e-12);
    EXPECT_FALSE(rep.relation_ok);
    ASSERT_TRUE(rep.range_check);
    EXPECT_FALSE((*rep.range_check)[0]);
    EXPECT_TRUE((*rep.range_check)[1]);
    EXPECT_TRUE((*rep.range_check)[2]);
    EXPECT_TRUE((*rep.range_check)[3]);
    EXPECT_EQ(rep.reason, "radius outside the virtual poristic range");
    EXPECT_EQ(rep.adjacency_check.has_value(), mode == FeasibilityMode::Constructive);
  }
}

TEST(Feasibility, SquareChainIsFeasible) {
  for (FeasibilityMode mode : {FeasibilityMode::Paper, FeasibilityMode::Constructive}) {
    const FeasibilityReport rep = feasibility_check({2, 2.4, 3, 2.4}, mode);
    EXPECT_TRUE(rep.feasible) << rep.reason;
    EXPECT_TRUE(rep.reason.empty());
  }
}

TEST(Feasibility, UnitRadiiAreFeasible) {
  const FeasibilityReport rep = feasibility_check({1, 1, 1, 1}, FeasibilityMode::Constructive);
  EXPECT_TRUE(rep.feasible) << rep.reason;
  ASSERT_TRUE(rep.virtual_parents.gauge);
  EXPECT_EQ(rep.virtual_parents.gauge->d, 0.0);
}

TEST(Feasibility, OrderingOnlyMattersInConstructiveMode) {
  // The two largest circles of the (6,1,1) chain placed next to each other.
  const RadiusQuadruple swapped{2, 3, 2.4, 2.4};
  EXPECT_TRUE(feasibility_check(swapped, FeasibilityMode::Paper).feasible);
  const FeasibilityReport rep = feasibility_check(swapped, FeasibilityMode::Constructive);
  EXPECT_FALSE(rep.feasible);
  ASSERT_TRUE(rep.adjacency_check);
  for (bool ok : *rep.adjacency_check) EXPECT_FALSE(ok);
  EXPECT_TRUE(rep.relation_ok);
}

TEST(Feasibility, PaperModeIgnoresPermutations) {
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> dist(0.5, 5.0);
  for (int i = 0; i < 30; ++i) {
    RadiusQuadruple radii{dist(rng), dist(rng), dist(rng), dist(rng)};
    const bool base = feasibility_check(radii).feasible;
    std::sort(radii.begin(), radii.end());
    do {
      EXPECT_EQ(feasibility_check(radii).feasible, base);
    } while (std::next_permutation(radii.begin(), radii.end()));
  }
}

TEST(Feasibility, RelationFailureImpliesInfeasible) {
  std::mt19937_64 rng(97);
  std::uniform_real_distribution<double> dist(0.2, 8.0);
  for (int i = 0; i < 200; ++i) {
    const RadiusQuadruple radii{dist(rng), dist(rng), dist(rng), dist(rng)};
    for (FeasibilityMode mode : {FeasibilityMode::Paper, FeasibilityMode::Constructive}) {
      const FeasibilityReport rep = feasibility_check(radii, mode);
      if (!rep.relation_ok) EXPECT_FALSE(rep.feasible);
      if (rep.feasible) EXPECT_TRUE(rep.relation_ok);
    }
  }
}

TEST(Feasibility, GeneratedChainsRoundTrip) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 50; ++i) {
    const Gauge g = oracle::random_gauge(rng, 4);
    const SteinerChain chain = chain_at_phase(g, oracle::random_phase(rng, 4));
    RadiusQuadruple radii{};
    for (std::size_t k = 0; k < 4; ++k) radii[k] = chain.circles[k].radius;
    for (FeasibilityMode mode : {FeasibilityMode::Paper, FeasibilityMode::Constructive}) {
      const FeasibilityReport rep = feasibility_check(radii, mode);
      EXPECT_TRUE(rep.feasible) << rep.reason << " R=" << g.R;
      ASSERT_TRUE(rep.virtual_parents.gauge);
      EXPECT_NEAR(rep.virtual_parents.gauge->R, g.R, 1e-6 * g.R);
      EXPECT_NEAR(rep.virtual_parents.gauge->r, g.r, 1e-6);
      EXPECT_NEAR(rep.virtual_parents.gauge->d, g.d, 1e-6 * g.R);
    }
  }
}

TEST(Feasibility, InvalidRadiiThrow) {
  EXPECT_THROW(feasibility_check({1, 2, 0, 4}), InvalidInput);
  EXPECT_THROW(feasibility_check({1, 2, INFINITY, 4}), InvalidInput);
}

TEST(Feasibility, ModeNames) {
  EXPECT_EQ(to_string(FeasibilityMode::Paper), "paper");
  EXPECT_EQ(to_string(FeasibilityMode::Constructive), "constructive");
}
