// Copyright 2026 The bea Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bea/verify.hpp"

namespace bea {
namespace {

constexpr double kTs = 2.0 * std::numbers::sqrt2;

TEST(RegionContainment, RandomSamplesStayInside) {
  const VerificationReport r = mc_region_containment(20000, 1);
  EXPECT_EQ(r.samples, 20000u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.failures.empty());
  EXPECT_GE(r.worst_margin, -1e-9);
}

TEST(RegionContainment, PureStatesTouchTheBoundary) {
  const VerificationReport r = mc_region_containment(5000, 2, RankMix::pure_only());
  EXPECT_EQ(r.violations, 0u);
  EXPECT_NEAR(r.worst_margin, 0.0, 1e-9);
}

TEST(RegionContainment, EmptyRunIsVacuous) {
  const VerificationReport r = mc_region_containment(0, 3);
  EXPECT_EQ(r.samples, 0u);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(std::isinf(r.worst_margin));
}

TEST(RegionContainment, DeterministicAcrossThreadCounts) {
  const VerificationReport a = mc_region_containment(3000, 77, RankMix::uniform(), 1);
  const VerificationReport b = mc_region_containment(3000, 77, RankMix::uniform(), 4);
  const VerificationReport c = mc_region_containment(3000, 77, RankMix::uniform(), 1);
  EXPECT_EQ(a.worst_margin, b.worst_margin);
  EXPECT_EQ(a.worst_margin, c.worst_margin);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_NE(a.worst_margin, mc_region_containment(3000, 78).worst_margin);
}

TEST(RankMix, DrawsOnlyWeightedRanks) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) EXPECT_EQ(RankMix::pure_only().draw(rng), 1);
  RankMix m{{0.0, 0.0, 1.0, 1.0}};
  for (int t = 0; t < 1000; ++t) EXPECT_GE(m.draw(rng), 3);
}

TEST(Attainability, LinearTotalGridFullyReached) {
  const VerificationReport r = attainability_sweep(RegionId::LinearTotal, 50);
  EXPECT_GT(r.samples, 1000u);
  EXPECT_EQ(r.violations, 0u);
}

TEST(Attainability, VonNeumannRegionsGridFullyReached) {
  for (RegionId region : {RegionId::VnTotal, RegionId::VnCondSum}) {
    const VerificationReport r = attainability_sweep(region, 50, 4);
    EXPECT_GT(r.samples, 1000u) << region_name(region);
    EXPECT_EQ(r.violations, 0u) << region_name(region);
  }
}

TEST(Attainability, EveryRegionOnCoarseGrid) {
  for (RegionId region : kAllRegions) {
    const VerificationReport r = attainability_sweep(region, 20, 2);
    EXPECT_GT(r.samples, 100u) << region_name(region);
    EXPECT_EQ(r.violations, 0u) << region_name(region);
  }
}

TEST(Attainability, InvalidTargetIsNotAFailure) {
  const Attainment above = attain_point(RegionId::LinearTotal, 0.0, 0.9);
  EXPECT_EQ(above.status, AttainStatus::InvalidTarget);
  EXPECT_EQ(attain_point(RegionId::VnTotal, 3.0, 0.1).status, AttainStatus::InvalidTarget);
  EXPECT_EQ(attain_point(RegionId::LinearCondSum, 0.0, -1.5).status, AttainStatus::InvalidTarget);
}

TEST(Attainability, ReachedPointsCarryTheirState) {
  struct Case {
    RegionId region;
    double b, s;
  };
  for (const Case& c : {Case{RegionId::LinearTotal, 1.0, 0.6}, Case{RegionId::LinearTotal, -2.5, 0.1},
                        Case{RegionId::LinearCondSum, 0.5, -0.5},
                        Case{RegionId::VnTotal, 2.0, 0.4}, Case{RegionId::VnTotal, -1.0, 1.0},
                        Case{RegionId::VnCondSum, 2.1, -0.9}}) {
    const Attainment a = attain_point(c.region, c.b, c.s);
    ASSERT_EQ(a.status, AttainStatus::Reached) << region_name(c.region) << " " << c.b;
    ASSERT_TRUE(a.state && a.op);
    EXPECT_NEAR(beta(*a.state, *a.op), c.b, 1e-4);
    EXPECT_LE(a.error, kAttainTolerance);
  }
}

TEST(Attainability, GridTooSmall) {
  EXPECT_THROW(attainability_sweep(RegionId::VnTotal, 1), DomainError);
}

TEST(Extremality, ThermalStateIsLocalMaximum) {
  const BellOperator b = build_bell(BellSettings::canonical());
  const VerificationReport r = gibbs_extremality_test(b, 0.3, 1000, 1e-4, 5);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_GT(r.samples, 900u);
  EXPECT_EQ(r.detail("lambda"), 0.3);
  EXPECT_GE(r.worst_margin, 0.0);
}

TEST(Extremality, NullPerturbationIsExact) {
  const BellOperator b = build_bell(BellSettings::canonical());
  const DensityMatrix rho = gibbs_state(0.3, b).first;
  const auto gain = perturbation_gain(rho, Matrix4{});
  ASSERT_TRUE(gain);
  EXPECT_EQ(gain->s12, 0.0);
  EXPECT_EQ(gain->cond_sum, 0.0);
}

TEST(Extremality, PerturbationLeavingStateSpace) {
  const DensityMatrix pure = singlet();
  EXPECT_FALSE(perturbation_gain(pure, Matrix4::diagonal({0.1, 0.1, 0.1, -0.3})).has_value());
}

TEST(Extremality, ProjectionRemovesConstraints) {
  Rng rng(6);
  for (int t = 0; t < 500; ++t) {
    const BellOperator b = build_bell(BellSettings::random(rng));
    const Matrix4 d = project_constraints(random_hermitian(rng), b);
    EXPECT_LE(std::abs(d.trace()), 1e-12);
    EXPECT_LE(std::abs(trace_of_product(b.matrix(), d)), 1e-12);
    EXPECT_LE(hermiticity_defect(d), 1e-12);
  }
}

TEST(Extremality, EpsDomain) {
  const BellOperator b = build_bell(BellSettings::canonical());
  EXPECT_THROW(gibbs_extremality_test(b, 0.3, 10, 0.01, 1), DomainError);
  EXPECT_THROW(gibbs_extremality_test(b, 0.3, 10, 0.0, 1), DomainError);
}

TEST(SecondVariation, MatchesClosedForm) {
  for (const auto& [lambda, xi1] : extremality_grid()) {
    const SecondVariation sv = second_variation_check(settings_for_xi1(xi1), lambda, 1e-3, 9);
    EXPECT_LE(sv.relative_error(), 0.05) << lambda << " " << xi1;
    EXPECT_LE(sv.cond_relative_error(), 0.05) << lambda << " " << xi1;
    EXPECT_LT(sv.predicted, 0.0);
  }
}

TEST(Implications, SeparableStatesSatisfyEntropyInequality) {
  const VerificationReport r = separable_entropy_test(10000, 1);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.samples, 10000u);
  EXPECT_GE(r.worst_margin, -1e-12);
}

TEST(Implications, LinearCriteriaForbidViolation) {
  for (LinearCriterion c : {LinearCriterion::EntropyAtLeastHalf, LinearCriterion::CondSumNonNegative}) {
    const VerificationReport r = criterion_beta_test(c, 200, 2, 2);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_GT(r.samples, 190u);
  }
}

TEST(Implications, VnCondSumWitness) {
  const VerificationReport r = vn_cond_witness(0);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(*r.detail("witnessBeta"), 2.1);
  EXPECT_GE(*r.detail("witnessCondSum"), 0.0);
  EXPECT_LE(*r.detail("witnessBeta"), kTs);
}

TEST(Implications, ChainWithZeroSamples) {
  const VerificationReport r = implication_chain_test(0, 0);
  EXPECT_EQ(r.samples, 0u);
  EXPECT_TRUE(r.passed());
}

TEST(Implications, ChainIsDeterministic) {
  const VerificationReport a = implication_chain_test(50, 3, 1);
  const VerificationReport b = implication_chain_test(50, 3, 3);
  EXPECT_EQ(a.samples, b.samples);
  EXPECT_EQ(a.worst_margin, b.worst_margin);
  EXPECT_EQ(a.details, b.details);
}

}  // namespace
}  // namespace bea
