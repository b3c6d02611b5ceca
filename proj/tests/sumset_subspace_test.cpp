// Copyright 2026 The f2ap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "f2ap/generators.hpp"
#include "f2ap/oracle.hpp"
#include "f2ap/random.hpp"
#include "f2ap/sumset_subspace.hpp"

namespace f2ap {
namespace {

bool coset_inside(const AffineSubspace& c, const PointSet& s) {
  bool ok = true;
  for_each_point(c, [&](std::uint64_t x) { ok = ok && s.contains(x); });
  return ok;
}

TEST(Parabola, Examples) {
  EXPECT_TRUE(parabola_monotone(1, 0, 2, 3));
  EXPECT_TRUE(parabola_monotone(2.5, 1, 4, 4));
  EXPECT_THROW(parabola_monotone(1, 0, 0.5, 3), std::invalid_argument);  // f(0.5) < 0
  EXPECT_THROW(parabola_monotone(0, 0, 2, 3), std::invalid_argument);
  EXPECT_THROW(parabola_monotone(1, -1, 2, 3), std::invalid_argument);
  EXPECT_THROW(parabola_monotone(1, 0, 3, 2), std::invalid_argument);
}

TEST(Parabola, FuzzNeverFalse) {
  Rng rng(1, StreamId::kMonteCarlo);
  int checked = 0;
  while (checked < 100000) {
    const double b = 10 * rng.uniform() + 1e-9;
    const double c = 10 * rng.uniform();
    const double t1 = 20 * rng.uniform();
    const double t2 = t1 + 20 * rng.uniform();
    if (!(t1 * t1 - b * t1 - c > 0)) continue;
    ASSERT_TRUE(parabola_monotone(b, c, t1, t2)) << b << " " << c << " " << t1 << " " << t2;
    ++checked;
  }
}

TEST(DenseSlice, MatchesDirectThreshold) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PointSet a = random_density_set(9, 0.3, seed);
    const PointSet s = dense_slice(RhoTable(a, a));
    for (std::uint64_t y = 0; y < 512; ++y) {
      ASSERT_EQ(s.contains(y), oracle::naive_rho(a, a, y) >= a.density() / 2 - 1e-15) << y;
    }
    EXPECT_GE(2 * s.size(), a.size());
  }
}

TEST(RefinedPeriodSet, SubspaceGivesItself) {
  const PointSet v = subspace_set(7, 3, 1);
  const PeriodSet p = refined_period_set(v, v, 2, {0.3, 0.3, false});
  EXPECT_TRUE(p.spec.refined);
  EXPECT_EQ(p.X, v);
  const AlmostPeriodReport rep = verify_property3(p, RhoTable(v, v), v);
  EXPECT_EQ(rep.max_fraction, 0.0);
}

TEST(RefinedPeriodSet, OneSidedBoundOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PointSet a = random_density_set(8, 0.25, 10 + seed);
    const PointSet b = sumset(a, a);
    const PeriodSet p = refined_period_set(a, b, 2, {0.75, 0.25, true});
    const RhoTable r(a, b);
    const PointSet s = sumset(a, b);
    EXPECT_TRUE(verify_property3(p, r, s).within_stated);
    const IteratedReport it = verify_iterated(p, r, 3, s, {500, seed, 0});
    EXPECT_TRUE(it.summary.within_stated);
  }
}

TEST(RefinedSubspace, SubspaceHasNoFailures) {
  const Subspace w = random_subspace(8, 2, 3);
  const RefinedReport rep = refined_subspace(PointSet::from_subspace(w), ParamSchedule::desk_sumset());
  EXPECT_EQ(rep.V, w);
  EXPECT_EQ(rep.max_failure, 0.0);
  EXPECT_EQ(rep.per_v_failure.size(), std::size_t{1} << w.dim());
}

TEST(RefinedSubspace, DenseSetWithinStatedBound) {
  const PointSet a = random_density_set(10, 0.5, 4);
  const RefinedReport rep = refined_subspace(a, ParamSchedule::desk_sumset());
  EXPECT_TRUE(rep.mean_is_alpha);
  EXPECT_TRUE(rep.slice_bound_holds);
  EXPECT_LE(rep.max_failure, rep.bound);
  const ParamSchedule s = ParamSchedule::desk_sumset();
  const double rho = 0.3;
  EXPECT_DOUBLE_EQ(rep.terms.at(rho),
                   4 * s.epsilon * s.ell * std::sqrt(rho) + 2 * s.eta + std::pow(2.0, -s.ell));
  for (std::size_t i = 1; i < rep.per_v_failure.size(); ++i) {
    EXPECT_LT(rep.per_v_failure[i - 1].first, rep.per_v_failure[i].first);
  }
}

TEST(FindSumsetSubspace, SubspaceInput) {
  const Subspace w = random_subspace(9, 3, 5);
  const RefinedReport rep = find_sumset_subspace(PointSet::from_subspace(w), ParamSchedule::desk_sumset());
  ASSERT_TRUE(rep.shift.has_value());
  EXPECT_TRUE(rep.shift->is_zero());
  EXPECT_EQ(rep.V, w);
  EXPECT_TRUE(rep.containment_verified);
}

TEST(FindSumsetSubspace, CosetUnionVerifiedByExactSumset) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PointSet a = coset_union_set(10, 3, 2, seed);
    const RefinedReport rep = find_sumset_subspace(a, ParamSchedule::desk_sumset());
    ASSERT_TRUE(rep.shift.has_value());
    EXPECT_TRUE(rep.containment_verified);
    EXPECT_TRUE(coset_inside(AffineSubspace(*rep.shift, rep.V), oracle::exact_sumset(a, 2)));
  }
}

TEST(FindSumsetSubspace, DenseRandomSetsContainment) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PointSet a = random_density_set(10, 0.5, 20 + seed);
    const RefinedReport rep = find_sumset_subspace(a, ParamSchedule::desk_sumset());
    if (!rep.shift) continue;
    EXPECT_TRUE(rep.containment_verified);
    EXPECT_TRUE(coset_inside(AffineSubspace(*rep.shift, rep.V), oracle::exact_sumset(a, 2)));
  }
}

TEST(GreedyBaseline, InsideSumset) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PointSet a = random_density_set(8, 0.3, 30 + seed);
    const AffineSubspace g = greedy_sumset_subspace(a);
    EXPECT_TRUE(coset_inside(g, oracle::exact_sumset(a, 2)));
    const AffineSubspace best = oracle::max_affine_subspace_in_set(oracle::exact_sumset(a, 2), 8);
    EXPECT_LE(g.direction().dim(), best.direction().dim());
  }
}

TEST(VarianceRegression, TracksBinomialDeviation) {
  std::vector<double> ps;
  for (int k = 1; k <= 6; ++k) ps.push_back(std::ldexp(1.0, -k));
  const int t = 64;
  const VarianceRegression reg = variance_regression(ps, 12, t, 4000, 1);
  ASSERT_EQ(reg.rms.size(), ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double expect = std::sqrt(ps[i] * (1 - ps[i]) / t);
    EXPECT_NEAR(reg.rms[i], expect, 0.08 * expect) << ps[i];
  }
  // sqrt(p (1 - p)) has log-log slope a little below 1/2 on this range.
  EXPECT_GT(reg.slope, 0.35);
  EXPECT_LT(reg.slope, 0.55);
  EXPECT_THROW(variance_regression({0.0}, 4, 4, 10, 1), std::invalid_argument);
}

}  // namespace
}  // namespace f2ap
