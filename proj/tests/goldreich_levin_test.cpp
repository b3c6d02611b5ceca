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
#include "f2ap/goldreich_levin.hpp"
#include "f2ap/oracle.hpp"

namespace f2ap {
namespace {

RealTable table_of(const PlantedSpectral& f) {
  RealTable t(f.n);
  for (std::uint64_t x = 0; x < t.size(); ++x) t[x] = f(x);
  return t;
}

TEST(GoldreichLevin, SingleCharacter) {
  const std::uint64_t s = 0x2b5;
  auto chi = [s](std::uint64_t x) { return parity(x & s) ? -1 : 1; };
  const CoefficientList out = goldreich_levin(chi, 10, 0.5, 0.1, {3, 1, 0});
  ASSERT_EQ(out.entries.size(), 1u);
  EXPECT_EQ(out.entries[0].alpha.bits(), s);
  EXPECT_LE(std::abs(out.entries[0].c - 1), 0.25);
  EXPECT_EQ(out.k_max, 16u);
}

TEST(GoldreichLevin, ConstantFunction) {
  auto one = [](std::uint64_t) { return 1; };
  const CoefficientList out = goldreich_levin(one, 9, 0.5, 0.1);
  ASSERT_EQ(out.entries.size(), 1u);
  EXPECT_TRUE(out.entries[0].alpha.is_zero());
  EXPECT_NEAR(out.entries[0].c, 1.0, 1e-12);
}

TEST(GoldreichLevin, WideDimensionUsesSparseHistograms) {
  const int n = 30;
  const std::uint64_t s = 0x2345abcdULL & low_mask(n);
  auto chi = [s](std::uint64_t x) { return parity(x & s) ? -1 : 1; };
  const CoefficientList out = goldreich_levin(chi, n, 0.6, 0.1, {5, 1, 0});
  ASSERT_EQ(out.entries.size(), 1u);
  EXPECT_EQ(out.entries[0].alpha.bits(), s);
}

TEST(GoldreichLevin, PlantedAgainstExactTransform) {
  const int n = 12;
  const double nu = 0.2;
  int completeness_failures = 0, soundness_failures = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const PlantedSpectral f = planted_spectral(n, random_characters(n, 4, seed), 0.5, seed);
    const RealTable fh = oracle::naive_wht(table_of(f));
    const CoefficientList out = goldreich_levin(f, n, nu, 0.1, {seed, 1, 0});
    EXPECT_LE(out.entries.size(), out.k_max);
    EXPECT_LE(static_cast<double>(out.entries.size()), 4 / (nu * nu));
    for (std::size_t i = 1; i < out.entries.size(); ++i) {
      EXPECT_LT(out.entries[i - 1].alpha.bits(), out.entries[i].alpha.bits());
    }
    bool complete = true;
    for (std::uint64_t a = 0; a < fh.size(); ++a) {
      if (std::abs(fh[a]) < nu) continue;
      bool found = false;
      for (const auto& e : out.entries) found = found || e.alpha.bits() == a;
      complete = complete && found;
    }
    bool sound = true;
    for (const auto& e : out.entries) sound = sound && std::abs(e.c - fh[e.alpha.bits()]) <= nu / 2;
    completeness_failures += complete ? 0 : 1;
    soundness_failures += sound ? 0 : 1;
  }
  EXPECT_LE(completeness_failures, 1);
  EXPECT_LE(soundness_failures, 1);
}

TEST(GoldreichLevin, DeterministicPerSeed) {
  const PlantedSpectral f = planted_spectral(10, random_characters(10, 3, 1), 0.5, 1);
  const CoefficientList a = goldreich_levin(f, 10, 0.3, 0.1, {7, 1, 0});
  const CoefficientList b = goldreich_levin(f, 10, 0.3, 0.1, {7, 1, 0});
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].alpha, b.entries[i].alpha);
    EXPECT_EQ(a.entries[i].c, b.entries[i].c);
  }
  EXPECT_EQ(a.queries, b.queries);
}

TEST(GoldreichLevin, SampleCapIsReported) {
  auto one = [](std::uint64_t) { return 1; };
  const CoefficientList out = goldreich_levin(one, 8, 0.2, 0.1, {0, 1, 1000});
  EXPECT_TRUE(out.capped);
  EXPECT_EQ(out.samples_per_depth, 1000);
}

TEST(GoldreichLevin, RejectsBadArguments) {
  auto one = [](std::uint64_t) { return 1; };
  EXPECT_THROW(goldreich_levin(one, 8, 0, 0.1), std::invalid_argument);
  EXPECT_THROW(goldreich_levin(one, 8, 1.5, 0.1), std::invalid_argument);
  EXPECT_THROW(goldreich_levin(one, 8, 0.5, 1), std::invalid_argument);
}

TEST(EstimateCoefficient, Characters) {
  const std::uint64_t s = 0x1d;
  auto chi = [s](std::uint64_t x) { return parity(x & s) ? -1 : 1; };
  EXPECT_EQ(estimate_coefficient(chi, 8, s, 0.1, 0.01, 1), 1.0);
  EXPECT_LE(std::abs(estimate_coefficient(chi, 8, 0x3, 0.1, 0.01, 1)), 0.1);
}

TEST(EstimateCoefficient, WithinGammaOfExactTransform) {
  const int n = 12;
  const PointSet a = random_density_set(n, 0.3, 4);
  auto f = [&a](std::uint64_t x) { return a.contains(x) ? -1 : 1; };
  RealTable t(n);
  for (std::uint64_t x = 0; x < t.size(); ++x) t[x] = f(x);
  const RealTable fh = wht(t);
  const double gamma = 0.1, fail = 0.05;
  int misses = 0;
  const int trials = 2000;
  for (int k = 0; k < trials; ++k) {
    const std::uint64_t alpha = static_cast<std::uint64_t>(k) % t.size();
    if (std::abs(estimate_coefficient(f, n, alpha, gamma, fail, 1000 + k) - fh[alpha]) > gamma) ++misses;
  }
  EXPECT_LE(static_cast<double>(misses) / trials, fail);
}

}  // namespace
}  // namespace f2ap
