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

#include "f2ap/fourier.hpp"
#include "f2ap/generators.hpp"
#include "f2ap/oracle.hpp"
#include "f2ap/random.hpp"

namespace f2ap {
namespace {

RealTable random_table(int n, std::uint64_t seed) {
  RealTable t(n);
  Rng rng(seed, StreamId::kMonteCarlo);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = 2 * rng.uniform() - 1;
  return t;
}

TEST(Wht, ConstantAndCharacter) {
  RealTable one(6);
  for (std::size_t i = 0; i < one.size(); ++i) one[i] = 1;
  const RealTable h = wht(one);
  for (std::size_t t = 0; t < h.size(); ++t) EXPECT_NEAR(h[t], t == 0 ? 1.0 : 0.0, 1e-15);

  const std::uint64_t s = 0b101101;
  RealTable chi(6);
  for (std::size_t x = 0; x < chi.size(); ++x) chi[x] = parity(x & s) ? -1 : 1;
  const RealTable ch = wht(chi);
  for (std::size_t t = 0; t < ch.size(); ++t) EXPECT_NEAR(ch[t], t == s ? 1.0 : 0.0, 1e-15);
}

TEST(Wht, MatchesNaiveSum) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RealTable f = random_table(10, seed);
    EXPECT_LT(wht(f).max_abs_diff(oracle::naive_wht(f)), 1e-12);
  }
}

TEST(Wht, InverseOfDeltaIsConstant) {
  RealTable d(7);
  d[0] = 1;
  const RealTable f = inverse_wht(d);
  for (std::size_t x = 0; x < f.size(); ++x) EXPECT_EQ(f[x], 1.0);
}

TEST(Wht, RoundTripAndParseval) {
  for (int n : {1, 5, 12, 16}) {
    const RealTable f = random_table(n, 100 + n);
    const RealTable fh = wht(f);
    EXPECT_LT(inverse_wht(fh).max_abs_diff(f), 1e-12) << n;
    double phys = 0, freq = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      phys += f[i] * f[i];
      freq += fh[i] * fh[i];
    }
    EXPECT_NEAR(phys / static_cast<double>(f.size()), freq, 1e-12) << n;
  }
}

TEST(Convolve, IdentityMeasure) {
  const RealTable f = random_table(8, 7);
  RealTable delta(8);
  delta[0] = static_cast<double>(delta.size());
  EXPECT_LT(convolve(f, delta).max_abs_diff(f), 1e-12);
}

TEST(Convolve, SubspaceSelfConvolution) {
  for (int codim = 0; codim <= 4; ++codim) {
    const Subspace v = random_subspace(8, codim, 30 + codim);
    const RealTable one = RealTable::indicator(PointSet::from_subspace(v));
    const RealTable c = convolve(one, one);
    for (std::uint64_t x = 0; x < c.size(); ++x) {
      EXPECT_NEAR(c[x], v.contains_bits(x) ? std::ldexp(1.0, -codim) : 0.0, 1e-14);
    }
  }
}

TEST(Convolve, MatchesNaiveAndConvolutionTheorem) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const RealTable f = random_table(10, 2 * seed);
    const RealTable g = random_table(10, 2 * seed + 1);
    const RealTable c = convolve(f, g);
    EXPECT_LT(c.max_abs_diff(oracle::naive_convolve(f, g)), 1e-12);
    const RealTable lhs = wht(c);
    const RealTable rhs = pointwise_product(wht(f), wht(g));
    EXPECT_LT(lhs.max_abs_diff(rhs), 1e-12);
  }
}

TEST(Convolve, PositiveExactlyOnSumset) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointSet a = random_density_set(10, 0.01, seed);
    if (a.empty()) continue;
    const RealTable c = convolve(RealTable::indicator(a), RealTable::indicator(a));
    const PointSet two = oracle::exact_sumset(a, 2);
    for (std::uint64_t x = 0; x < c.size(); ++x) {
      ASSERT_EQ(c[x] > kPositivityTolerance, two.contains(x)) << x;
    }
  }
}

TEST(Convolve, PowerMatchesRepeatedConvolution) {
  const RealTable f = RealTable::indicator(random_density_set(9, 0.2, 4));
  const RealTable p = convolve_power(f, 4);
  const RealTable q = convolve(convolve(f, f), convolve(f, f));
  EXPECT_LT(p.max_abs_diff(q), 1e-12);
}

TEST(Convolve, DimensionMismatch) {
  EXPECT_THROW(convolve(RealTable(3), RealTable(4)), DimensionMismatch);
}

TEST(Spectrum, SubspaceSpectrumIsComplement) {
  for (int codim = 0; codim <= 4; ++codim) {
    const Subspace v = random_subspace(8, codim, 50 + codim);
    const PointSet a = PointSet::from_subspace(v);
    const Subspace perp = v.orthogonal_complement();
    for (double rho : {0.1, 0.5, 1.0}) {
      const auto s = spec_rho(a, rho);
      EXPECT_EQ(s.size(), std::size_t{1} << codim);
      for (const auto& t : s) EXPECT_TRUE(perp.contains(t));
    }
  }
}

TEST(Spectrum, ConstantFunction) {
  const auto s = spec_rho(PointSet::full(6), 0.5);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_TRUE(s[0].is_zero());
}

TEST(Spectrum, ParsevalSizeBound) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet a = random_density_set(10, 0.25, seed);
    for (double rho : {0.25, 0.5}) {
      EXPECT_LE(static_cast<double>(spec_rho(a, rho).size()), 1.0 / (rho * rho * a.density()) + 1e-9);
    }
  }
}

TEST(Spectrum, MatchesThresholdOnNaiveTransform) {
  const PointSet a = random_density_set(9, 0.3, 8);
  const RealTable f = RealTable::indicator(a);
  const RealTable fh = oracle::naive_wht(f);
  const auto s = spec_rho(f, 0.2);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t t = 0; t < fh.size(); ++t) {
    if (std::abs(fh[t]) >= 0.2 * a.density() - 1e-12) expect.push_back(t);
  }
  ASSERT_EQ(s.size(), expect.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i].bits(), expect[i]);
}

TEST(Chang, Examples) {
  const PointSet v = subspace_set(10, 3, 1);
  const ChangReport r = chang_check(v, 0.5);
  EXPECT_EQ(r.span_dim, 3);
  EXPECT_TRUE(r.holds);

  PointSet one(8);
  one.insert(0x2a);
  const ChangReport p = chang_check(one, 1.0);
  EXPECT_EQ(p.spectrum_size, 256u);
  EXPECT_EQ(p.span_dim, 8);
  EXPECT_TRUE(p.holds);
  EXPECT_THROW(chang_check(PointSet(4), 0.5), std::invalid_argument);
}

TEST(Chang, RandomSetsHold) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (double alpha : {0.5, 0.25, 0.125}) {
      const PointSet a = random_density_set(10, alpha, seed);
      for (double rho : {0.25, 0.5}) EXPECT_TRUE(chang_check(a, rho).holds);
    }
  }
}

TEST(Positivity, SmallestNonpositive) {
  RealTable t(4);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = 1;
  t[6] = 0;
  t[12] = 0;
  EXPECT_EQ(smallest_nonpositive(t, Subspace::full(4)), std::optional<std::uint64_t>(6));
  const std::vector<std::uint64_t> g{12, 1};
  EXPECT_EQ(smallest_nonpositive(t, Subspace::span_of_bits(4, g)), std::optional<std::uint64_t>(12));
  const std::vector<std::uint64_t> h{1, 2};
  EXPECT_FALSE(smallest_nonpositive(t, Subspace::span_of_bits(4, h)).has_value());
}

}  // namespace
}  // namespace f2ap
