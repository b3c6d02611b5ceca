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

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "f2ap/f2core.hpp"
#include "f2ap/generators.hpp"
#include "f2ap/point_set.hpp"
#include "f2ap/random.hpp"

namespace f2ap {
namespace {

// Span by repeated doubling, no elimination.
std::set<std::uint64_t> brute_span(const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> pts{0};
  for (std::uint64_t g : gens) {
    std::vector<std::uint64_t> add;
    for (std::uint64_t p : pts) add.push_back(p ^ g);
    pts.insert(add.begin(), add.end());
  }
  return pts;
}

bool brute_dot(std::uint64_t a, std::uint64_t b) {
  int p = 0;
  for (int i = 0; i < 64; ++i) p ^= static_cast<int>(((a >> i) & 1) & ((b >> i) & 1));
  return p != 0;
}

std::vector<std::uint64_t> random_gens(Rng& rng, int n, int count) {
  std::vector<std::uint64_t> g;
  for (int i = 0; i < count; ++i) g.push_back(rng.bits(n));
  return g;
}

TEST(BitVector, DotExamples) {
  const BitVector x(4, 0b1011), y(4, 0b1110);
  EXPECT_EQ(dot(x, y), 0);
  EXPECT_EQ(dot(BitVector::zero(4), y), 0);
  for (std::uint64_t v = 0; v < 16; ++v) EXPECT_EQ(dot(BitVector(4, v), BitVector(4, v)), std::popcount(v) % 2);
}

TEST(BitVector, RejectsBitsOutsideDimension) {
  EXPECT_THROW(BitVector(3, 0b1000), std::invalid_argument);
  EXPECT_THROW(BitVector(0, 0), std::invalid_argument);
  EXPECT_THROW(BitVector(64, 0), std::invalid_argument);
  EXPECT_THROW(BitVector(3, 1) + BitVector(4, 1), DimensionMismatch);
  EXPECT_THROW(dot(BitVector(3, 1), BitVector(4, 1)), DimensionMismatch);
}

TEST(BitVector, HexRoundTrip) {
  Rng rng(1, StreamId::kMonteCarlo);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.below(63));
    const BitVector v(n, rng.bits(n));
    EXPECT_EQ(BitVector::from_hex(n, v.to_hex()), v);
    EXPECT_EQ(BitVector::from_hex(n, "0x" + v.to_hex()), v);
  }
  EXPECT_EQ(BitVector::from_hex(8, "Ab").bits(), 0xabu);
  EXPECT_THROW(BitVector::from_hex(8, "xyz"), std::invalid_argument);
  EXPECT_THROW(BitVector::from_hex(8, ""), std::invalid_argument);
  EXPECT_THROW(BitVector::from_hex(4, "1f"), std::invalid_argument);
}

TEST(BitVector, AdditionIsSelfInverse) {
  Rng rng(2, StreamId::kMonteCarlo);
  for (int k = 0; k < 100; ++k) {
    const BitVector x(30, rng.bits(30));
    EXPECT_TRUE((x + x).is_zero());
  }
}

TEST(Echelon, Examples) {
  EXPECT_TRUE(echelonize_bits({}).empty());
  const std::vector<std::uint64_t> dup{0b101, 0b101};
  EXPECT_EQ(echelonize_bits(dup), std::vector<std::uint64_t>{0b101});
  const std::vector<std::uint64_t> three{0b011, 0b101, 0b110};
  EXPECT_EQ(echelonize_bits(three), (std::vector<std::uint64_t>{0b101, 0b011}));
}

TEST(Echelon, CanonicalFormProperties) {
  Rng rng(3, StreamId::kMonteCarlo);
  for (int k = 0; k < 300; ++k) {
    const int n = 1 + static_cast<int>(rng.below(20));
    const auto gens = random_gens(rng, n, static_cast<int>(rng.below(8)));
    const auto rref = echelonize_bits(gens);
    for (std::size_t i = 0; i < rref.size(); ++i) {
      ASSERT_NE(rref[i], 0u);
      const int p = top_bit(rref[i]);
      if (i > 0) {
        EXPECT_GT(top_bit(rref[i - 1]), p);
      }
      for (std::size_t j = 0; j < rref.size(); ++j) {
        if (j != i) {
          EXPECT_EQ((rref[j] >> p) & 1, 0u) << "pivot column not cleared";
        }
      }
    }
    // Canonical: any generating set of the same span gives the same rows.
    auto shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    for (std::size_t i = 1; i < shuffled.size(); ++i) shuffled[i] ^= shuffled[i - 1];
    EXPECT_EQ(echelonize_bits(shuffled), rref);
  }
}

TEST(Subspace, SpanMembershipMatchesExhaustiveSpan) {
  Rng rng(4, StreamId::kMonteCarlo);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const auto gens = random_gens(rng, n, static_cast<int>(rng.below(7)));
    const Subspace v = Subspace::span_of_bits(n, gens);
    const auto span = brute_span(gens);
    EXPECT_EQ(std::size_t{1} << v.dim(), span.size());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      ASSERT_EQ(v.contains_bits(x), span.count(x) == 1) << "n=" << n << " x=" << x;
    }
  }
}

TEST(Subspace, PerpMembershipMatchesDotProducts) {
  Rng rng(5, StreamId::kMonteCarlo);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const auto perp = random_gens(rng, n, static_cast<int>(rng.below(6)));
    const Subspace v = Subspace::from_perp_bits(n, perp);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      bool in = true;
      for (std::uint64_t w : perp) in = in && !brute_dot(w, x);
      ASSERT_EQ(v.contains_bits(x), in);
    }
  }
}

TEST(Subspace, ComplementExamples) {
  EXPECT_EQ(Subspace::full(5).orthogonal_complement(), Subspace::zero(5));
  EXPECT_EQ(Subspace::zero(5).orthogonal_complement(), Subspace::full(5));
  const std::vector<std::uint64_t> g{0b1100};
  const Subspace w = Subspace::span_of_bits(4, g).orthogonal_complement();
  EXPECT_EQ(w.dim(), 3);
  for (std::uint64_t b : w.basis_bits()) EXPECT_FALSE(brute_dot(b, 0b1100));
}

TEST(Subspace, ComplementIsInvolutionAndDimensionsAdd) {
  Rng rng(6, StreamId::kMonteCarlo);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(rng.below(40));
    const Subspace v = Subspace::span_of_bits(n, random_gens(rng, n, static_cast<int>(rng.below(10))));
    const Subspace c = orthogonal_complement(v);
    EXPECT_EQ(v.dim() + c.dim(), n);
    EXPECT_EQ(orthogonal_complement(c), v);
    for (std::uint64_t a : v.basis_bits()) {
      for (std::uint64_t b : c.basis_bits()) EXPECT_FALSE(brute_dot(a, b));
    }
  }
}

TEST(Subspace, EqualityIsStructural) {
  const std::vector<std::uint64_t> a{0b0011, 0b0101};
  const std::vector<std::uint64_t> b{0b0110, 0b0011};
  EXPECT_EQ(Subspace::span_of_bits(4, a), Subspace::span_of_bits(4, b));
  const std::vector<std::uint64_t> c{0b0110, 0b1000};
  EXPECT_NE(Subspace::span_of_bits(4, a), Subspace::span_of_bits(4, c));
}

TEST(Subspace, IntersectionAndInclusion) {
  Rng rng(7, StreamId::kMonteCarlo);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const Subspace u = Subspace::span_of_bits(n, random_gens(rng, n, 3));
    const Subspace w = Subspace::span_of_bits(n, random_gens(rng, n, 3));
    const Subspace i = u.intersect(w);
    EXPECT_TRUE(i.is_subspace_of(u));
    EXPECT_TRUE(i.is_subspace_of(w));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      EXPECT_EQ(i.contains_bits(x), u.contains_bits(x) && w.contains_bits(x));
    }
  }
}

TEST(Enumerate, LinearClosureAndCount) {
  EXPECT_EQ(enumerate(Subspace::zero(6)), std::vector<BitVector>{BitVector::zero(6)});
  Rng rng(8, StreamId::kMonteCarlo);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + static_cast<int>(rng.below(12));
    const Subspace v = Subspace::span_of_bits(n, random_gens(rng, n, static_cast<int>(rng.below(6))));
    const auto pts = enumerate(v);
    std::set<std::uint64_t> s;
    for (const auto& p : pts) s.insert(p.bits());
    EXPECT_EQ(s.size(), std::size_t{1} << v.dim());
    for (std::uint64_t a : s) {
      EXPECT_TRUE(v.contains_bits(a));
      for (std::uint64_t b : s) ASSERT_EQ(s.count(a ^ b), 1u);
    }
  }
}

TEST(Enumerate, AffineMembership) {
  Rng rng(9, StreamId::kMonteCarlo);
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + static_cast<int>(rng.below(10));
    const Subspace v = Subspace::span_of_bits(n, random_gens(rng, n, 3));
    const BitVector s(n, rng.bits(n));
    const AffineSubspace a(s, v);
    const auto pts = enumerate(a);
    EXPECT_EQ(pts.size(), std::size_t{1} << v.dim());
    for (const auto& e : pts) {
      EXPECT_TRUE(v.contains(e + s));
      EXPECT_TRUE(a.contains(e));
    }
    // The stored shift is canonical: any point of the coset gives the same object.
    EXPECT_EQ(AffineSubspace(pts.back(), v), a);
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate(Subspace::full(30)), CapExceeded);
  EXPECT_EQ(enumerate(Subspace::full(4), 4).size(), 16u);
}

TEST(PointSet, SubspaceGeneratorExample) {
  const PointSet s = subspace_set(8, 2, 11);
  EXPECT_EQ(s.size(), 64u);
  for (std::uint64_t a : s.points()) {
    for (std::uint64_t b : s.points()) ASSERT_TRUE(s.contains(a ^ b));
  }
}

TEST(PointSet, SumsetMatchesPairLoop) {
  Rng rng(10, StreamId::kMonteCarlo);
  for (int k = 0; k < 30; ++k) {
    const int n = 3 + static_cast<int>(rng.below(7));
    const PointSet a = random_density_set(n, 0.1, k);
    const PointSet b = random_density_set(n, 0.2, k + 1000);
    std::set<std::uint64_t> expect;
    for (std::uint64_t x : a.points()) {
      for (std::uint64_t y : b.points()) expect.insert(x ^ y);
    }
    const PointSet got = sumset(a, b);
    EXPECT_EQ(got.size(), expect.size());
    for (std::uint64_t x : expect) EXPECT_TRUE(got.contains(x));
  }
}

TEST(PointSet, ShiftAndComplement) {
  const PointSet a = random_density_set(9, 0.3, 3);
  const PointSet s = a.shifted(0x55);
  EXPECT_EQ(s.size(), a.size());
  for (std::uint64_t x : a.points()) EXPECT_TRUE(s.contains(x ^ 0x55));
  const PointSet c = a.complement();
  EXPECT_EQ(c.size() + a.size(), a.universe_size());
  for (std::uint64_t x = 0; x < a.universe_size(); ++x) EXPECT_NE(c.contains(x), a.contains(x));
}

}  // namespace
}  // namespace f2ap
