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

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "f2ap/bogolyubov_algo.hpp"
#include "f2ap/generators.hpp"
#include "f2ap/oracle.hpp"

namespace f2ap {
namespace {

ParamSchedule algo_schedule(std::uint64_t seed) {
  ParamSchedule s = ParamSchedule::desk_algorithmic();
  s.seed = seed;
  return s;
}

bool inside(const Subspace& v, const PointSet& s) {
  bool ok = true;
  for_each_point(v, [&](std::uint64_t x) { ok = ok && s.contains(x); });
  return ok;
}

TEST(Certificate, ZeroSubspacePasses) {
  const PointSet a = random_density_set(8, 0.1, 1);
  const Certificate c = verify_certificate(RealTable::indicator(a), Subspace::zero(8));
  EXPECT_EQ(c.kind, CertificateKind::kExactPass);
  EXPECT_EQ(c.checked, 1u);
}

TEST(Certificate, SubspaceAndEnlargement) {
  const Subspace v0 = random_subspace(8, 2, 2);
  const RealTable h = RealTable::indicator(PointSet::from_subspace(v0));
  EXPECT_TRUE(verify_certificate(h, v0).passed());

  // 4A = V0, so V0 plus any outside vector fails at the smallest new point.
  const PointSet four = oracle::exact_sumset(PointSet::from_subspace(v0), 4);
  std::uint64_t outside = 0;
  while (v0.contains_bits(outside)) ++outside;
  std::vector<std::uint64_t> gens = v0.basis_bits();
  gens.push_back(outside);
  const Subspace big = Subspace::span_of_bits(8, gens);
  const Certificate c = verify_certificate(h, big);
  ASSERT_EQ(c.kind, CertificateKind::kExactFail);
  std::uint64_t expect = 0;
  while (four.contains(expect) || !big.contains_bits(expect)) ++expect;
  EXPECT_EQ(c.witness->bits(), expect);
}

TEST(Certificate, SampledOnSubspace) {
  const Subspace v0 = random_subspace(10, 2, 3);
  const FunctionOracle h = FunctionOracle::from_set(PointSet::from_subspace(v0));
  const ZTest z(h, 0.25, algo_schedule(1));
  const Certificate c = sampled_certificate(z, v0, 64, 256);
  EXPECT_EQ(c.kind, CertificateKind::kSampledPass);
  // Random members are deduplicated before checking.
  EXPECT_GT(c.checked, 32u);
  EXPECT_LE(c.checked, 64u);
  std::uint64_t outside = 1;
  while (v0.contains_bits(outside)) ++outside;
  std::vector<std::uint64_t> gens = v0.basis_bits();
  gens.push_back(outside);
  EXPECT_EQ(sampled_certificate(z, Subspace::span_of_bits(10, gens), 4096, 64).kind,
            CertificateKind::kSampledFail);
}

TEST(Bogolyubov, SubspaceInput) {
  const Subspace v0 = random_subspace(10, 2, 4);
  const FunctionOracle h = FunctionOracle::from_set(PointSet::from_subspace(v0));
  const BogolyubovResult r = quasipoly_bogolyubov(h, 0.25, 0.2, algo_schedule(2));
  EXPECT_FALSE(r.unverified);
  EXPECT_TRUE(r.V.is_subspace_of(v0));
  EXPECT_EQ(r.certificate.kind, CertificateKind::kExactPass);
}

TEST(Bogolyubov, ConstantOne) {
  const FunctionOracle h = FunctionOracle::from_set(PointSet::full(9));
  const BogolyubovResult r = quasipoly_bogolyubov(h, 1.0, 0.2, algo_schedule(3));
  EXPECT_EQ(r.V, Subspace::full(9));
  EXPECT_EQ(r.certificate.kind, CertificateKind::kExactPass);
}

TEST(Bogolyubov, ZeroFunctionIsUnverified) {
  const FunctionOracle h(8, [](std::uint64_t) { return false; });
  const BogolyubovResult r = quasipoly_bogolyubov(h, 0.5, 0.2, algo_schedule(4));
  EXPECT_TRUE(r.unverified);
  EXPECT_FALSE(r.certificate.passed());
}

TEST(Bogolyubov, PassAgreesWithExhaustiveSumset) {
  int passes = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const PointSet a = random_density_set(10, 0.25, 100 + seed);
    const FunctionOracle h = FunctionOracle::from_set(a);
    const BogolyubovResult r = quasipoly_bogolyubov(h, 0.25, 0.2, algo_schedule(seed));
    EXPECT_LE(static_cast<std::size_t>(r.codim), r.K_list.entries.size());
    EXPECT_LE(r.K_list.entries.size(), r.K_list.k_max);
    const bool exact = inside(r.V, oracle::exact_sumset(a, 4));
    EXPECT_EQ(r.certificate.kind == CertificateKind::kExactPass, exact);
    passes += r.certificate.passed() ? 1 : 0;
  }
  EXPECT_GE(passes, 4);
}

TEST(Bogolyubov, DeterministicPerSeed) {
  const PointSet a = random_density_set(10, 0.25, 7);
  const FunctionOracle h1 = FunctionOracle::from_set(a);
  const FunctionOracle h2 = FunctionOracle::from_set(a);
  const BogolyubovResult r1 = quasipoly_bogolyubov(h1, 0.25, 0.2, algo_schedule(9));
  const BogolyubovResult r2 = quasipoly_bogolyubov(h2, 0.25, 0.2, algo_schedule(9));
  EXPECT_EQ(r1.V, r2.V);
  EXPECT_EQ(r1.mu0, r2.mu0);
  EXPECT_EQ(r1.oracle_queries, r2.oracle_queries);
  EXPECT_EQ(r1.z_evaluations, r2.z_evaluations);
  EXPECT_EQ(r1.g_evaluations, r2.g_evaluations);
}

TEST(Bogolyubov, AuditStreamsEveryFreshEvaluation) {
  const PointSet a = random_density_set(9, 0.5, 8);
  const FunctionOracle h = FunctionOracle::from_set(a);
  std::uint64_t z_records = 0, g_records = 0;
  BogolyubovOptions opt;
  opt.audit = [&](const AuditRecord& rec) {
    if (rec.name == "z_test") ++z_records;
    if (rec.name == "g_test") ++g_records;
  };
  const BogolyubovResult r = quasipoly_bogolyubov(h, 0.5, 0.2, algo_schedule(5), opt);
  EXPECT_EQ(z_records, r.z_evaluations);
  EXPECT_EQ(g_records, r.g_evaluations);
  EXPECT_GT(z_records, 0u);
}

TEST(Bogolyubov, SampledCertificateWhenRequested) {
  const Subspace v0 = random_subspace(10, 1, 10);
  const FunctionOracle h = FunctionOracle::from_set(PointSet::from_subspace(v0));
  BogolyubovOptions opt;
  opt.exact_certificate = false;
  opt.sampled_points = 128;
  const BogolyubovResult r = quasipoly_bogolyubov(h, 0.5, 0.2, algo_schedule(6), opt);
  EXPECT_EQ(r.certificate.kind, CertificateKind::kSampledPass);
  EXPECT_GT(r.certificate.confidence, 0.5);
}

}  // namespace
}  // namespace f2ap
