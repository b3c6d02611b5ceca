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

// Oracle-access Bogolyubov: find a_hat, define X through X-Test, estimate
// mu0 = 1_X^(0), run Goldreich-Levin on f = 2 1_X - 1, and return
// V = span(K)^perp. The output is checked by h*h*h*h > 0 on V, exactly when
// the table fits, otherwise by sampled members of V.

#ifndef F2AP_BOGOLYUBOV_ALGO_HPP_
#define F2AP_BOGOLYUBOV_ALGO_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/fourier.hpp"
#include "f2ap/goldreich_levin.hpp"
#include "f2ap/random.hpp"
#include "f2ap/sampling.hpp"
#include "f2ap/schedule.hpp"

namespace f2ap {

enum class CertificateKind { kExactPass, kExactFail, kSampledPass, kSampledFail, kUnverified };

inline std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kExactPass: return "exact-pass";
    case CertificateKind::kExactFail: return "exact-fail";
    case CertificateKind::kSampledPass: return "sampled-pass";
    case CertificateKind::kSampledFail: return "sampled-fail";
    case CertificateKind::kUnverified: return "unverified";
  }
  return "unverified";
}

struct Certificate {
  CertificateKind kind = CertificateKind::kUnverified;
  std::optional<BitVector> witness;
  double confidence = 0;     // per checked point, sampled mode
  std::uint64_t checked = 0;

  bool passed() const {
    return kind == CertificateKind::kExactPass || kind == CertificateKind::kSampledPass;
  }
};

// h*h*h*h > 0 on all of V, with the smallest failing v as witness.
inline Certificate verify_certificate(const RealTable& h_table, const Subspace& v) {
  Certificate c;
  const RealTable four = convolve_power(h_table, 4);
  if (auto w = smallest_nonpositive(four, v)) {
    c.kind = CertificateKind::kExactFail;
    c.witness = BitVector(v.ambient_dim(), *w);
  } else {
    c.kind = CertificateKind::kExactPass;
  }
  c.confidence = 1;
  c.checked = std::uint64_t{1} << v.dim();
  return c;
}

// For up to `points` members v of V (all of V when it is that small), looks
// for y with Z(y) = Z(y + v) = 1, which puts v in 2A + 2A when both answers
// are right. Each success is wrong with probability at most 2 gamma1.
inline Certificate sampled_certificate(const ZTest& z, const Subspace& v, std::size_t points,
                                       std::uint64_t tries_per_point) {
  Certificate c;
  const int n = v.ambient_dim();
  const std::vector<std::uint64_t> basis = v.basis_bits();
  const int d = v.dim();
  std::vector<std::uint64_t> members;
  if (d < 63 && (std::uint64_t{1} << d) <= points) {
    for_each_in_span(0, basis, [&](std::uint64_t x) { members.push_back(x); }, 62);
  } else {
    Rng rng(z.schedule().seed, StreamId::kCertificate, ~std::uint64_t{0});
    for (std::size_t i = 0; i < points; ++i) {
      std::uint64_t x = 0;
      for (std::uint64_t b : basis) {
        if (rng.next() & 1) x ^= b;
      }
      members.push_back(x);
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (std::uint64_t m : members) {
    Rng rng(z.schedule().seed, StreamId::kCertificate, m);
    bool found = false;
    for (std::uint64_t k = 0; k < tries_per_point && !found; ++k) {
      const std::uint64_t y = rng.bits(n);
      found = z(y) && z(y ^ m);
    }
    ++c.checked;
    if (!found) {
      c.kind = CertificateKind::kSampledFail;
      c.witness = BitVector(n, m);
      return c;
    }
  }
  c.kind = CertificateKind::kSampledPass;
  c.confidence = std::max(0.0, 1.0 - 2.0 * z.gamma());
  return c;
}

struct BogolyubovOptions {
  bool exact_certificate = true;          // used when n <= 24
  std::size_t sampled_points = 4096;
  std::uint64_t tries_per_point = 4096;
  AuditSink audit;
};

struct BogolyubovResult {
  Subspace V;
  double mu0 = 0;
  std::int64_t mu0_samples = 0;
  double nu = 0;                     // GL threshold on f = 2 1_X - 1
  CoefficientList K_list;
  ParamSchedule schedule;
  Certificate certificate;
  AHatResult a_hat;
  bool unverified = false;           // a_hat fell back to a random sequence
  int codim = 0;
  double paper_codim_bound = 0;      // 32 log2(2 / alpha^t)
  std::uint64_t oracle_queries = 0;  // distinct points of h
  std::uint64_t z_evaluations = 0;
  std::uint64_t g_evaluations = 0;
};

inline BogolyubovResult quasipoly_bogolyubov(const FunctionOracle& h, double alpha, double gamma_prime,
                                             const ParamSchedule& sched, const BogolyubovOptions& opt = {}) {
  ParamSchedule s = sched;
  s.gamma_prime = gamma_prime;
  s = s.with_derived_budgets(alpha);
  s.validate();
  const int n = h.dim();

  BogolyubovResult res;
  res.schedule = s;
  ZTest z(h, alpha, s);
  GTest g(z);
  if (opt.audit) {
    z.set_audit(opt.audit);
    g.set_audit(opt.audit);
  }
  res.a_hat = find_a_hat(g);
  res.unverified = !res.a_hat.verified;
  XTest x(g, res.a_hat.a_hat);

  // mu0 with accuracy alpha^{2t}/8 and failure gamma'/4.
  const double a2t = std::pow(alpha, 2.0 * s.t);
  res.mu0_samples = scaled_count(s.mu0_multiplier, hoeffding_samples(a2t / 8.0, gamma_prime / 4.0));
  {
    Rng rng(s.seed, StreamId::kMuZero, 0);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < res.mu0_samples; ++i) hits += x(rng.bits(n)) ? 1 : 0;
    res.mu0 = static_cast<double>(hits) / static_cast<double>(res.mu0_samples);
  }

  // Characters with 1_X^(zeta) >= mu0/8 are those with f^(zeta) >= mu0/4 for
  // zeta != 0, so GL runs at nu = mu0/4 on f.
  std::vector<BitVector> k;
  if (res.mu0 > 0) {
    res.nu = std::min(1.0, res.mu0 / 4.0);
    GlOptions gl;
    gl.seed = s.seed;
    gl.multiplier = s.gl_multiplier;
    gl.max_samples_per_depth = s.gl_max_samples_per_depth;
    auto f = [&x](std::uint64_t p) { return x(p) ? 1 : -1; };
    res.K_list = goldreich_levin(f, n, res.nu, gamma_prime / 2.0, gl);
    for (const auto& e : res.K_list.entries) {
      if (!e.alpha.is_zero()) k.push_back(e.alpha);
    }
    res.V = Subspace::from_perp(n, k);
  } else {
    res.unverified = true;
    res.V = Subspace::zero(n);
  }
  res.codim = res.V.codim();
  res.paper_codim_bound = PaperBounds::period_codim(alpha, s.t);

  if (opt.exact_certificate && n <= kMaxTableDimension) {
    res.certificate = verify_certificate(RealTable::indicator(h.tabulate()), res.V);
  } else {
    res.certificate = sampled_certificate(z, res.V, opt.sampled_points, opt.tries_per_point);
  }
  res.oracle_queries = h.fresh_queries();
  res.z_evaluations = z.evaluations();
  res.g_evaluations = g.evaluations();
  return res;
}

}  // namespace f2ap

#endif  // F2AP_BOGOLYUBOV_ALGO_HPP_
