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

// Variance-aware almost-periods and affine subspaces inside A + A.
//
// With B = A, the slice S = {y : rho_{A->A}(y) >= alpha/2} has |S| >= alpha 2^n / 2
// because E_y rho = alpha and rho <= 1. Refined goodness measures errors in
// units of sqrt(rho(y)), so points where rho is small cost less. The period
// subspace V of the refined X is then shifted onto A + A by scanning S.

#ifndef F2AP_SUMSET_SUBSPACE_HPP_
#define F2AP_SUMSET_SUBSPACE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/periodicity.hpp"
#include "f2ap/point_set.hpp"
#include "f2ap/random.hpp"
#include "f2ap/schedule.hpp"

namespace f2ap {

// f(t) = t^2 - b t - c. When f(t1) > 0, t1 lies right of the positive root,
// where f increases, so f(t1) <= f(t2) for t1 <= t2.
inline bool parabola_monotone(double b, double c, double t1, double t2) {
  auto f = [&](double t) { return t * t - b * t - c; };
  if (!(b > 0)) throw std::invalid_argument("b must be positive");
  if (!(c >= 0)) throw std::invalid_argument("c must be nonnegative");
  if (!(t1 >= 0 && t1 <= t2)) throw std::invalid_argument("need 0 <= t1 <= t2");
  const double f1 = f(t1);
  if (!(f1 > 0)) throw std::invalid_argument("need f(t1) > 0");
  const double f2 = f(t2);
  const double slack = 4 * std::numeric_limits<double>::epsilon() * (t2 * t2 + b * t2 + c);
  return f1 <= f2 + slack;
}

inline PeriodSet refined_period_set(const PointSet& a, const PointSet& b, int t, GoodnessSpec spec,
                                    std::uint64_t cap = std::uint64_t{1} << 24) {
  spec.refined = true;
  return build_period_set(a, b, t, spec, cap);
}

// {y : rho_{A->A}(y) >= alpha/2}, compared in integers: 2^{n+1} count(y) >= |A|^2.
inline PointSet dense_slice(const RhoTable& r) {
  PointSet s(r.dim());
  const double a = static_cast<double>(r.a_size());
  const double lhs_scale = std::ldexp(1.0, r.dim() + 1);
  for (std::uint64_t y = 0; y < r.size(); ++y) {
    if (lhs_scale * r.count(y) >= a * a) s.insert(y);
  }
  return s;
}

struct EpsPrimeTerms {
  double variance_coeff = 0;  // 4 eps l, multiplies sqrt(rho(y))
  double eta_term = 0;        // 2 eta
  double fourier_term = 0;    // 2^{-l} sqrt(|B|/|A|)

  double at(double rho_y) const { return variance_coeff * std::sqrt(rho_y) + eta_term + fourier_term; }
};

struct RefinedReport {
  PeriodSet period_set;
  Subspace V;
  PointSet S;
  std::optional<BitVector> shift;
  std::vector<std::pair<std::uint64_t, double>> per_v_failure;  // v ascending
  double max_failure = 0;
  double bound = 0;  // 16 (l/eta) (|2A|/|S|) e^{-eps^2 t/4}
  EpsPrimeTerms terms;
  int ell = 0;
  double eta = 0;
  std::uint64_t rho_total = 0;      // sum_y count(y), equals |A|^2
  bool mean_is_alpha = false;
  bool slice_bound_holds = false;   // |S| >= (alpha/2) 2^n
  int dim = 0;
  double paper_t = 0;
  double paper_dim_bound = 0;
  std::uint64_t shifts_scanned = 0;
  bool containment_verified = false;  // shift + V inside the exact A + A
};

inline RefinedReport refined_subspace(const PointSet& a, const ParamSchedule& sched) {
  sched.validate();
  if (a.empty()) throw std::invalid_argument("A must be nonempty");
  RefinedReport rep;
  const RhoTable r(a, a);
  rep.S = dense_slice(r);
  rep.rho_total = 0;
  for (std::uint64_t y = 0; y < r.size(); ++y) rep.rho_total += r.count(y);
  rep.mean_is_alpha = rep.rho_total == static_cast<std::uint64_t>(a.size()) * a.size();
  rep.slice_bound_holds = 2 * rep.S.size() >= a.size();  // |S| >= (|A|/2^n / 2) 2^n

  GoodnessSpec spec{sched.epsilon, sched.delta, true};
  rep.period_set = refined_period_set(a, a, sched.t, spec, sched.enumeration_cap);
  rep.V = period_subspace(rep.period_set).V;
  rep.dim = rep.V.dim();
  rep.ell = sched.ell;
  rep.eta = sched.eta;
  rep.terms.variance_coeff = 4.0 * sched.epsilon * sched.ell;
  rep.terms.eta_term = 2.0 * sched.eta;
  rep.terms.fourier_term = std::ldexp(1.0, -sched.ell);
  const double two_a = static_cast<double>(sumset(a, a).size());
  rep.bound = 16.0 * (sched.ell / sched.eta) * (two_a / rep.S.size()) *
              std::exp(-sched.epsilon * sched.epsilon * sched.t / 4.0);
  const double alpha = a.density();
  rep.paper_t = ParamSchedule::paper_sumset_t(alpha, a.dim());
  rep.paper_dim_bound = PaperBounds::sumset_dim(a.dim(), alpha, sched.t);

  const std::vector<std::uint64_t> ys = rep.S.points();
  for_each_point(rep.V, [&](std::uint64_t v) {
    std::uint64_t fail = 0;
    for (std::uint64_t y : ys) {
      const double ry = r(y);
      if (ry - r(y ^ v) > rep.terms.at(ry) + kCompareTolerance) ++fail;
    }
    const double frac = static_cast<double>(fail) / ys.size();
    rep.per_v_failure.emplace_back(v, frac);
    rep.max_failure = std::max(rep.max_failure, frac);
  }, kMaxTableDimension);
  std::sort(rep.per_v_failure.begin(), rep.per_v_failure.end());
  return rep;
}

// Scans shifts y in S by descending rho, then ascending y. A shift is kept
// when rho_{A->A}(y + v) > 0 for all v in V; 64 random v are tried first.
inline RefinedReport find_sumset_subspace(const PointSet& a, const ParamSchedule& sched) {
  RefinedReport rep = refined_subspace(a, sched);
  const RhoTable r(a, a);
  std::vector<std::uint64_t> order = rep.S.points();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t x, std::uint64_t y) { return r.count(x) > r.count(y); });
  const std::vector<std::uint64_t> basis = rep.V.basis_bits();
  for (std::uint64_t y : order) {
    ++rep.shifts_scanned;
    Rng rng(sched.seed, StreamId::kShiftFilter, y);
    bool ok = true;
    for (int k = 0; k < 64 && ok && !basis.empty(); ++k) {
      std::uint64_t v = 0;
      for (std::uint64_t b : basis) {
        if (rng.next() & 1) v ^= b;
      }
      ok = r.count(y ^ v) > 0;
    }
    if (!ok) continue;
    for_each_in_span(y, basis, [&](std::uint64_t p) { ok = ok && r.count(p) > 0; }, kMaxTableDimension);
    if (ok) {
      rep.shift = BitVector(a.dim(), y);
      break;
    }
  }
  if (rep.shift) {
    const PointSet two_a = sumset(a, a);
    bool inside = true;
    for_each_in_span(rep.shift->bits(), basis, [&](std::uint64_t p) { inside = inside && two_a.contains(p); },
                     kMaxTableDimension);
    rep.containment_verified = inside;
  }
  return rep;
}

// Baseline: shift at the largest rho (smallest index on ties), then add
// directions v = 1, 2, ... while the coset stays inside A + A.
inline AffineSubspace greedy_sumset_subspace(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("A must be nonempty");
  const int n = a.dim();
  const RhoTable r(a, a);
  std::uint64_t shift = 0;
  for (std::uint64_t y = 1; y < r.size(); ++y) {
    if (r.count(y) > r.count(shift)) shift = y;
  }
  std::vector<std::uint64_t> basis;
  auto fits = [&](std::uint64_t v) {
    bool ok = true;
    // New points are exactly the coset shifted by v.
    for_each_in_span(shift ^ v, basis, [&](std::uint64_t p) { ok = ok && r.count(p) > 0; }, kMaxTableDimension);
    return ok;
  };
  for (std::uint64_t v = 1; v < r.size(); ++v) {
    const Subspace cur = Subspace::span_of_bits(n, basis);
    if (cur.contains_bits(v)) continue;
    if (fits(v)) basis.push_back(v);
  }
  return AffineSubspace(BitVector(n, shift), Subspace::span_of_bits(n, basis));
}

struct VarianceRegression {
  std::vector<double> p;
  std::vector<double> rms;  // root-mean-square of rho_hat - rho
  double slope = 0;         // d log rms / d log p
};

// rho_hat_a(y) - rho(y) for uniform a in A^t, at points with rho(y) = p.
// A = F_2^n and B holds p 2^n points, so rho(0) = p exactly.
inline VarianceRegression variance_regression(const std::vector<double>& ps, int n, int t, int trials,
                                              std::uint64_t seed) {
  VarianceRegression out;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const double p = ps[i];
    const auto bsize = static_cast<std::uint64_t>(std::llround(p * static_cast<double>(size)));
    if (bsize == 0 || bsize > size) throw std::invalid_argument("p * 2^n must be in [1, 2^n]");
    const double exact = static_cast<double>(bsize) / static_cast<double>(size);
    Rng rng(seed, StreamId::kMonteCarlo, i);
    double ss = 0;
    for (int k = 0; k < trials; ++k) {
      int hits = 0;
      for (int j = 0; j < t; ++j) hits += rng.below(size) < bsize ? 1 : 0;
      const double d = static_cast<double>(hits) / t - exact;
      ss += d * d;
    }
    out.p.push_back(exact);
    out.rms.push_back(std::sqrt(ss / trials));
  }
  const std::size_t m = out.p.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += std::log(out.p[i]);
    my += std::log(out.rms[i]);
  }
  mx /= m;
  my /= m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = std::log(out.p[i]) - mx;
    sxy += dx * (std::log(out.rms[i]) - my);
    sxx += dx * dx;
  }
  out.slope = sxx > 0 ? sxy / sxx : 0;
  return out;
}

}  // namespace f2ap

#endif  // F2AP_SUMSET_SUBSPACE_HPP_
