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

// Parameter schedules shared by the exact and sampled pipelines.
//
// Three presets:
//   "desk"       small (t, l, eps, eta) for exact runs at n <= 14
//   "desk-algo"  desk values with eta = 1/2, eps = 1/8 for the oracle pipeline
//   "desk-sumset" t = 2 with eps = 3/4, delta = 1/4, so the refined predicate
//                admits sequences when rho hat only takes values 0, 1/2, 1
//   "paper"      the proofs' symbolic choices, for reporting only
// Zero-valued gammas and sample counts mean "derive from the proof's split".

#ifndef F2AP_SCHEDULE_HPP_
#define F2AP_SCHEDULE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace f2ap {

struct ParamSchedule {
  std::string preset = "desk";
  int t = 2;
  int ell = 2;
  double epsilon = 1.0 / 16;
  double eta = 1.0 / 16;
  double delta = 1.0 / 8;
  std::int64_t r = 0;
  std::int64_t r_prime = 0;
  double gamma1 = 0;
  double gamma2 = 0;
  double gamma3 = 0;
  double gamma4 = 0;
  double gamma_prime = 0.2;
  std::uint64_t seed = 0;

  // Multipliers on the Hoeffding-derived counts standing in for O(.).
  double z_multiplier = 1;
  double g_multiplier = 1;
  double find_multiplier = 1;
  double mu0_multiplier = 1;
  double gl_multiplier = 1;
  // Per-depth sample cap for Goldreich-Levin; 0 means uncapped.
  std::int64_t gl_max_samples_per_depth = 0;
  // |A|^t ceiling for exact estimator enumeration.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 24;

  void validate() const {
    auto prob = [](double v, const char* name) {
      if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument(std::string(name) + " must be in (0,1)");
    };
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    prob(epsilon, "epsilon");
    prob(eta, "eta");
    prob(delta, "delta");
    prob(gamma_prime, "gamma_prime");
    for (double g : {gamma1, gamma2, gamma3, gamma4}) {
      if (g != 0.0) prob(g, "gamma");
    }
    if (r < 0 || r_prime < 0) throw std::invalid_argument("sample counts must be >= 0");
    for (double m : {z_multiplier, g_multiplier, find_multiplier, mu0_multiplier, gl_multiplier}) {
      if (!(m > 0.0)) throw std::invalid_argument("multipliers must be positive");
    }
  }

  // Fills zero gammas with the proof's split for density alpha:
  // g2 = g'/4, g3 = g2/(2(l+1)), g4 = g2/2, g1 = eta alpha^2.
  ParamSchedule with_derived_budgets(double alpha) const {
    ParamSchedule s = *this;
    if (s.gamma2 == 0) s.gamma2 = gamma_prime / 4;
    if (s.gamma3 == 0) s.gamma3 = s.gamma2 / (2.0 * (ell + 1));
    if (s.gamma4 == 0) s.gamma4 = s.gamma2 / 2;
    if (s.gamma1 == 0) s.gamma1 = eta * alpha * alpha;
    return s;
  }

  static ParamSchedule desk() { return ParamSchedule{}; }

  static ParamSchedule desk_algorithmic() {
    ParamSchedule s;
    s.preset = "desk-algo";
    s.eta = 0.5;
    s.epsilon = 0.125;
    s.delta = 0.125;
    s.gl_max_samples_per_depth = std::int64_t{1} << 24;
    return s;
  }

  static ParamSchedule desk_sumset() {
    ParamSchedule s;
    s.preset = "desk-sumset";
    s.epsilon = 0.75;
    s.delta = 0.25;
    return s;
  }

  // Exact pipeline: l = log2(900/alpha)/2, eta = 1/60, eps = 1/(120 l),
  // t the least integer with 480 log2(900/alpha)/alpha *
  // exp(-t / (1800 log2^2(900/alpha))) <= 1/10.
  static ParamSchedule paper_exact(double alpha) {
    ParamSchedule s;
    s.preset = "paper";
    const double l = std::log2(900.0 / alpha) / 2.0;
    s.ell = static_cast<int>(std::ceil(l));
    s.eta = 1.0 / 60;
    s.epsilon = 1.0 / (120.0 * l);
    const double lg = std::log2(900.0 / alpha);
    const double need = std::log(4800.0 * lg / alpha);
    s.t = static_cast<int>(std::ceil(1800.0 * lg * lg * need));
    s.delta = std::min(0.5, 2.0 * std::exp(-2.0 * s.epsilon * s.epsilon * s.t));
    return s;
  }

  // Oracle pipeline: l = log2(10/alpha), eps = 1/(120 l), delta = alpha/(120 l),
  // eta = 1e-4, t = ceil(log(1/delta)/eps^2).
  static ParamSchedule paper_algorithmic(double alpha, double gamma_prime) {
    ParamSchedule s;
    s.preset = "paper";
    const double l = std::log2(10.0 / alpha);
    s.ell = static_cast<int>(std::ceil(l));
    s.epsilon = 1.0 / (120.0 * l);
    s.delta = alpha / (120.0 * l);
    s.eta = 1e-4;
    s.gamma_prime = gamma_prime;
    s.t = static_cast<int>(std::ceil(std::log(1.0 / s.delta) / (s.epsilon * s.epsilon)));
    return s;
  }

  // Sumset subspace: eta = alpha/24, l = log2(12/alpha), eps = sqrt(2 alpha)/(48 l).
  static ParamSchedule paper_sumset(double alpha, int n) {
    ParamSchedule s;
    s.preset = "paper";
    const double l = std::log2(12.0 / alpha);
    s.ell = static_cast<int>(std::ceil(l));
    s.eta = alpha / 24.0;
    s.epsilon = std::sqrt(2.0 * alpha) / (48.0 * l);
    s.t = std::max(1, static_cast<int>(std::ceil(paper_sumset_t(alpha, n))));
    s.delta = 0.5;
    return s;
  }

  static double paper_sumset_t(double alpha, int n) {
    const double la = std::log2(1.0 / alpha);
    const double l12 = std::log2(12.0 / alpha);
    return (2.0 * la + n + std::log2(l12)) /
           (32.0 * la + 2.0 * alpha / (4.0 * 48.0 * 48.0 * l12 * l12));
  }
};

// Symbolic bounds printed next to desk measurements.
struct PaperBounds {
  static double period_codim(double alpha, int t) { return 32.0 * std::log2(2.0 / std::pow(alpha, t)); }
  static double classical_codim(double alpha) { return 2.0 / (alpha * alpha); }
  static double sumset_dim(int n, double alpha, int t) {
    return n - 32.0 * std::log2(1.0 / alpha) * t - 32.0;
  }
};

inline ParamSchedule preset_by_name(const std::string& name, double alpha = 0.25, int n = 12) {
  if (name == "desk") return ParamSchedule::desk();
  if (name == "desk-algo") return ParamSchedule::desk_algorithmic();
  if (name == "desk-sumset") return ParamSchedule::desk_sumset();
  if (name == "paper") return ParamSchedule::paper_exact(alpha);
  if (name == "paper-algo") return ParamSchedule::paper_algorithmic(alpha, 0.2);
  if (name == "paper-sumset") return ParamSchedule::paper_sumset(alpha, n);
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace f2ap

#endif  // F2AP_SCHEDULE_HPP_
