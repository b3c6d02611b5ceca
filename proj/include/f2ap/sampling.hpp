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

// Oracle-access subroutines: sample-size planning, Z-Test, G-Test, find a_hat
// and X-Test.
//
// Z and G are memoized per point (resp. per sequence) for the life of the
// test object, so within one run they are fixed functions, which is how the
// correctness arguments treat them. Every random draw comes from a stream
// keyed by the input, so answers do not depend on call order.

#ifndef F2AP_SAMPLING_HPP_
#define F2AP_SAMPLING_HPP_

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/fourier.hpp"
#include "f2ap/parallel.hpp"
#include "f2ap/periodicity.hpp"
#include "f2ap/point_set.hpp"
#include "f2ap/random.hpp"
#include "f2ap/schedule.hpp"

namespace f2ap {

// Smallest t with 2 exp(-2 gamma^2 t) <= fail_prob.
inline std::int64_t hoeffding_samples(double gamma, double fail_prob) {
  if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");
  if (!(fail_prob > 0 && fail_prob <= 1)) throw std::invalid_argument("fail_prob must be in (0,1]");
  auto ok = [&](double t) { return 2.0 * std::exp(-2.0 * gamma * gamma * t) <= fail_prob; };
  auto t = static_cast<std::int64_t>(std::ceil(std::log(2.0 / fail_prob) / (2.0 * gamma * gamma)));
  t = std::max<std::int64_t>(t, 1);
  while (t > 1 && ok(static_cast<double>(t - 1))) --t;
  while (!ok(static_cast<double>(t))) ++t;
  return t;
}

class UsePlainHoeffding : public std::invalid_argument {
 public:
  UsePlainHoeffding() : std::invalid_argument("gamma >= 2 sigma^2: use plain Hoeffding") {}
};

// Smallest t with 2 exp(-gamma^2 t / (4 sigma^2)) <= fail_prob, for gamma < 2 sigma^2.
inline std::int64_t variance_hoeffding_samples(double gamma, double sigma_sq, double fail_prob) {
  if (!(gamma > 0 && sigma_sq > 0)) throw std::invalid_argument("gamma and sigma^2 must be positive");
  if (!(fail_prob > 0 && fail_prob <= 1)) throw std::invalid_argument("fail_prob must be in (0,1]");
  if (!(gamma < 2.0 * sigma_sq)) throw UsePlainHoeffding();
  auto ok = [&](double t) { return 2.0 * std::exp(-gamma * gamma * t / (4.0 * sigma_sq)) <= fail_prob; };
  auto t = static_cast<std::int64_t>(std::ceil(4.0 * sigma_sq * std::log(2.0 / fail_prob) / (gamma * gamma)));
  t = std::max<std::int64_t>(t, 1);
  while (t > 1 && ok(static_cast<double>(t - 1))) --t;
  while (!ok(static_cast<double>(t))) ++t;
  return t;
}

inline std::int64_t scaled_count(double multiplier, std::int64_t base) {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(multiplier * static_cast<double>(base))));
}

// Upper end of the Wilson score interval for k successes in n trials.
inline double wilson_upper(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0) return 1.0;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double center = p + z2 / (2 * nn);
  const double margin = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  return std::min(1.0, (center + margin) / (1 + z2 / nn));
}

inline double wilson_lower(std::uint64_t k, std::uint64_t n, double z) {
  if (n == 0) return 0.0;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(k) / nn;
  const double z2 = z * z;
  const double center = p + z2 / (2 * nn);
  const double margin = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  return std::max(0.0, (center - margin) / (1 + z2 / nn));
}

// One record per fresh subroutine evaluation.
struct AuditRecord {
  std::string name;
  std::uint64_t input_digest = 0;
  std::int64_t output = 0;
  std::uint64_t queries = 0;
};
using AuditSink = std::function<void(const AuditRecord&)>;

// Point-wise memo with first-writer-wins semantics: dense for n <= 24,
// otherwise a locked hash map.
class BitMemo {
 public:
  explicit BitMemo(int n) : dense_(n <= kMaxTableDimension) {
    if (dense_) {
      cells_ = std::make_unique<std::atomic<std::int8_t>[]>(std::size_t{1} << n);
      for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) cells_[i].store(-1, std::memory_order_relaxed);
    }
  }
  // -1 when absent.
  int get(std::uint64_t x) const {
    if (dense_) return cells_[x].load(std::memory_order_acquire);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(x);
    return it == map_.end() ? -1 : it->second;
  }
  // Returns the stored value and whether this call stored it.
  std::pair<bool, bool> put(std::uint64_t x, bool v) {
    if (dense_) {
      std::int8_t expected = -1;
      if (cells_[x].compare_exchange_strong(expected, v ? 1 : 0, std::memory_order_acq_rel)) return {v, true};
      return {expected == 1, false};
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(x, v ? 1 : 0);
    return {it->second == 1, inserted};
  }

 private:
  bool dense_;
  std::unique_ptr<std::atomic<std::int8_t>[]> cells_;
  mutable std::mutex mu_;
  std::unordered_map<std::uint64_t, std::int8_t> map_;
};

// Black-box h : F_2^n -> {0,1} with a per-point memo and query counters.
class FunctionOracle {
 public:
  using Query = std::function<bool(std::uint64_t)>;

  FunctionOracle(int n, Query q)
      : n_(n), query_(std::move(q)), memo_(std::make_unique<BitMemo>(n)),
        fresh_(std::make_unique<std::atomic<std::uint64_t>>(0)),
        calls_(std::make_unique<std::atomic<std::uint64_t>>(0)) {
    check_dimension(n);
  }

  static FunctionOracle from_set(const PointSet& a) {
    return FunctionOracle(a.dim(), [a](std::uint64_t x) { return a.contains(x); });
  }

  int dim() const { return n_; }

  bool operator()(std::uint64_t x) const {
    calls_->fetch_add(1, std::memory_order_relaxed);
    const int m = memo_->get(x);
    if (m >= 0) return m == 1;
    const auto [v, stored] = memo_->put(x, query_(x));
    if (stored) fresh_->fetch_add(1, std::memory_order_relaxed);
    return v;
  }
  bool query(const BitVector& x) const { return (*this)(x.bits()); }

  // Distinct points queried so far.
  std::uint64_t fresh_queries() const { return fresh_->load(); }
  std::uint64_t total_calls() const { return calls_->load(); }

  // Full support, bypassing memo and counters. n <= 24.
  PointSet tabulate() const {
    check_table_dimension(n_);
    PointSet s(n_);
    for (std::uint64_t x = 0; x < s.universe_size(); ++x) {
      if (query_(x)) s.insert(x);
    }
    return s;
  }

 private:
  int n_;
  Query query_;
  std::unique_ptr<BitMemo> memo_;
  std::unique_ptr<std::atomic<std::uint64_t>> fresh_;
  std::unique_ptr<std::atomic<std::uint64_t>> calls_;
};

// Z(x) = [estimate of h*h(x) >= eta alpha^2], from r uniform samples y.
// Contract: Z(x) = 1 => h*h(x) >= eta alpha^2 / 2; Z(x) = 0 => h*h(x) < 3 eta alpha^2 / 2.
class ZTest {
 public:
  ZTest(const FunctionOracle& h, double alpha, const ParamSchedule& sched)
      : h_(&h), alpha_(alpha), sched_(sched.with_derived_budgets(alpha)), memo_(h.dim()) {
    if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("alpha must be in (0,1]");
    sched_.validate();
    const double accuracy = sched_.eta * alpha * alpha / 2;
    samples_ = scaled_count(sched_.z_multiplier, hoeffding_samples(accuracy, sched_.gamma1));
  }

  const FunctionOracle& oracle() const { return *h_; }
  const ParamSchedule& schedule() const { return sched_; }
  double alpha() const { return alpha_; }
  int dim() const { return h_->dim(); }
  std::int64_t samples() const { return samples_; }
  double threshold() const { return sched_.eta * alpha_ * alpha_; }
  double gamma() const { return sched_.gamma1; }
  void set_audit(AuditSink sink) { audit_ = std::move(sink); }

  // Recomputes without the memo; the stream is keyed by x so it matches.
  double estimate(std::uint64_t x) const {
    Rng rng(sched_.seed, StreamId::kZTest, x);
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples_; ++i) {
      const std::uint64_t y = rng.bits(dim());
      if ((*h_)(y) && (*h_)(y ^ x)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples_);
  }

  bool operator()(std::uint64_t x) const {
    const int m = memo_.get(x);
    if (m >= 0) return m == 1;
    const std::uint64_t before = h_->fresh_queries();
    const bool out = estimate(x) >= threshold() - kCompareTolerance;
    const auto [v, stored] = memo_.put(x, out);
    if (stored) {
      evaluations_.fetch_add(1, std::memory_order_relaxed);
      if (audit_) audit_({"z_test", x, v ? 1 : 0, h_->fresh_queries() - before});
    }
    return v;
  }

  std::uint64_t evaluations() const { return evaluations_.load(); }

  // {x : Z(x) = 1}, evaluating every point (n <= 24).
  PointSet materialize() const {
    check_table_dimension(dim());
    const std::uint64_t size = std::uint64_t{1} << dim();
    std::vector<std::uint8_t> bits(size);
    parallel_blocks(size, std::max<std::uint64_t>(1, size / 256), [&](std::size_t, std::size_t lo, std::size_t hi) {
      for (std::size_t x = lo; x < hi; ++x) bits[x] = (*this)(x) ? 1 : 0;
    });
    PointSet z(dim());
    for (std::uint64_t x = 0; x < size; ++x) {
      if (bits[x]) z.insert(x);
    }
    return z;
  }

 private:
  const FunctionOracle* h_;
  double alpha_;
  ParamSchedule sched_;
  std::int64_t samples_ = 0;
  mutable BitMemo memo_;
  mutable std::atomic<std::uint64_t> evaluations_{0};
  AuditSink audit_;
};

// True when a Z answer breaks its contract given the exact h*h(x).
inline bool z_violation(bool output, double hh, double eta, double alpha) {
  const double a2 = alpha * alpha;
  return output ? hh < eta * a2 / 2 - kCompareTolerance : hh >= 1.5 * eta * a2 - kCompareTolerance;
}

// G(a): all h(a_i) = 1, then r uniform y with rho~(y), an r'-sample estimate
// of rho_{A->Z}(y) over a in A, compared against rho_hat_a(y); reject when
// more than delta r of them are off by at least epsilon.
// Contract: G(a) = 1 => a in G[2 eps, 2 delta]; a in G[eps/2, delta/2] => G(a) = 1.
class GTest {
 public:
  explicit GTest(const ZTest& z) : z_(&z), sched_(z.schedule()), rho_memo_(z.dim()) {
    const double alpha = z.alpha();
    (void)alpha;
    r_ = sched_.r > 0 ? sched_.r
                      : scaled_count(sched_.g_multiplier, hoeffding_samples(sched_.delta / 2, sched_.gamma3 / 2));
    r_prime_ = sched_.r_prime > 0
                   ? sched_.r_prime
                   : scaled_count(sched_.g_multiplier,
                                  hoeffding_samples(sched_.epsilon / 2, sched_.gamma3 / (2.0 * r_)));
  }

  const ZTest& z_test() const { return *z_; }
  const ParamSchedule& schedule() const { return sched_; }
  int dim() const { return z_->dim(); }
  int t() const { return sched_.t; }
  std::int64_t r() const { return r_; }
  std::int64_t r_prime() const { return r_prime_; }
  void set_audit(AuditSink sink) { audit_ = std::move(sink); }

  // Sampled rho_{A->Z}(y), fixed per y.
  double rho_estimate(std::uint64_t y) const {
    if (auto v = rho_memo_.get(y)) return *v;
    Rng rng(sched_.seed, StreamId::kRhoEstimate, y);
    const FunctionOracle& h = z_->oracle();
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < r_prime_; ++i) {
      std::uint64_t a = 0;
      std::uint64_t tries = 0;
      do {
        a = rng.bits(dim());
        if (++tries > kMaxRejection) throw Error("rejection sampling from A failed; A too sparse");
      } while (!h(a));
      if ((*z_)(y ^ a)) ++hits;
    }
    const double v = static_cast<double>(hits) / static_cast<double>(r_prime_);
    return rho_memo_.put(y, v);
  }

  // Fraction of the r sampled y that disagree; 1 when some h(a_i) = 0.
  double bad_fraction(const SampleSeq& a) const {
    const FunctionOracle& h = z_->oracle();
    for (std::uint64_t v : a.a) {
      if (!h(v)) return 1.0;
    }
    Rng rng(sched_.seed, StreamId::kGTest, digest(a.a));
    std::int64_t bad = 0;
    for (std::int64_t i = 0; i < r_; ++i) {
      const std::uint64_t y = rng.bits(dim());
      int hits = 0;
      for (std::uint64_t v : a.a) hits += (*z_)(y ^ v) ? 1 : 0;
      const double est = static_cast<double>(hits) / static_cast<double>(a.a.size());
      if (std::abs(rho_estimate(y) - est) >= sched_.epsilon - kCompareTolerance) ++bad;
    }
    return static_cast<double>(bad) / static_cast<double>(r_);
  }

  bool operator()(const SampleSeq& a) const {
    if (a.length() != sched_.t) throw std::invalid_argument("sequence length differs from t");
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(a.a);
      if (it != memo_.end()) return it->second;
    }
    const std::uint64_t before = z_->oracle().fresh_queries();
    const bool out = bad_fraction(a) <= sched_.delta + kCompareTolerance;
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(a.a, out);
    if (inserted) {
      ++evaluations_;
      if (audit_) audit_({"g_test", digest(a.a), it->second ? 1 : 0, z_->oracle().fresh_queries() - before});
    }
    return it->second;
  }

  std::uint64_t evaluations() const {
    std::lock_guard<std::mutex> lock(mu_);
    return evaluations_;
  }

 private:
  static constexpr std::uint64_t kMaxRejection = std::uint64_t{1} << 24;

  class RealMemo {
   public:
    explicit RealMemo(int n) : dense_(n <= kMaxTableDimension) {
      if (dense_) {
        cells_ = std::make_unique<std::atomic<std::uint64_t>[]>(std::size_t{1} << n);
        for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) cells_[i].store(kEmpty, std::memory_order_relaxed);
      }
    }
    std::optional<double> get(std::uint64_t x) const {
      if (dense_) {
        const std::uint64_t b = cells_[x].load(std::memory_order_acquire);
        if (b == kEmpty) return std::nullopt;
        return std::bit_cast<double>(b);
      }
      std::lock_guard<std::mutex> lock(mu_);
      auto it = map_.find(x);
      if (it == map_.end()) return std::nullopt;
      return it->second;
    }
    double put(std::uint64_t x, double v) {
      if (dense_) {
        std::uint64_t expected = kEmpty;
        if (cells_[x].compare_exchange_strong(expected, std::bit_cast<std::uint64_t>(v))) return v;
        return std::bit_cast<double>(expected);
      }
      std::lock_guard<std::mutex> lock(mu_);
      return map_.emplace(x, v).first->second;
    }

   private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};  // a NaN pattern never produced
    bool dense_;
    std::unique_ptr<std::atomic<std::uint64_t>[]> cells_;
    mutable std::mutex mu_;
    std::unordered_map<std::uint64_t, double> map_;
  };

  const ZTest* z_;
  ParamSchedule sched_;
  std::int64_t r_ = 0;
  std::int64_t r_prime_ = 0;
  mutable RealMemo rho_memo_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<std::uint64_t>, bool> memo_;
  mutable std::uint64_t evaluations_ = 0;
  AuditSink audit_;
};

struct AHatResult {
  SampleSeq a_hat;
  bool verified = false;
  double estimate = 0;            // sampled E_x G(a_hat + x)
  double acceptance = 0;          // 3 alpha^{2t} / 4
  std::uint64_t attempts = 0;
  std::uint64_t budget = 0;
  std::uint64_t candidates = 0;   // sequences with G = 1 that were estimated
  std::int64_t estimate_samples = 0;
};

inline SampleSeq random_sequence(int n, int t, Rng& rng) {
  SampleSeq s;
  s.n = n;
  for (int i = 0; i < t; ++i) s.a.push_back(rng.bits(n));
  return s;
}

// Tries uniform sequences until G accepts one whose sampled E_x G(a + x)
// reaches 3 alpha^{2t} / 4. On budget exhaustion returns a random sequence
// flagged unverified.
inline AHatResult find_a_hat(const GTest& g) {
  const ParamSchedule& s = g.schedule();
  const int n = g.dim();
  const int t = s.t;
  const double alpha = g.z_test().alpha();
  const double a2t = std::pow(alpha, 2.0 * t);
  AHatResult res;
  res.acceptance = 0.75 * a2t;
  res.budget = static_cast<std::uint64_t>(std::ceil(s.find_multiplier * 4.0 * std::log(2.0 / s.gamma4) / a2t));
  res.estimate_samples = scaled_count(s.find_multiplier, hoeffding_samples(a2t / 8.0, s.gamma4 / 2.0));

  for (std::uint64_t k = 0; k < res.budget; ++k) {
    ++res.attempts;
    Rng rng(s.seed, StreamId::kFindAHat, k);
    const SampleSeq cand = random_sequence(n, t, rng);
    if (!g(cand)) continue;
    ++res.candidates;
    BitMemo local(n);
    Rng xs(s.seed, StreamId::kFindAHat, k | (std::uint64_t{1} << 63));
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < res.estimate_samples; ++i) {
      const std::uint64_t x = xs.bits(n);
      int m = local.get(x);
      if (m < 0) m = local.put(x, g(cand.shifted(x))).first ? 1 : 0;
      hits += m;
    }
    const double est = static_cast<double>(hits) / static_cast<double>(res.estimate_samples);
    if (est >= res.acceptance - kCompareTolerance) {
      res.a_hat = cand;
      res.verified = true;
      res.estimate = est;
      return res;
    }
  }
  Rng rng(s.seed, StreamId::kFindAHat, ~std::uint64_t{0});
  res.a_hat = random_sequence(n, t, rng);
  return res;
}

// X(x) = G(a_hat + x), memoized.
class XTest {
 public:
  XTest(const GTest& g, SampleSeq a_hat) : g_(&g), a_hat_(std::move(a_hat)), memo_(g.dim()) {
    if (a_hat_.length() != g.t()) throw std::invalid_argument("a_hat length differs from t");
  }
  int dim() const { return g_->dim(); }
  const SampleSeq& a_hat() const { return a_hat_; }

  bool operator()(std::uint64_t x) const {
    const int m = memo_.get(x);
    if (m >= 0) return m == 1;
    return memo_.put(x, (*g_)(a_hat_.shifted(x))).first;
  }

  // {x : X(x) = 1}, n <= 24.
  PointSet materialize() const {
    check_table_dimension(dim());
    PointSet s(dim());
    for (std::uint64_t x = 0; x < s.universe_size(); ++x) {
      if ((*this)(x)) s.insert(x);
    }
    return s;
  }

 private:
  const GTest* g_;
  SampleSeq a_hat_;
  mutable BitMemo memo_;
};

// Pr_{y in F_2^n}[|rho_{A->Z}(y) - rho_hat_a(y)| >= eps], computed exactly.
inline double g_bad_fraction(const SampleSeq& a, const RhoTable& rho_az, double epsilon) {
  const PointSet& z = rho_az.B();
  std::uint64_t bad = 0;
  for (std::uint64_t y = 0; y < rho_az.size(); ++y) {
    if (std::abs(rho_az(y) - rho_hat(a, z, y)) >= epsilon - kCompareTolerance) ++bad;
  }
  return static_cast<double>(bad) / static_cast<double>(rho_az.size());
}

// a in G[eps, delta] for the oracle pipeline: every a_i in A and at most a
// delta fraction of all y misestimated by eps or more.
inline bool g_exact_member(const SampleSeq& a, const RhoTable& rho_az, double epsilon, double delta) {
  for (std::uint64_t v : a.a) {
    if (!rho_az.A().contains(v)) return false;
  }
  return g_bad_fraction(a, rho_az, epsilon) <= delta + kCompareTolerance;
}

// Classifies a G answer against exact membership; band = neither side applies.
enum class GVerdict { kCorrect, kFalseAccept, kFalseReject, kBand };

inline GVerdict classify_g(bool output, const SampleSeq& a, const RhoTable& rho_az, double epsilon, double delta) {
  const bool in_loose = g_exact_member(a, rho_az, 2 * epsilon, 2 * delta);
  const bool in_tight = g_exact_member(a, rho_az, epsilon / 2, delta / 2);
  if (output && !in_loose) return GVerdict::kFalseAccept;
  if (!output && in_tight) return GVerdict::kFalseReject;
  if (output || !in_loose) return GVerdict::kCorrect;
  return GVerdict::kBand;
}

struct InductionStep {
  int r = 0;
  double threshold = 0;      // 1 - beta - 4 r eps
  double bound = 0;          // 1 - beta - 4 r delta / alpha
  double min_probability = 0;
  double min_mean = 0;       // min over tuples of E_a rho(a + sum x)
  std::uint64_t tuples = 0;
  bool holds = false;
};

// Pr_{a in A}[rho_{A->Z}(a + x_1 + ... + x_r) >= 1 - beta - 4 r eps] >= 1 - beta - 4 r delta / alpha
// with beta = sqrt(eta + gamma1 / alpha^2), over sampled tuples from X.
inline std::vector<InductionStep> xtest_induction_check(const RhoTable& rho_az, const PointSet& x, int max_r,
                                                        const ParamSchedule& sched, double alpha,
                                                        std::size_t tuples, std::uint64_t seed) {
  if (x.empty()) throw std::invalid_argument("X is empty");
  const ParamSchedule s = sched.with_derived_budgets(alpha);
  const double beta = std::sqrt(s.eta + s.gamma1 / (alpha * alpha));
  const std::vector<std::uint64_t> xs = x.points();
  const std::vector<std::uint64_t> as = rho_az.A().points();
  std::vector<InductionStep> out;
  for (int r = 1; r <= max_r; ++r) {
    InductionStep st;
    st.r = r;
    st.threshold = 1 - beta - 4.0 * r * s.epsilon;
    st.bound = 1 - beta - 4.0 * r * s.delta / alpha;
    st.min_probability = 1;
    st.min_mean = 1;
    Rng rng(seed, StreamId::kMonteCarlo, static_cast<std::uint64_t>(r));
    for (std::size_t k = 0; k < tuples; ++k) {
      std::uint64_t sum = 0;
      for (int i = 0; i < r; ++i) sum ^= xs[rng.below(xs.size())];
      std::uint64_t good = 0;
      double mean = 0;
      for (std::uint64_t a : as) {
        const double v = rho_az(a ^ sum);
        mean += v;
        if (v >= st.threshold - kCompareTolerance) ++good;
      }
      st.min_probability = std::min(st.min_probability, static_cast<double>(good) / as.size());
      st.min_mean = std::min(st.min_mean, mean / as.size());
      ++st.tuples;
    }
    st.holds = st.min_probability >= st.bound - kCompareTolerance;
    out.push_back(st);
  }
  return out;
}

}  // namespace f2ap

#endif  // F2AP_SAMPLING_HPP_
