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

// Large Fourier coefficients of a +-1 function from query access.
//
// Prefix bucketing on the low coordinates: writing x = (y, u) with y the low
// j bits, the weight of all characters whose low j bits equal P is
//   W(P) = E_u (E_y f(y,u) chi_P(y))^2 = E_{u,y,z} f(y,u) f(z,u) chi_P(y + z).
// One batch of (u, y, z) samples per depth estimates W(P) for every prefix at
// once: accumulate f f' into a histogram over d = y + z and transform it.
// Buckets below nu^2/2 are pruned, survivors are extended by one bit, and
// full-length survivors get a direct coefficient estimate.

#ifndef F2AP_GOLDREICH_LEVIN_HPP_
#define F2AP_GOLDREICH_LEVIN_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/fourier.hpp"
#include "f2ap/parallel.hpp"
#include "f2ap/random.hpp"
#include "f2ap/sampling.hpp"

namespace f2ap {

struct Coefficient {
  BitVector alpha;
  double c = 0;
};

struct CoefficientList {
  std::vector<Coefficient> entries;  // alpha ascending
  double nu = 0;
  double delta_fail = 0;
  std::size_t k_max = 0;             // floor(4 / nu^2)
  std::int64_t samples_per_depth = 0;
  std::int64_t coefficient_samples = 0;
  bool capped = false;               // a sample count was cut by the per-depth cap
  std::uint64_t queries = 0;         // calls made to f
  std::size_t max_candidates = 0;    // largest surviving prefix set

  std::vector<BitVector> alphas() const {
    std::vector<BitVector> out;
    for (const auto& e : entries) out.push_back(e.alpha);
    return out;
  }
};

struct GlOptions {
  std::uint64_t seed = 0;
  double multiplier = 1;
  std::int64_t max_samples_per_depth = 0;  // 0: uncapped
};

namespace detail {

inline constexpr std::size_t kGlBlocks = 64;
inline constexpr int kGlHistogramBits = 20;

inline std::int64_t apply_cap(std::int64_t want, std::int64_t cap, bool& capped) {
  if (cap > 0 && want > cap) {
    capped = true;
    return cap;
  }
  return want;
}

}  // namespace detail

// Estimate of f^(alpha) = E f(x) (-1)^{<alpha,x>}; values lie in [-1,1], so
// accuracy gamma needs the Hoeffding count for gamma/2.
template <class F>
double estimate_coefficient(const F& f, int n, std::uint64_t alpha, double gamma, double fail_prob,
                            std::uint64_t seed) {
  const std::int64_t m = hoeffding_samples(gamma / 2, fail_prob);
  Rng rng(seed, StreamId::kCoefficient, alpha);
  double sum = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    const std::uint64_t x = rng.bits(n);
    sum += f(x) * (parity(x & alpha) ? -1.0 : 1.0);
  }
  return sum / static_cast<double>(m);
}

// f : uint64 -> int in {-1, +1}; must be safe to call concurrently.
template <class F>
CoefficientList goldreich_levin(const F& f, int n, double nu, double delta, const GlOptions& opt = {}) {
  check_dimension(n);
  if (!(nu > 0 && nu <= 1)) throw std::invalid_argument("nu must be in (0,1]");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0,1)");

  CoefficientList out;
  out.nu = nu;
  out.delta_fail = delta;
  out.k_max = static_cast<std::size_t>(std::floor(4.0 / (nu * nu)));
  const double kmax = static_cast<double>(std::max<std::size_t>(out.k_max, 1));
  const double want = opt.multiplier * (16.0 / std::pow(nu, 4)) * std::log(8.0 * n * kmax / delta);
  out.samples_per_depth = detail::apply_cap(
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(std::min(want, 9.0e18)))),
      opt.max_samples_per_depth, out.capped);
  std::atomic<std::uint64_t> queries{0};
  auto call = [&](std::uint64_t x) {
    queries.fetch_add(1, std::memory_order_relaxed);
    return static_cast<double>(f(x));
  };

  const double prune = nu * nu / 2;
  std::vector<std::uint64_t> cands{0};
  for (int j = 1; j <= n; ++j) {
    std::vector<std::uint64_t> next;
    next.reserve(cands.size() * 2);
    for (std::uint64_t p : cands) {
      next.push_back(p);
      next.push_back(p | (std::uint64_t{1} << (j - 1)));
    }
    const std::uint64_t low = low_mask(j);
    const std::int64_t samples = out.samples_per_depth;
    const bool dense = j <= detail::kGlHistogramBits;
    const std::size_t blocks = std::min<std::size_t>(detail::kGlBlocks, static_cast<std::size_t>(samples));

    std::vector<double> weight(next.size(), 0.0);
    if (dense) {
      std::vector<std::vector<double>> hist(blocks);
      parallel_blocks(static_cast<std::size_t>(samples), blocks, [&](std::size_t b, std::size_t lo, std::size_t hi) {
        std::vector<double>& h = hist[b];
        h.assign(std::size_t{1} << j, 0.0);
        Rng rng(opt.seed, StreamId::kGoldreichLevin, (static_cast<std::uint64_t>(j) << 32) | b);
        for (std::size_t i = lo; i < hi; ++i) {
          const std::uint64_t u = rng.bits(n) & ~low;
          const std::uint64_t y = rng.bits(j);
          const std::uint64_t z = rng.bits(j);
          h[y ^ z] += call(u | y) * call(u | z);
        }
      });
      std::vector<double> total(std::size_t{1} << j, 0.0);
      for (const auto& h : hist) {
        for (std::size_t d = 0; d < h.size(); ++d) total[d] += h[d];
      }
      wht_unscaled(total);
      for (std::size_t k = 0; k < next.size(); ++k) weight[k] = total[next[k]] / static_cast<double>(samples);
    } else {
      std::vector<std::unordered_map<std::uint64_t, double>> hist(blocks);
      parallel_blocks(static_cast<std::size_t>(samples), blocks, [&](std::size_t b, std::size_t lo, std::size_t hi) {
        Rng rng(opt.seed, StreamId::kGoldreichLevin, (static_cast<std::uint64_t>(j) << 32) | b);
        for (std::size_t i = lo; i < hi; ++i) {
          const std::uint64_t u = rng.bits(n) & ~low;
          const std::uint64_t y = rng.bits(j);
          const std::uint64_t z = rng.bits(j);
          hist[b][y ^ z] += call(u | y) * call(u | z);
        }
      });
      std::unordered_map<std::uint64_t, double> total;
      for (const auto& h : hist) {
        for (const auto& [d, v] : h) total[d] += v;
      }
      for (std::size_t k = 0; k < next.size(); ++k) {
        double s = 0;
        for (const auto& [d, v] : total) s += parity(d & next[k]) ? -v : v;
        weight[k] = s / static_cast<double>(samples);
      }
    }

    std::vector<std::size_t> order;
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (weight[k] >= prune) order.push_back(k);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (weight[a] != weight[b]) return weight[a] > weight[b];
      return next[a] < next[b];
    });
    if (order.size() > out.k_max) order.resize(out.k_max);
    cands.clear();
    for (std::size_t k : order) cands.push_back(next[k]);
    std::sort(cands.begin(), cands.end());
    out.max_candidates = std::max(out.max_candidates, cands.size());
    if (cands.empty()) break;
  }

  // One shared batch estimates every leaf to nu/4 with failure delta/(2 k_max).
  if (!cands.empty()) {
    out.coefficient_samples = detail::apply_cap(
        scaled_count(opt.multiplier, hoeffding_samples(nu / 8, delta / (2.0 * kmax))),
        opt.max_samples_per_depth, out.capped);
    const std::int64_t m = out.coefficient_samples;
    const std::size_t blocks = std::min<std::size_t>(detail::kGlBlocks, static_cast<std::size_t>(m));
    const bool dense = n <= detail::kGlHistogramBits;
    // Dense: histogram of f over sampled x, then one transform serves all leaves.
    const std::size_t width = dense ? (std::size_t{1} << n) : cands.size();
    std::vector<std::vector<double>> partial(blocks, std::vector<double>(width, 0.0));
    parallel_blocks(static_cast<std::size_t>(m), blocks, [&](std::size_t b, std::size_t lo, std::size_t hi) {
      Rng rng(opt.seed, StreamId::kCoefficient, b);
      for (std::size_t i = lo; i < hi; ++i) {
        const std::uint64_t x = rng.bits(n);
        const double v = call(x);
        if (dense) {
          partial[b][x] += v;
        } else {
          for (std::size_t k = 0; k < cands.size(); ++k) partial[b][k] += parity(x & cands[k]) ? -v : v;
        }
      }
    });
    std::vector<double> sums(width, 0.0);
    for (const auto& p : partial) {
      for (std::size_t k = 0; k < width; ++k) sums[k] += p[k];
    }
    if (dense) wht_unscaled(sums);
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const double c = sums[dense ? cands[k] : k] / static_cast<double>(m);
      if (std::abs(c) >= nu / 2) out.entries.push_back({BitVector(n, cands[k]), c});
    }
  }
  out.queries = queries.load();
  return out;
}

}  // namespace f2ap

#endif  // F2AP_GOLDREICH_LEVIN_HPP_
