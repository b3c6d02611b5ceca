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

// Fourier analysis on F_2^n with expectation-normalized conventions:
//   f^(t)     = E_x f(x) (-1)^{<x,t>}
//   (f * g)(x) = E_y f(y) g(x + y)
//   <f, g>    = E_x f(x) g(x)
// so (f * g)^ = f^ g^ and the inverse transform is an unscaled sum.

#ifndef F2AP_FOURIER_HPP_
#define F2AP_FOURIER_HPP_

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/point_set.hpp"

namespace f2ap {

inline constexpr double kSpectrumTolerance = 1e-12;

class RealTable {
 public:
  RealTable() = default;
  explicit RealTable(int n) : n_(n) {
    check_table_dimension(n);
    values_.assign(std::size_t{1} << n, 0.0);
  }
  RealTable(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    check_table_dimension(n);
    if (values_.size() != (std::size_t{1} << n)) {
      throw std::invalid_argument("table length is not 2^n");
    }
  }

  static RealTable indicator(const PointSet& a) {
    RealTable t(a.dim());
    for (std::uint64_t x : a.points()) t.values_[x] = 1.0;
    return t;
  }
  // 1_A / density(A), so that E mu_A = 1.
  static RealTable measure(const PointSet& a) {
    if (a.empty()) throw std::invalid_argument("measure of empty set");
    RealTable t(a.dim());
    const double w = 1.0 / a.density();
    for (std::uint64_t x : a.points()) t.values_[x] = w;
    return t;
  }

  int dim() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t x) const { return values_[x]; }
  double& operator[](std::size_t x) { return values_[x]; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  double mean() const {
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
  }
  double l1_norm() const {
    double s = 0.0;
    for (double v : values_) s += std::abs(v);
    return s / static_cast<double>(values_.size());
  }
  double max_abs_diff(const RealTable& o) const {
    if (o.n_ != n_) throw DimensionMismatch("table dimensions differ");
    double m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      m = std::max(m, std::abs(values_[i] - o.values_[i]));
    }
    return m;
  }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

// In-place unscaled butterfly: out[t] = sum_x in[x] (-1)^{<x,t>}.
inline void wht_unscaled(std::span<double> v) {
  const std::size_t size = v.size();
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

inline RealTable wht(const RealTable& f) {
  RealTable out = f;
  wht_unscaled(out.values());
  const double scale = 1.0 / static_cast<double>(f.size());
  for (double& x : out.values()) x *= scale;
  return out;
}

inline RealTable inverse_wht(const RealTable& fhat) {
  RealTable out = fhat;
  wht_unscaled(out.values());
  return out;
}

inline RealTable pointwise_product(const RealTable& f, const RealTable& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("table dimensions differ");
  RealTable out(f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
  return out;
}

inline RealTable convolve(const RealTable& f, const RealTable& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("table dimensions differ");
  return inverse_wht(pointwise_product(wht(f), wht(g)));
}

// k-fold self-convolution f * ... * f, k >= 1.
inline RealTable convolve_power(const RealTable& f, int k) {
  if (k < 1) throw std::invalid_argument("convolution power must be positive");
  RealTable fh = wht(f);
  for (double& x : fh.values()) x = std::pow(x, k);
  return inverse_wht(fh);
}

inline double inner_product(const RealTable& f, const RealTable& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("table dimensions differ");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s / static_cast<double>(f.size());
}

// Spec_rho(f) = {t : |f^(t)| >= rho ||f||_1}, ascending.
inline std::vector<BitVector> spec_rho(const RealTable& f, double rho) {
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must be in (0, 1]");
  const RealTable fh = wht(f);
  const double threshold = rho * f.l1_norm();
  std::vector<BitVector> out;
  for (std::size_t t = 0; t < fh.size(); ++t) {
    if (std::abs(fh[t]) >= threshold - kSpectrumTolerance) out.emplace_back(f.dim(), t);
  }
  return out;
}

inline std::vector<BitVector> spec_rho(const PointSet& a, double rho) {
  return spec_rho(RealTable::indicator(a), rho);
}

struct ChangReport {
  std::size_t spectrum_size = 0;
  int span_dim = 0;
  double bound = 0.0;  // 8 log2(2^n / |A|) / rho^2
  bool holds = false;
};

inline ChangReport chang_check(const PointSet& a, double rho) {
  if (a.empty()) throw std::invalid_argument("empty set");
  std::vector<BitVector> s = spec_rho(a, rho);
  ChangReport r;
  r.spectrum_size = s.size();
  r.span_dim = Subspace::span_of(a.dim(), s).dim();
  r.bound = 8.0 * std::log2(1.0 / a.density()) / (rho * rho);
  r.holds = r.span_dim <= r.bound + 1e-9;
  return r;
}

inline constexpr double kPositivityTolerance = 1e-9;

// Smallest v in V with table[v] <= 1e-9, if any. Used with h*h*h*h tables.
inline std::optional<std::uint64_t> smallest_nonpositive(const RealTable& table, const Subspace& v) {
  if (table.dim() != v.ambient_dim()) throw DimensionMismatch("table and subspace differ");
  std::optional<std::uint64_t> witness;
  for_each_point(v, [&](std::uint64_t x) {
    if (table[x] <= kPositivityTolerance && (!witness || x < *witness)) witness = x;
  }, kMaxTableDimension);
  return witness;
}

}  // namespace f2ap

#endif  // F2AP_FOURIER_HPP_
