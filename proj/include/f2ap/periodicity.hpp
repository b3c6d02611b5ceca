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

// Almost-periods of sumsets, computed exactly.
//
// rho_{A->B}(y) = |(y + A) n B| / |A| is estimated by sample sequences
// a in A^t through rho_hat_a(y) = #{i : y + a_i in B} / t. A sequence is a
// good estimator when the estimate is within tolerance on all but a 2*delta
// fraction of A + B. Good sequences are grouped by the fiber label
// (a_1 + a_2, ..., a_1 + a_t); a largest fiber yields the period set
// X = {a_hat_1 + a_1 : a in fiber}, and V = Spec_{1/2}(X)^perp is the
// subspace of periods.

#ifndef F2AP_PERIODICITY_HPP_
#define F2AP_PERIODICITY_HPP_

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/fourier.hpp"
#include "f2ap/parallel.hpp"
#include "f2ap/point_set.hpp"
#include "f2ap/random.hpp"
#include "f2ap/schedule.hpp"

namespace f2ap {

inline constexpr double kCompareTolerance = 1e-12;

class RhoTable {
 public:
  RhoTable() = default;
  RhoTable(const PointSet& a, const PointSet& b) : a_(a), b_(b) {
    if (a.empty()) throw std::invalid_argument("rho needs nonempty A");
    if (a.dim() != b.dim()) throw DimensionMismatch("set dimensions differ");
    const RealTable r = convolve(RealTable::measure(a), RealTable::indicator(b));
    // Values are multiples of 1/|A|; snapping to the count removes
    // transform round-off so threshold comparisons are exact.
    counts_.resize(r.size());
    const double m = static_cast<double>(a.size());
    for (std::size_t y = 0; y < r.size(); ++y) {
      counts_[y] = static_cast<std::uint32_t>(std::llround(r[y] * m));
    }
  }

  int dim() const { return a_.dim(); }
  std::size_t size() const { return counts_.size(); }
  double operator()(std::uint64_t y) const {
    return static_cast<double>(counts_[y]) / static_cast<double>(a_.size());
  }
  std::uint32_t count(std::uint64_t y) const { return counts_[y]; }
  std::size_t a_size() const { return a_.size(); }
  const PointSet& A() const { return a_; }
  const PointSet& B() const { return b_; }

  RealTable table() const {
    RealTable t(dim());
    for (std::size_t y = 0; y < counts_.size(); ++y) t[y] = (*this)(y);
    return t;
  }

 private:
  PointSet a_;
  PointSet b_;
  std::vector<std::uint32_t> counts_;
};

inline RhoTable rho(const PointSet& a, const PointSet& b) { return RhoTable(a, b); }

struct SampleSeq {
  int n = 0;
  std::vector<std::uint64_t> a;

  int length() const { return static_cast<int>(a.size()); }
  SampleSeq shifted(std::uint64_t x) const {
    SampleSeq s = *this;
    for (auto& v : s.a) v ^= x;
    return s;
  }
  std::vector<BitVector> vectors() const {
    std::vector<BitVector> out;
    for (std::uint64_t v : a) out.emplace_back(n, v);
    return out;
  }
  bool operator==(const SampleSeq&) const = default;
};

inline double rho_hat(const SampleSeq& seq, const PointSet& b, std::uint64_t y) {
  if (seq.a.empty()) throw std::invalid_argument("empty sample sequence");
  int hits = 0;
  for (std::uint64_t a : seq.a) hits += b.contains(y ^ a) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(seq.a.size());
}

struct GoodnessSpec {
  double epsilon = 0.1;
  double delta = 0.1;
  bool refined = false;

  void validate() const {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must be in (0,1)");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must be in (0,1)");
  }
  double tolerance(double rho_y) const { return refined ? epsilon * std::sqrt(rho_y) : epsilon; }
  bool well_estimated(double rho_y, double estimate) const {
    return std::abs(rho_y - estimate) <= tolerance(rho_y) + kCompareTolerance;
  }
  // Per-point failure probability of a uniform sequence (plain or variance form).
  static double hoeffding_delta(double epsilon, int t, bool refined) {
    return refined ? 2.0 * std::exp(-epsilon * epsilon * t / 4.0)
                   : 2.0 * std::exp(-2.0 * epsilon * epsilon * t);
  }
};

struct GoodEstimatorSet {
  int n = 0;
  int t = 0;
  std::vector<std::uint64_t> alphabet;  // A, ascending
  std::vector<std::uint8_t> member;     // indexed by sequence, first entry most significant
  std::uint64_t count = 0;
  std::uint64_t sumset_size = 0;        // |A + B|
  std::uint64_t bad_limit = 0;          // largest admissible #bad y in A + B

  std::uint64_t total() const { return member.size(); }
  bool contains(std::uint64_t index) const { return member[index] != 0; }

  std::vector<std::uint64_t> digits(std::uint64_t index) const {
    std::vector<std::uint64_t> d(t);
    const std::uint64_t m = alphabet.size();
    for (int i = t - 1; i >= 0; --i) {
      d[i] = index % m;
      index /= m;
    }
    return d;
  }
  SampleSeq sequence(std::uint64_t index) const {
    SampleSeq s;
    s.n = n;
    for (std::uint64_t d : digits(index)) s.a.push_back(alphabet[d]);
    return s;
  }
  std::optional<std::uint64_t> index_of(const SampleSeq& s) const {
    if (s.length() != t) return std::nullopt;
    std::uint64_t idx = 0;
    for (std::uint64_t v : s.a) {
      auto it = std::lower_bound(alphabet.begin(), alphabet.end(), v);
      if (it == alphabet.end() || *it != v) return std::nullopt;
      idx = idx * alphabet.size() + static_cast<std::uint64_t>(it - alphabet.begin());
    }
    return idx;
  }
};

inline std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && total > cap / base) {
      throw CapExceeded("sequence count exceeds enumeration cap");
    }
    total *= base;
  }
  if (total > cap) throw CapExceeded("sequence count exceeds enumeration cap");
  return total;
}

// Exact G[eps, 2 delta] by enumerating A^t. Per sequence, the hit counts
// k(y) = #{i : y in B + a_i} are kept bit-sliced across words of the y
// bitmap, and compared against precomputed masks {y : rho(y) ~ k/t}.
inline GoodEstimatorSet good_estimator_set(const PointSet& a, const PointSet& b, int t,
                                           const GoodnessSpec& spec,
                                           std::uint64_t cap = std::uint64_t{1} << 24) {
  spec.validate();
  if (t < 1) throw std::invalid_argument("t must be >= 1");
  if (a.empty()) throw std::invalid_argument("A must be nonempty");
  if (a.dim() != b.dim()) throw DimensionMismatch("set dimensions differ");

  GoodEstimatorSet g;
  g.n = a.dim();
  g.t = t;
  g.alphabet = a.points();
  const std::uint64_t m = g.alphabet.size();
  const std::uint64_t total = checked_power(m, t, cap);

  const RhoTable rho_ab(a, b);
  const PointSet ab = sumset(a, b);
  g.sumset_size = ab.size();
  g.bad_limit = static_cast<std::uint64_t>(
      std::floor(2.0 * spec.delta * static_cast<double>(ab.size()) + 1e-9));

  const std::size_t words = ab.words().size();
  std::vector<std::uint64_t> shifted(m * words);
  for (std::uint64_t i = 0; i < m; ++i) {
    const PointSet s = b.shifted(g.alphabet[i]);
    std::copy(s.words().begin(), s.words().end(), shifted.begin() + i * words);
  }
  std::vector<std::uint64_t> good(static_cast<std::size_t>(t + 1) * words, 0);
  for (std::uint64_t y = 0; y < ab.universe_size(); ++y) {
    const double r = rho_ab(y);
    for (int k = 0; k <= t; ++k) {
      if (spec.well_estimated(r, static_cast<double>(k) / t)) {
        good[k * words + (y >> 6)] |= std::uint64_t{1} << (y & 63);
      }
    }
  }
  const auto& valid = ab.words();
  const int planes = std::bit_width(static_cast<unsigned>(t));

  g.member.assign(total, 0);
  const std::size_t blocks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(256, total / 4096));
  parallel_blocks(total, blocks, [&](std::size_t, std::size_t lo, std::size_t hi) {
    std::vector<std::uint64_t> digit(t);
    {
      std::uint64_t x = lo;
      for (int i = t - 1; i >= 0; --i) {
        digit[i] = x % m;
        x /= m;
      }
    }
    // state[level][word][plane]: counts after adding entries 0..level.
    std::vector<std::uint64_t> state(static_cast<std::size_t>(t) * words * planes, 0);
    auto rebuild = [&](int from) {
      for (int level = from; level < t; ++level) {
        const std::uint64_t* src = shifted.data() + digit[level] * words;
        std::uint64_t* cur = state.data() + static_cast<std::size_t>(level) * words * planes;
        const std::uint64_t* prev = level == 0 ? nullptr : cur - words * planes;
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t carry = src[w];
          for (int p = 0; p < planes; ++p) {
            const std::uint64_t c = prev ? prev[w * planes + p] : 0;
            cur[w * planes + p] = c ^ carry;
            carry &= c;
          }
        }
      }
    };
    rebuild(0);
    const std::uint64_t* last = state.data() + static_cast<std::size_t>(t - 1) * words * planes;
    for (std::size_t idx = lo; idx < hi; ++idx) {
      std::uint64_t bad = 0;
      for (std::size_t w = 0; w < words && bad <= g.bad_limit; ++w) {
        const std::uint64_t* c = last + w * planes;
        std::uint64_t ok = 0;
        for (int k = 0; k <= t; ++k) {
          std::uint64_t eq = ~std::uint64_t{0};
          for (int p = 0; p < planes; ++p) eq &= ((k >> p) & 1) ? c[p] : ~c[p];
          ok |= eq & good[k * words + w];
        }
        bad += static_cast<std::uint64_t>(std::popcount(valid[w] & ~ok));
      }
      g.member[idx] = bad <= g.bad_limit ? 1 : 0;
      int j = t - 1;
      while (j >= 0 && ++digit[j] == m) {
        digit[j] = 0;
        --j;
      }
      if (idx + 1 < hi) rebuild(std::max(j, 0));
    }
  });
  for (std::uint8_t v : g.member) g.count += v;
  return g;
}

struct PeriodSet {
  PointSet A;
  PointSet B;
  PointSet X;
  BitVector shift_witness;
  SampleSeq a_hat;
  GoodnessSpec spec;
  int t = 0;
  double K = 0;       // |2A| / |A|
  double alpha = 0;   // density of A
  std::uint64_t good_count = 0;
  std::uint64_t total_sequences = 0;
  std::uint64_t fiber_size = 0;
  std::vector<std::uint64_t> fiber_label;  // (a_1 + a_2, ..., a_1 + a_t)
};

inline PeriodSet period_set_from(const GoodEstimatorSet& g, const PointSet& a, const PointSet& b,
                                 const GoodnessSpec& spec) {
  if (g.count == 0) {
    throw Error("no good estimator sequence; increase t or relax epsilon/delta");
  }
  const int n = g.n;
  const int t = g.t;
  if (static_cast<long>(n) * (t - 1) > 64) throw CapExceeded("fiber label exceeds 64 bits");
  const std::uint64_t m = g.alphabet.size();

  auto label_of = [&](std::uint64_t idx) {
    std::uint64_t d[64];
    std::uint64_t x = idx;
    for (int i = t - 1; i >= 0; --i) {
      d[i] = x % m;
      x /= m;
    }
    const std::uint64_t a1 = g.alphabet[d[0]];
    std::uint64_t label = 0;
    for (int i = 1; i < t; ++i) {
      label = (label << n) | (a1 ^ g.alphabet[d[i]]);
    }
    return label;
  };

  const int label_bits = n * (t - 1);
  std::uint64_t best_label = 0;
  std::uint64_t best_count = 0;
  if (label_bits <= 22) {
    std::vector<std::uint32_t> counts(std::size_t{1} << label_bits, 0);
    for (std::uint64_t idx = 0; idx < g.total(); ++idx) {
      if (g.member[idx]) ++counts[label_of(idx)];
    }
    for (std::size_t l = 0; l < counts.size(); ++l) {
      if (counts[l] > best_count) {
        best_count = counts[l];
        best_label = l;
      }
    }
  } else {
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t idx = 0; idx < g.total(); ++idx) {
      if (g.member[idx]) ++counts[label_of(idx)];
    }
    for (const auto& [l, c] : counts) {
      if (c > best_count || (c == best_count && l < best_label)) {
        best_count = c;
        best_label = l;
      }
    }
  }

  PeriodSet p;
  p.A = a;
  p.B = b;
  p.X = PointSet(n);
  p.spec = spec;
  p.t = t;
  p.alpha = a.density();
  p.K = doubling_constant(a);
  p.good_count = g.count;
  p.total_sequences = g.total();
  p.fiber_size = best_count;
  for (int i = t - 2; i >= 0; --i) {
    p.fiber_label.push_back((best_label >> (n * i)) & low_mask(n));
  }
  bool have_hat = false;
  for (std::uint64_t idx = 0; idx < g.total(); ++idx) {
    if (!g.member[idx] || label_of(idx) != best_label) continue;
    const SampleSeq s = g.sequence(idx);
    if (!have_hat) {
      p.a_hat = s;
      p.shift_witness = BitVector(n, s.a[0]);
      have_hat = true;
    }
    p.X.insert(p.shift_witness.bits() ^ s.a[0]);
  }
  return p;
}

inline PeriodSet build_period_set(const PointSet& a, const PointSet& b, int t,
                                  const GoodnessSpec& spec,
                                  std::uint64_t cap = std::uint64_t{1} << 24) {
  const GoodEstimatorSet g = good_estimator_set(a, b, t, spec, cap);
  return period_set_from(g, a, b, spec);
}

struct PeriodSetCheck {
  bool contained_in_shift = false;  // X subset of a_hat_1 + A
  double size_bound = 0;            // |A| / (2 K^{t-1})
  bool size_bound_holds = false;
  bool half_good = false;           // |G| >= |A|^t / 2, the hypothesis behind size_bound
  double pigeonhole_bound = 0;      // |G| / |2A|^{t-1}
  bool pigeonhole_holds = false;
};

inline PeriodSetCheck check_period_properties(const PeriodSet& p) {
  PeriodSetCheck c;
  c.contained_in_shift = true;
  for (std::uint64_t x : p.X.points()) {
    if (!p.A.contains(x ^ p.shift_witness.bits())) c.contained_in_shift = false;
  }
  const double a_size = static_cast<double>(p.A.size());
  const double two_a = p.K * a_size;
  c.size_bound = a_size / (2.0 * std::pow(p.K, p.t - 1));
  c.size_bound_holds = static_cast<double>(p.X.size()) >= c.size_bound - 1e-9;
  c.half_good = 2 * p.good_count >= p.total_sequences;
  c.pigeonhole_bound = static_cast<double>(p.good_count) / std::pow(two_a, p.t - 1);
  c.pigeonhole_holds = static_cast<double>(p.X.size()) >= c.pigeonhole_bound - 1e-9;
  return c;
}

// Counts y failing the almost-period relation for one shift s:
// plain: |rho(y) - rho(y + s)| > tol; refined: rho(y) - rho(y + s) > tol sqrt(rho(y)).
struct ShiftFailures {
  std::uint64_t in_s = 0;
  std::uint64_t global = 0;
};

inline ShiftFailures shift_failures(const RhoTable& r, const PointSet& s, std::uint64_t shift,
                                    double tol, bool refined) {
  ShiftFailures f;
  for (std::uint64_t y = 0; y < r.size(); ++y) {
    const double a = r(y);
    const double b = r(y ^ shift);
    const bool fail = refined ? (a - b > tol * std::sqrt(a) + kCompareTolerance)
                              : (std::abs(a - b) > tol + kCompareTolerance);
    if (fail) {
      ++f.global;
      if (s.contains(y)) ++f.in_s;
    }
  }
  return f;
}

inline double period_failure_exponent(const GoodnessSpec& spec, int t) {
  return spec.refined ? std::exp(-spec.epsilon * spec.epsilon * t / 4.0)
                      : std::exp(-2.0 * spec.epsilon * spec.epsilon * t);
}

struct AlmostPeriodReport {
  int ell = 1;
  double stated_bound = 0;      // 8 l (|A+B|/|S|) e^{-2 eps^2 t} (refined: e^{-eps^2 t/4})
  double structural_bound = 0;  // 4 l delta |A+B| / |S|
  double global_bound = 0;      // 8 l |A+B| e^{...}, failures over all of F_2^n
  double max_fraction = 0;
  std::uint64_t max_global_failures = 0;
  std::uint64_t worst_shift = 0;
  std::uint64_t checked = 0;
  bool within_stated = true;
  bool within_structural = true;
  bool within_global = true;
};

// Property 3: every x in X is a 2 eps almost-period on S.
inline AlmostPeriodReport verify_property3(const PeriodSet& p, const RhoTable& r, const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("S must be nonempty");
  AlmostPeriodReport rep;
  const double ab = static_cast<double>(sumset(p.A, p.B).size());
  const double e = period_failure_exponent(p.spec, p.t);
  rep.stated_bound = 8.0 * ab / s.size() * e;
  rep.structural_bound = 4.0 * p.spec.delta * ab / s.size();
  rep.global_bound = 8.0 * ab * e;
  for (std::uint64_t x : p.X.points()) {
    const ShiftFailures f = shift_failures(r, s, x, 2.0 * p.spec.epsilon, p.spec.refined);
    const double frac = static_cast<double>(f.in_s) / s.size();
    if (frac > rep.max_fraction) {
      rep.max_fraction = frac;
      rep.worst_shift = x;
    }
    rep.max_global_failures = std::max(rep.max_global_failures, f.global);
    ++rep.checked;
  }
  rep.within_stated = rep.max_fraction <= rep.stated_bound + 1e-12;
  rep.within_structural = rep.max_fraction <= rep.structural_bound + 1e-12;
  rep.within_global = static_cast<double>(rep.max_global_failures) <= rep.global_bound + 1e-9;
  return rep;
}

struct IteratedOptions {
  std::size_t tuples = 500;
  std::uint64_t seed = 0;
  std::uint64_t exhaustive_limit = 4096;
};

struct IteratedRow {
  std::uint64_t tuple_id = 0;
  std::vector<std::uint64_t> xs;
  std::uint64_t sum = 0;
  double failure_fraction = 0;
  double bound = 0;
};

struct IteratedReport {
  AlmostPeriodReport summary;
  bool exhaustive = false;
  std::vector<IteratedRow> rows;
};

// x_1 + ... + x_l is a 2 eps l almost-period on S for all tuples from X^l.
inline IteratedReport verify_iterated(const PeriodSet& p, const RhoTable& r, int ell,
                                      const PointSet& s, const IteratedOptions& opt = {}) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  if (s.empty()) throw std::invalid_argument("S must be nonempty");
  const std::vector<std::uint64_t> xs = p.X.points();
  IteratedReport rep;
  AlmostPeriodReport& sum = rep.summary;
  sum.ell = ell;
  const double ab = static_cast<double>(sumset(p.A, p.B).size());
  const double e = period_failure_exponent(p.spec, p.t);
  sum.stated_bound = 8.0 * ell * ab / s.size() * e;
  sum.structural_bound = 4.0 * ell * p.spec.delta * ab / s.size();
  sum.global_bound = 8.0 * ell * ab * e;

  std::vector<double> cache_frac(r.size(), -1.0);
  std::vector<std::uint64_t> cache_global(r.size(), 0);
  const double tol = 2.0 * p.spec.epsilon * ell;
  auto eval = [&](std::uint64_t shift) {
    if (cache_frac[shift] < 0) {
      const ShiftFailures f = shift_failures(r, s, shift, tol, p.spec.refined);
      cache_frac[shift] = static_cast<double>(f.in_s) / s.size();
      cache_global[shift] = f.global;
    }
  };

  double space = std::pow(static_cast<double>(xs.size()), ell);
  rep.exhaustive = space <= static_cast<double>(opt.exhaustive_limit);
  const std::uint64_t count = rep.exhaustive ? static_cast<std::uint64_t>(space) : opt.tuples;
  Rng rng(opt.seed, StreamId::kTuples, static_cast<std::uint64_t>(ell));
  for (std::uint64_t id = 0; id < count; ++id) {
    IteratedRow row;
    row.tuple_id = id;
    std::uint64_t code = id;
    for (int i = 0; i < ell; ++i) {
      std::uint64_t j;
      if (rep.exhaustive) {
        j = code % xs.size();
        code /= xs.size();
      } else {
        j = rng.below(xs.size());
      }
      row.xs.push_back(xs[j]);
      row.sum ^= xs[j];
    }
    eval(row.sum);
    row.failure_fraction = cache_frac[row.sum];
    row.bound = sum.stated_bound;
    if (row.failure_fraction > sum.max_fraction) {
      sum.max_fraction = row.failure_fraction;
      sum.worst_shift = row.sum;
    }
    sum.max_global_failures = std::max(sum.max_global_failures, cache_global[row.sum]);
    ++sum.checked;
    rep.rows.push_back(std::move(row));
  }
  sum.within_stated = sum.max_fraction <= sum.stated_bound + 1e-12;
  sum.within_structural = sum.max_fraction <= sum.structural_bound + 1e-12;
  sum.within_global = static_cast<double>(sum.max_global_failures) <= sum.global_bound + 1e-9;
  return rep;
}

struct PeriodSubspace {
  Subspace V;
  std::size_t spectrum_size = 0;
  int codim = 0;
  double paper_codim_bound = 0;  // 32 log2(2 / alpha^t)
  double parseval_cap = 0;       // 4 / alpha_X, caps |Spec_{1/2}(X)|
};

inline PeriodSubspace period_subspace(const PointSet& x, double alpha, int t) {
  if (x.empty()) throw std::invalid_argument("period set is empty");
  const std::vector<BitVector> spec = spec_rho(x, 0.5);
  PeriodSubspace out;
  out.V = Subspace::from_perp(x.dim(), spec);
  out.spectrum_size = spec.size();
  out.codim = out.V.codim();
  out.paper_codim_bound = PaperBounds::period_codim(alpha, t);
  out.parseval_cap = 4.0 / x.density();
  return out;
}

inline PeriodSubspace period_subspace(const PeriodSet& p) {
  return period_subspace(p.X, p.alpha, p.t);
}

struct SubspaceFourierReport {
  int ell = 0;
  double max_deviation = 0;
  double bound = 0;           // 2^{-l} sqrt(|B|/|A|)
  double two_sided_bound = 0; // 2^{1-l} sqrt(|B|/|A|), keeping |1 - chi_v| <= 2
  std::uint64_t worst_y = 0;
  std::uint64_t worst_v = 0;
  bool holds = false;
};

// g = mu_X^{*l} * mu_A * 1_B; checks |g(y) - g(y + v)| for every y and v in V.
inline SubspaceFourierReport subspace_fourier_check(const PointSet& a, const PointSet& b,
                                                    const PointSet& x, const Subspace& v, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  RealTable gh = wht(RealTable::measure(a));
  const RealTable xh = wht(RealTable::measure(x));
  const RealTable bh = wht(RealTable::indicator(b));
  for (std::size_t i = 0; i < gh.size(); ++i) gh[i] *= std::pow(xh[i], ell) * bh[i];
  const RealTable g = inverse_wht(gh);

  SubspaceFourierReport rep;
  rep.ell = ell;
  const double root = std::sqrt(static_cast<double>(b.size()) / static_cast<double>(a.size()));
  rep.bound = std::ldexp(root, -ell);
  rep.two_sided_bound = 2.0 * rep.bound;
  for_each_point(v, [&](std::uint64_t s) {
    for (std::uint64_t y = 0; y < g.size(); ++y) {
      const double d = std::abs(g[y] - g[y ^ s]);
      if (d > rep.max_deviation) {
        rep.max_deviation = d;
        rep.worst_y = y;
        rep.worst_v = s;
      }
    }
  }, kMaxTableDimension);
  rep.holds = rep.max_deviation <= rep.bound + 1e-9;
  return rep;
}

struct AveragingReport {
  double epsilon = 0;
  double eta = 0;
  double delta_max = 0;       // worst per-sum failure fraction at epsilon
  double fraction_close = 0;  // Pr_{y in S}[|rho(y) - E rho(y + sum x)| <= eps + eta]
  double required = 0;        // 1 - delta_max / eta
  bool holds = false;
};

// Markov averaging over X^l: the per-tuple bound transfers to the expectation.
inline AveragingReport averaging_check(const RhoTable& r, const PointSet& x, int ell,
                                       const PointSet& s, double epsilon, double eta) {
  if (s.empty() || x.empty()) throw std::invalid_argument("sets must be nonempty");
  AveragingReport rep;
  rep.epsilon = epsilon;
  rep.eta = eta;
  const PointSet support = iterated_sumset(x, ell);
  for (std::uint64_t sh : support.points()) {
    const ShiftFailures f = shift_failures(r, s, sh, epsilon, false);
    rep.delta_max = std::max(rep.delta_max, static_cast<double>(f.in_s) / s.size());
  }
  const RealTable avg = convolve(convolve_power(RealTable::measure(x), ell), r.table());
  std::uint64_t close = 0;
  for (std::uint64_t y : s.points()) {
    if (std::abs(r(y) - avg[y]) <= epsilon + eta + 1e-9) ++close;
  }
  rep.fraction_close = static_cast<double>(close) / s.size();
  rep.required = 1.0 - rep.delta_max / eta;
  rep.holds = rep.fraction_close >= rep.required - 1e-12;
  return rep;
}

struct SubspaceCorollaryReport {
  double eps_prime = 0;  // 4 eps l + 2 eta + 2^{-l} sqrt(|B|/|A|)
  double bound = 0;      // 16 (l/eta) (|A+B|/|S|) e^{-2 eps^2 t}
  double max_failure = 0;
  std::uint64_t worst_v = 0;
  bool holds = false;
};

// Every v in V is an eps'-almost-period on S, measured exactly.
inline SubspaceCorollaryReport subspace_corollary_check(const PeriodSet& p, const RhoTable& r,
                                                        const Subspace& v, const PointSet& s,
                                                        int ell, double eta) {
  SubspaceCorollaryReport rep;
  const double ab = static_cast<double>(sumset(p.A, p.B).size());
  rep.eps_prime = 4.0 * p.spec.epsilon * ell + 2.0 * eta +
                  std::ldexp(std::sqrt(static_cast<double>(p.B.size()) / p.A.size()), -ell);
  rep.bound = 16.0 * (ell / eta) * ab / s.size() * std::exp(-2.0 * p.spec.epsilon * p.spec.epsilon * p.t);
  for_each_point(v, [&](std::uint64_t sh) {
    const ShiftFailures f = shift_failures(r, s, sh, rep.eps_prime, false);
    const double frac = static_cast<double>(f.in_s) / s.size();
    if (frac > rep.max_failure) {
      rep.max_failure = frac;
      rep.worst_v = sh;
    }
  }, kMaxTableDimension);
  rep.holds = rep.max_failure <= rep.bound + 1e-12;
  return rep;
}

struct MajorityShift {
  std::uint64_t best_shift = 0;  // s in 2A maximizing |V n (s + 2A)|
  std::uint64_t best_count = 0;
  std::uint64_t v_size = 0;
  bool implies_containment = false;  // best_count > |V|/2, hence V in 4A
};

// |V n (s + 2A)| for all s at once via 2^n (1_V * 1_{2A})(s).
inline MajorityShift majority_shift(const PointSet& two_a, const Subspace& v) {
  MajorityShift m;
  const PointSet vs = PointSet::from_subspace(v);
  m.v_size = vs.size();
  const RealTable c = convolve(RealTable::indicator(vs), RealTable::indicator(two_a));
  const double scale = static_cast<double>(c.size());
  for (std::uint64_t s : two_a.points()) {
    const auto cnt = static_cast<std::uint64_t>(std::llround(c[s] * scale));
    if (cnt > m.best_count) {
      m.best_count = cnt;
      m.best_shift = s;
    }
  }
  m.implies_containment = 2 * m.best_count > m.v_size;
  return m;
}

struct ExactBogolyubovResult {
  ParamSchedule schedule;
  PeriodSet period_set;
  PeriodSubspace subspace;
  bool certificate_pass = false;
  std::optional<BitVector> witness;  // smallest v in V outside 4A
  MajorityShift majority;
};

inline ExactBogolyubovResult exact_bogolyubov(const PointSet& a, const ParamSchedule& sched) {
  sched.validate();
  if (a.empty()) throw std::invalid_argument("A must be nonempty");
  ExactBogolyubovResult res;
  res.schedule = sched;
  const PointSet two_a = sumset(a, a);
  GoodnessSpec spec{sched.epsilon, sched.delta, false};
  res.period_set = build_period_set(a, two_a, sched.t, spec, sched.enumeration_cap);
  res.subspace = period_subspace(res.period_set);

  const RealTable four = convolve_power(RealTable::indicator(a), 4);
  if (auto w = smallest_nonpositive(four, res.subspace.V)) {
    res.witness = BitVector(a.dim(), *w);
  }
  res.certificate_pass = !res.witness.has_value();
  res.majority = majority_shift(two_a, res.subspace.V);
  if (res.majority.implies_containment && !res.certificate_pass) {
    throw std::logic_error("majority shift implies V in 4A but a witness was found");
  }
  return res;
}

struct ClassicalBogolyubovResult {
  Subspace V;
  double threshold = 0;  // sqrt(alpha/2), relative to ||1_A||_1 = alpha
  std::size_t spectrum_size = 0;
  int codim = 0;
  double codim_bound = 0;  // 2 / alpha^2
  bool certificate_pass = false;
  std::optional<BitVector> witness;
};

// V = Spec_rho(1_A)^perp with rho = sqrt(alpha/2). For v in V,
//   1_A^{*4}(v) = sum_t 1_A^(t)^4 chi_t(v)
//              >= alpha^4 - sum_{t notin Spec} 1_A^(t)^4
//              >  alpha^4 - (rho alpha)^2 sum_t 1_A^(t)^2 = alpha^4 - rho^2 alpha^3 = alpha^4/2,
// using chi_t(v) = 1 on V^perp, which contains Spec and t = 0. Parseval gives
// |Spec| <= alpha / (rho alpha)^2 = 2/alpha^2.
inline ClassicalBogolyubovResult classical_bogolyubov(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("A must be nonempty");
  ClassicalBogolyubovResult res;
  const double alpha = a.density();
  res.threshold = std::sqrt(alpha / 2.0);
  const std::vector<BitVector> spec = spec_rho(a, res.threshold);
  res.spectrum_size = spec.size();
  res.V = Subspace::from_perp(a.dim(), spec);
  res.codim = res.V.codim();
  res.codim_bound = PaperBounds::classical_codim(alpha);
  const RealTable four = convolve_power(RealTable::indicator(a), 4);
  if (auto w = smallest_nonpositive(four, res.V)) res.witness = BitVector(a.dim(), *w);
  res.certificate_pass = !res.witness.has_value();
  return res;
}

}  // namespace f2ap

#endif  // F2AP_PERIODICITY_HPP_
