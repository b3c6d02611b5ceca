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

// Brute-force references for tiny n. Nothing here calls the transforms,
// sumset routines or echelon code of the library; inputs and outputs use the
// library's container types only.

#ifndef F2AP_ORACLE_HPP_
#define F2AP_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/fourier.hpp"
#include "f2ap/point_set.hpp"

namespace f2ap::oracle {

namespace detail {

inline int dot_parity(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a & b;
  int p = 0;
  while (x) {
    p ^= 1;
    x &= x - 1;
  }
  return p;
}

inline std::vector<char> membership(const PointSet& s) {
  std::vector<char> m(std::size_t{1} << s.dim(), 0);
  for (std::uint64_t x = 0; x < m.size(); ++x) m[x] = s.contains(x) ? 1 : 0;
  return m;
}

// All points of span(rows) + shift, by doubling.
inline std::vector<std::uint64_t> span_points(const std::vector<std::uint64_t>& rows, std::uint64_t shift) {
  std::vector<std::uint64_t> pts{shift};
  for (std::uint64_t r : rows) {
    const std::size_t k = pts.size();
    for (std::size_t i = 0; i < k; ++i) pts.push_back(pts[i] ^ r);
  }
  return pts;
}

}  // namespace detail

// (f * g)(x) = 2^{-n} sum_y f(y) g(x + y), O(4^n).
inline RealTable naive_convolve(const RealTable& f, const RealTable& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch("table dimensions differ");
  if (f.dim() > 12) throw CapExceeded("naive_convolve needs n <= 12");
  RealTable out(f.dim());
  const std::size_t size = f.size();
  for (std::size_t x = 0; x < size; ++x) {
    double s = 0;
    for (std::size_t y = 0; y < size; ++y) s += f[y] * g[x ^ y];
    out[x] = s / static_cast<double>(size);
  }
  return out;
}

// f^(t) = 2^{-n} sum_x f(x) (-1)^{<x,t>}, O(4^n).
inline RealTable naive_wht(const RealTable& f) {
  if (f.dim() > 12) throw CapExceeded("naive_wht needs n <= 12");
  RealTable out(f.dim());
  const std::size_t size = f.size();
  for (std::size_t t = 0; t < size; ++t) {
    double s = 0;
    for (std::size_t x = 0; x < size; ++x) s += detail::dot_parity(x, t) ? -f[x] : f[x];
    out[t] = s / static_cast<double>(size);
  }
  return out;
}

// |(y + A) n B| / |A| by counting.
inline double naive_rho(const PointSet& a, const PointSet& b, std::uint64_t y) {
  const std::vector<std::uint64_t> pts = a.points();
  if (pts.empty()) throw std::invalid_argument("A must be nonempty");
  std::uint64_t c = 0;
  for (std::uint64_t p : pts) c += b.contains(p ^ y) ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(pts.size());
}

// kA by direct loops.
inline PointSet exact_sumset(const PointSet& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (a.dim() > 16) throw CapExceeded("exact_sumset needs n <= 16");
  const std::size_t size = std::size_t{1} << a.dim();
  std::vector<char> in = detail::membership(a);
  std::vector<char> cur = in;
  for (int step = 1; step < k; ++step) {
    std::vector<char> next(size, 0);
    for (std::size_t x = 0; x < size; ++x) {
      if (!cur[x]) continue;
      for (std::size_t y = 0; y < size; ++y) {
        if (in[y]) next[x ^ y] = 1;
      }
    }
    cur.swap(next);
  }
  PointSet out(a.dim());
  for (std::size_t x = 0; x < size; ++x) {
    if (cur[x]) out.insert(x);
  }
  return out;
}

namespace detail {

// Depth-first search for reduced echelon row lists (rows by increasing pivot,
// pivot = top bit, zero in every other row's pivot column) whose span lies in
// {x : in(x)}. Rows are tried in ascending order, so the first list of a
// given maximal size is lexicographically smallest. Only lists longer than
// `floor` are reported.
template <class In>
std::optional<std::vector<std::uint64_t>> max_rows(int n, const In& in, int d_max, int floor) {
  std::vector<std::uint64_t> rows;
  std::vector<std::uint64_t> pts{0};
  std::optional<std::vector<std::uint64_t>> best;
  int best_dim = floor;

  auto recurse = [&](auto&& self, int last_pivot, std::uint64_t pivot_mask) -> void {
    const int dim = static_cast<int>(rows.size());
    if (dim > best_dim) {
      best_dim = dim;
      best = rows;
    }
    if (dim == d_max) return;
    for (int p = last_pivot + 1; p < n; ++p) {
      // Every further row needs its own pivot at p or above.
      if (dim + (n - p) <= best_dim) return;
      const std::uint64_t lead = std::uint64_t{1} << p;
      const std::uint64_t free = (lead - 1) & ~pivot_mask;
      std::uint64_t sub = 0;
      while (true) {
        const std::uint64_t v = lead | sub;
        bool ok = true;
        for (std::uint64_t q : pts) {
          if (!in(q ^ v)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          const std::size_t k = pts.size();
          for (std::size_t i = 0; i < k; ++i) pts.push_back(pts[i] ^ v);
          rows.push_back(v);
          self(self, p, pivot_mask | lead);
          rows.pop_back();
          pts.resize(k);
          if (best_dim == d_max) return;
        }
        if (sub == free) break;
        sub = (sub - free) & free;  // next subset of free, ascending
      }
    }
  };
  recurse(recurse, -1, 0);
  return best;
}

}  // namespace detail

// Largest linear subspace inside S (0 in S required), dimension at most d_max;
// ties go to the lexicographically smallest reduced row list.
inline Subspace max_subspace_in_set(const PointSet& s, int d_max) {
  const int n = s.dim();
  if (n > 16) throw CapExceeded("max_subspace_in_set needs n <= 16");
  if (!s.contains(std::uint64_t{0})) throw std::invalid_argument("0 is not in S");
  const std::vector<char> in = detail::membership(s);
  auto rows = detail::max_rows(n, [&](std::uint64_t x) { return in[x] != 0; }, std::min(d_max, n), -1);
  return Subspace::span_of_bits(n, *rows);
}

// Second implementation: for d = d_max down to 0, every choice of pivots and
// free entries is built and tested; the smallest contained row list is kept.
inline Subspace max_subspace_in_set_enumerative(const PointSet& s, int d_max) {
  const int n = s.dim();
  if (n > 10) throw CapExceeded("enumerative search needs n <= 10");
  if (!s.contains(std::uint64_t{0})) throw std::invalid_argument("0 is not in S");
  d_max = std::min(d_max, n);
  for (int d = d_max; d >= 0; --d) {
    std::optional<std::vector<std::uint64_t>> best;
    // Pivot sets as bitmasks of weight d.
    for (std::uint64_t pm = 0; pm < (std::uint64_t{1} << n); ++pm) {
      if (__builtin_popcountll(pm) != d) continue;
      std::vector<int> piv;
      for (int p = 0; p < n; ++p) {
        if ((pm >> p) & 1) piv.push_back(p);
      }
      // Free positions per row: below its pivot, not a pivot.
      std::vector<std::vector<int>> free(d);
      int total = 0;
      for (int i = 0; i < d; ++i) {
        for (int q = 0; q < piv[i]; ++q) {
          if (!((pm >> q) & 1)) free[i].push_back(q);
        }
        total += static_cast<int>(free[i].size());
      }
      if (total > 40) throw CapExceeded("too many free entries");
      for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total); ++fill) {
        std::vector<std::uint64_t> rows(d);
        int bit = 0;
        for (int i = 0; i < d; ++i) {
          rows[i] = std::uint64_t{1} << piv[i];
          for (int q : free[i]) {
            if ((fill >> bit) & 1) rows[i] |= std::uint64_t{1} << q;
            ++bit;
          }
        }
        bool ok = true;
        for (std::uint64_t x : detail::span_points(rows, 0)) {
          if (!s.contains(x)) {
            ok = false;
            break;
          }
        }
        if (ok && (!best || rows < *best)) best = rows;
      }
    }
    if (best) return Subspace::span_of_bits(n, *best);
  }
  return Subspace::zero(n);
}

// Largest affine subspace inside S: shifts scanned ascending, first strictly
// larger dimension wins, direction chosen as in max_subspace_in_set.
inline AffineSubspace max_affine_subspace_in_set(const PointSet& s, int d_max) {
  if (s.empty()) throw std::invalid_argument("S is empty");
  const int n = s.dim();
  if (n > 16) throw CapExceeded("max_affine_subspace_in_set needs n <= 16");
  d_max = std::min(d_max, n);
  const std::vector<char> in = detail::membership(s);
  std::uint64_t best_shift = 0;
  std::vector<std::uint64_t> best_rows;
  int best_dim = -1;
  for (std::uint64_t shift = 0; shift < in.size() && best_dim < d_max; ++shift) {
    if (!in[shift]) continue;
    auto rows = detail::max_rows(n, [&](std::uint64_t x) { return in[x ^ shift] != 0; }, d_max, best_dim);
    if (rows) {
      best_dim = static_cast<int>(rows->size());
      best_rows = *rows;
      best_shift = shift;
    }
  }
  return AffineSubspace(BitVector(n, best_shift), Subspace::span_of_bits(n, best_rows));
}

inline AffineSubspace max_affine_subspace_in_set_enumerative(const PointSet& s, int d_max) {
  if (s.empty()) throw std::invalid_argument("S is empty");
  const int n = s.dim();
  std::optional<AffineSubspace> best;
  for (std::uint64_t shift : s.points()) {
    PointSet moved(n);
    for (std::uint64_t x : s.points()) moved.insert(x ^ shift);
    const Subspace v = max_subspace_in_set_enumerative(moved, d_max);
    if (!best || v.dim() > best->dim()) best = AffineSubspace(BitVector(n, shift), v);
  }
  return *best;
}

}  // namespace f2ap::oracle

#endif  // F2AP_ORACLE_HPP_
