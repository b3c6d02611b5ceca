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

// Subsets of F_2^n stored as bitmaps (point x at bit x % 64 of word x / 64).

#ifndef F2AP_POINT_SET_HPP_
#define F2AP_POINT_SET_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "f2ap/f2core.hpp"

namespace f2ap {

// Word-level image of a bitmap word under x -> x ^ m for m < 64.
inline std::uint64_t xor_permute_word(std::uint64_t w, unsigned m) {
  static constexpr std::uint64_t kMask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  for (int j = 0; j < 6; ++j) {
    if ((m >> j) & 1) {
      const int s = 1 << j;
      w = ((w & kMask[j]) << s) | ((w >> s) & kMask[j]);
    }
  }
  return w;
}

class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int n) : n_(n) {
    check_table_dimension(n);
    words_.assign(word_count(n), 0);
  }

  static PointSet from_points(int n, std::span<const std::uint64_t> points) {
    PointSet s(n);
    for (std::uint64_t x : points) s.insert(x);
    return s;
  }
  static PointSet from_vectors(int n, std::span<const BitVector> points) {
    PointSet s(n);
    for (const BitVector& x : points) {
      if (x.dim() != n) throw DimensionMismatch("point dimension differs");
      s.insert(x.bits());
    }
    return s;
  }
  static PointSet full(int n) {
    PointSet s(n);
    for (std::uint64_t x = 0; x < s.universe_size(); ++x) s.insert(x);
    return s;
  }
  static PointSet from_subspace(const Subspace& v) {
    PointSet s(v.ambient_dim());
    for_each_point(v, [&](std::uint64_t x) { s.insert(x); }, kMaxTableDimension);
    return s;
  }
  static PointSet from_affine(const AffineSubspace& v) {
    PointSet s(v.ambient_dim());
    for_each_point(v, [&](std::uint64_t x) { s.insert(x); }, kMaxTableDimension);
    return s;
  }

  int dim() const { return n_; }
  std::uint64_t universe_size() const { return std::uint64_t{1} << n_; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  double density() const {
    return static_cast<double>(count_) / static_cast<double>(universe_size());
  }

  bool contains(std::uint64_t x) const {
    return x < universe_size() && ((words_[x >> 6] >> (x & 63)) & 1);
  }
  bool contains(const BitVector& x) const {
    if (x.dim() != n_) throw DimensionMismatch("point dimension differs");
    return contains(x.bits());
  }

  void insert(std::uint64_t x) {
    if (x >= universe_size()) throw std::invalid_argument("point outside universe");
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (!(w & bit)) {
      w |= bit;
      ++count_;
    }
  }
  void erase(std::uint64_t x) {
    if (x >= universe_size()) return;
    std::uint64_t& w = words_[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit) {
      w &= ~bit;
      --count_;
    }
  }

  std::vector<std::uint64_t> points() const {
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        out.push_back((i << 6) | static_cast<std::uint64_t>(std::countr_zero(w)));
      }
    }
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  // s + A.
  PointSet shifted(std::uint64_t s) const {
    if (s >= universe_size()) throw std::invalid_argument("shift outside universe");
    PointSet out(n_);
    const std::uint64_t hi = s >> 6;
    const unsigned lo = static_cast<unsigned>(s & 63);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      out.words_[i ^ hi] = xor_permute_word(words_[i], lo);
    }
    out.count_ = count_;
    return out;
  }

  PointSet complement() const {
    PointSet out(n_);
    for (std::uint64_t x = 0; x < universe_size(); ++x) {
      if (!contains(x)) out.insert(x);
    }
    return out;
  }

  bool is_subset_of(const PointSet& o) const {
    if (o.n_ != n_) throw DimensionMismatch("set dimensions differ");
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  // Rebuilds from raw words; bits outside the universe are rejected.
  static PointSet from_words(int n, std::vector<std::uint64_t> words) {
    PointSet s(n);
    if (words.size() != s.words_.size()) throw std::invalid_argument("word count mismatch");
    if (n < 6 && (words[0] & ~low_mask(1 << n))) {
      throw std::invalid_argument("bits outside universe");
    }
    s.words_ = std::move(words);
    s.count_ = 0;
    for (std::uint64_t w : s.words_) s.count_ += static_cast<std::size_t>(std::popcount(w));
    return s;
  }

  bool operator==(const PointSet& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  static std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
  }

  int n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

// A + B, one shifted OR per element of the smaller set.
inline PointSet sumset(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("set dimensions differ");
  const PointSet& small = a.size() <= b.size() ? a : b;
  const PointSet& large = a.size() <= b.size() ? b : a;
  std::vector<std::uint64_t> acc(large.words().size(), 0);
  const auto& lw = large.words();
  for (std::uint64_t s : small.points()) {
    const std::uint64_t hi = s >> 6;
    const unsigned lo = static_cast<unsigned>(s & 63);
    for (std::size_t i = 0; i < lw.size(); ++i) acc[i ^ hi] |= xor_permute_word(lw[i], lo);
  }
  return PointSet::from_words(a.dim(), std::move(acc));
}

// kA for k >= 1.
inline PointSet iterated_sumset(const PointSet& a, int k) {
  if (k < 1) throw std::invalid_argument("sumset order must be positive");
  PointSet out = a;
  for (int i = 1; i < k; ++i) out = sumset(out, a);
  return out;
}

// |A + A| / |A|.
inline double doubling_constant(const PointSet& a) {
  if (a.empty()) throw std::invalid_argument("empty set");
  return static_cast<double>(sumset(a, a).size()) / static_cast<double>(a.size());
}

}  // namespace f2ap

#endif  // F2AP_POINT_SET_HPP_
