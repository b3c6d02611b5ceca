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

// Vectors and linear/affine subspaces of F_2^n.
//
// A vector is packed into a uint64 with coordinate i at bit i. Subspaces are
// stored by a basis of their orthogonal complement in canonical reduced
// row-echelon form: every row's pivot is its highest set bit, no other row
// has that bit set, and rows are sorted by descending pivot. Two subspaces
// are equal iff their canonical perp bases are equal.

#ifndef F2AP_F2CORE_HPP_
#define F2AP_F2CORE_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f2ap {

inline constexpr int kMaxDimension = 63;
inline constexpr int kMaxTableDimension = 24;
inline constexpr int kDefaultEnumerationCap = 24;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

inline void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("dimension out of range: " + std::to_string(n));
  }
}

inline void check_table_dimension(int n) {
  check_dimension(n);
  if (n > kMaxTableDimension) {
    throw CapExceeded("table dimension exceeds cap: " + std::to_string(n));
  }
}

inline constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

inline constexpr int parity(std::uint64_t x) { return std::popcount(x) & 1; }

// Index of the highest set bit; x must be nonzero.
inline constexpr int top_bit(std::uint64_t x) { return 63 - std::countl_zero(x); }

class BitVector {
 public:
  BitVector() = default;
  BitVector(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    check_dimension(n);
    if ((bits & ~low_mask(n)) != 0) {
      throw std::invalid_argument("bits outside dimension");
    }
  }

  static BitVector zero(int n) { return BitVector(n, 0); }
  static BitVector unit(int n, int i) {
    if (i < 0 || i >= n) throw std::invalid_argument("unit index out of range");
    return BitVector(n, std::uint64_t{1} << i);
  }

  // Parses lowercase or uppercase hex with an optional 0x prefix.
  static BitVector from_hex(int n, std::string_view text) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
      text.remove_prefix(2);
    }
    if (text.empty() || text.size() > 16) {
      throw std::invalid_argument("bad hex vector");
    }
    std::uint64_t v = 0;
    for (char c : text) {
      int d;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      else throw std::invalid_argument("bad hex digit");
      v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return BitVector(n, v);
  }

  int dim() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool test(int i) const { return ((bits_ >> i) & 1) != 0; }
  int weight() const { return std::popcount(bits_); }
  bool is_zero() const { return bits_ == 0; }

  std::string to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    if (bits_ == 0) return "0";
    std::string out;
    for (std::uint64_t v = bits_; v != 0; v >>= 4) out.push_back(kDigits[v & 15]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  BitVector operator+(const BitVector& o) const {
    if (o.n_ != n_) throw DimensionMismatch("vector dimensions differ");
    BitVector r;
    r.n_ = n_;
    r.bits_ = bits_ ^ o.bits_;
    return r;
  }
  BitVector& operator+=(const BitVector& o) { return *this = *this + o; }

  bool operator==(const BitVector&) const = default;
  std::strong_ordering operator<=>(const BitVector&) const = default;

 private:
  int n_ = 0;
  std::uint64_t bits_ = 0;
};

inline int dot(const BitVector& x, const BitVector& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("vector dimensions differ");
  return parity(x.bits() & y.bits());
}

// Reduces `rows` to canonical reduced row-echelon form (see file comment).
// Returns the nonzero rows; the count is the rank.
inline std::vector<std::uint64_t> echelonize_bits(std::span<const std::uint64_t> rows) {
  std::array<std::uint64_t, 64> slot{};
  std::uint64_t pivots = 0;
  for (std::uint64_t v : rows) {
    for (std::uint64_t p = v & pivots; p != 0; p = v & pivots) {
      v ^= slot[top_bit(p)];
    }
    if (v == 0) continue;
    // v is now zero on all existing pivots; its top bit becomes a new pivot.
    // Clearing that bit elsewhere keeps the other rows reduced.
    int p = top_bit(v);
    for (std::uint64_t q = pivots; q != 0; q &= q - 1) {
      int r = std::countr_zero(q);
      if ((slot[r] >> p) & 1) slot[r] ^= v;
    }
    slot[p] = v;
    pivots |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> out;
  for (int p = 63; p >= 0; --p) {
    if ((pivots >> p) & 1) out.push_back(slot[p]);
  }
  return out;
}

// Basis of {x : <x, r> = 0 for all rows r}, given canonical rows.
inline std::vector<std::uint64_t> nullspace_bits(int n, std::span<const std::uint64_t> rref) {
  std::uint64_t pivots = 0;
  for (std::uint64_t r : rref) pivots |= std::uint64_t{1} << top_bit(r);
  std::vector<std::uint64_t> gens;
  for (int f = 0; f < n; ++f) {
    if ((pivots >> f) & 1) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (std::uint64_t r : rref) {
      if ((r >> f) & 1) v |= std::uint64_t{1} << top_bit(r);
    }
    gens.push_back(v);
  }
  return echelonize_bits(gens);
}

class Subspace {
 public:
  Subspace() = default;

  // Subspace {x : <x, w> = 0 for all w in perp}.
  static Subspace from_perp(int n, std::span<const BitVector> perp) {
    check_dimension(n);
    std::vector<std::uint64_t> raw;
    raw.reserve(perp.size());
    for (const BitVector& w : perp) {
      if (w.dim() != n) throw DimensionMismatch("perp vector dimension differs");
      raw.push_back(w.bits());
    }
    return from_perp_bits(n, raw);
  }

  static Subspace from_perp_bits(int n, std::span<const std::uint64_t> perp) {
    check_dimension(n);
    for (std::uint64_t w : perp) {
      if ((w & ~low_mask(n)) != 0) throw std::invalid_argument("bits outside dimension");
    }
    Subspace s;
    s.n_ = n;
    s.perp_ = echelonize_bits(perp);
    return s;
  }

  static Subspace span_of(int n, std::span<const BitVector> gens) {
    check_dimension(n);
    std::vector<std::uint64_t> raw;
    for (const BitVector& g : gens) {
      if (g.dim() != n) throw DimensionMismatch("generator dimension differs");
      raw.push_back(g.bits());
    }
    return span_of_bits(n, raw);
  }

  static Subspace span_of_bits(int n, std::span<const std::uint64_t> gens) {
    check_dimension(n);
    std::vector<std::uint64_t> basis = echelonize_bits(gens);
    return from_perp_bits(n, nullspace_bits(n, basis));
  }

  static Subspace full(int n) { return from_perp_bits(n, {}); }
  static Subspace zero(int n) {
    std::vector<std::uint64_t> all;
    for (int i = 0; i < n; ++i) all.push_back(std::uint64_t{1} << i);
    return from_perp_bits(n, all);
  }

  int ambient_dim() const { return n_; }
  int codim() const { return static_cast<int>(perp_.size()); }
  int dim() const { return n_ - codim(); }

  std::vector<BitVector> perp_basis() const {
    std::vector<BitVector> out;
    for (std::uint64_t w : perp_) out.emplace_back(n_, w);
    return out;
  }
  const std::vector<std::uint64_t>& perp_bits() const { return perp_; }

  bool contains_bits(std::uint64_t x) const {
    for (std::uint64_t w : perp_) {
      if (parity(w & x)) return false;
    }
    return true;
  }
  bool contains(const BitVector& x) const {
    if (x.dim() != n_) throw DimensionMismatch("vector dimension differs");
    return contains_bits(x.bits());
  }

  // Canonical basis of the subspace itself.
  std::vector<std::uint64_t> basis_bits() const { return nullspace_bits(n_, perp_); }
  std::vector<BitVector> basis() const {
    std::vector<BitVector> out;
    for (std::uint64_t b : basis_bits()) out.emplace_back(n_, b);
    return out;
  }

  Subspace orthogonal_complement() const { return from_perp_bits(n_, basis_bits()); }

  Subspace intersect(const Subspace& o) const {
    if (o.n_ != n_) throw DimensionMismatch("subspace dimensions differ");
    std::vector<std::uint64_t> all = perp_;
    all.insert(all.end(), o.perp_.begin(), o.perp_.end());
    return from_perp_bits(n_, all);
  }

  bool is_subspace_of(const Subspace& o) const {
    if (o.n_ != n_) throw DimensionMismatch("subspace dimensions differ");
    for (std::uint64_t b : basis_bits()) {
      if (!o.contains_bits(b)) return false;
    }
    return true;
  }

  bool operator==(const Subspace&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> perp_;
};

inline Subspace orthogonal_complement(const Subspace& v) { return v.orthogonal_complement(); }

// Reduces x against a canonical basis; the result is the smallest element of
// the coset x + span(basis), since every pivot bit of it is cleared.
inline std::uint64_t reduce_bits(std::uint64_t x, std::span<const std::uint64_t> rref) {
  for (std::uint64_t r : rref) {
    if ((x >> top_bit(r)) & 1) x ^= r;
  }
  return x;
}

class AffineSubspace {
 public:
  AffineSubspace() = default;
  AffineSubspace(const BitVector& shift, const Subspace& direction) : direction_(direction) {
    if (shift.dim() != direction.ambient_dim()) {
      throw DimensionMismatch("shift dimension differs");
    }
    shift_ = BitVector(shift.dim(), reduce_bits(shift.bits(), direction.basis_bits()));
  }

  const BitVector& shift() const { return shift_; }
  const Subspace& direction() const { return direction_; }
  int ambient_dim() const { return direction_.ambient_dim(); }
  int dim() const { return direction_.dim(); }

  bool contains(const BitVector& x) const { return direction_.contains(x + shift_); }
  bool contains_bits(std::uint64_t x) const {
    return direction_.contains_bits(x ^ shift_.bits());
  }

  bool operator==(const AffineSubspace&) const = default;

 private:
  BitVector shift_;
  Subspace direction_;
};

// Visits every element of shift + span(basis) in Gray-code order.
template <class Fn>
void for_each_in_span(std::uint64_t shift, std::span<const std::uint64_t> basis, Fn&& fn,
                      int cap = kDefaultEnumerationCap) {
  const int d = static_cast<int>(basis.size());
  if (d > cap) throw CapExceeded("enumeration dimension exceeds cap: " + std::to_string(d));
  std::uint64_t x = shift;
  fn(x);
  const std::uint64_t count = std::uint64_t{1} << d;
  for (std::uint64_t i = 1; i < count; ++i) {
    x ^= basis[std::countr_zero(i)];
    fn(x);
  }
}

template <class Fn>
void for_each_point(const Subspace& v, Fn&& fn, int cap = kDefaultEnumerationCap) {
  std::vector<std::uint64_t> b = v.basis_bits();
  for_each_in_span(0, b, std::forward<Fn>(fn), cap);
}

template <class Fn>
void for_each_point(const AffineSubspace& v, Fn&& fn, int cap = kDefaultEnumerationCap) {
  std::vector<std::uint64_t> b = v.direction().basis_bits();
  for_each_in_span(v.shift().bits(), b, std::forward<Fn>(fn), cap);
}

inline std::vector<BitVector> enumerate(const Subspace& v, int cap = kDefaultEnumerationCap) {
  std::vector<BitVector> out;
  const int n = v.ambient_dim();
  for_each_point(v, [&](std::uint64_t x) { out.emplace_back(n, x); }, cap);
  return out;
}

inline std::vector<BitVector> enumerate(const AffineSubspace& v,
                                        int cap = kDefaultEnumerationCap) {
  std::vector<BitVector> out;
  const int n = v.ambient_dim();
  for_each_point(v, [&](std::uint64_t x) { out.emplace_back(n, x); }, cap);
  return out;
}

}  // namespace f2ap

#endif  // F2AP_F2CORE_HPP_
