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

// Seeded test-set generators.

#ifndef F2AP_GENERATORS_HPP_
#define F2AP_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "f2ap/f2core.hpp"
#include "f2ap/point_set.hpp"
#include "f2ap/random.hpp"

namespace f2ap {

// Each point joins independently with probability alpha.
inline PointSet random_density_set(int n, double alpha, std::uint64_t seed) {
  check_table_dimension(n);
  if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must be in [0,1]");
  PointSet a(n);
  for (std::uint64_t x = 0; x < a.universe_size(); ++x) {
    Rng rng(seed, StreamId::kGenerator, x);
    if (rng.uniform() < alpha) a.insert(x);
  }
  return a;
}

// Uniformly random subspace of codimension `codim`: perp spanned by random
// independent vectors.
inline Subspace random_subspace(int n, int codim, std::uint64_t seed) {
  check_dimension(n);
  if (codim < 0 || codim > n) throw std::invalid_argument("codim must be in [0, n]");
  Rng rng(seed, StreamId::kGenerator, ~std::uint64_t{0});
  std::vector<std::uint64_t> perp;
  while (static_cast<int>(perp.size()) < codim) {
    const std::uint64_t v = rng.bits(n);
    std::vector<std::uint64_t> trial = perp;
    trial.push_back(v);
    if (static_cast<int>(echelonize_bits(trial).size()) == static_cast<int>(trial.size())) perp.push_back(v);
  }
  return Subspace::from_perp_bits(n, perp);
}

inline PointSet subspace_set(int n, int codim, std::uint64_t seed) {
  check_table_dimension(n);
  return PointSet::from_subspace(random_subspace(n, codim, seed));
}

// Union of `count` distinct cosets of a random codim-`codim` subspace.
inline PointSet coset_union_set(int n, int codim, int count, std::uint64_t seed) {
  check_table_dimension(n);
  if (count < 1 || codim < 0 || codim >= 63 || count > (1 << std::min(codim, 30))) {
    throw std::invalid_argument("count must be in [1, 2^codim]");
  }
  const Subspace w = random_subspace(n, codim, seed);
  Rng rng(seed, StreamId::kGenerator, ~std::uint64_t{1});
  const std::vector<std::uint64_t> basis = w.basis_bits();
  std::vector<std::uint64_t> reps;
  while (static_cast<int>(reps.size()) < count) {
    const std::uint64_t r = reduce_bits(rng.bits(n), basis);  // canonical coset representative
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) reps.push_back(r);
  }
  PointSet a(n);
  for (std::uint64_t r : reps) {
    for_each_point(AffineSubspace(BitVector(n, r), w), [&](std::uint64_t x) { a.insert(x); }, kMaxTableDimension);
  }
  return a;
}

// f(x) = sign(sum_i chi_{s_i}(x) + noise(x)), noise uniform in (-noise, noise)
// per point; ties at exactly zero go to +1.
struct PlantedSpectral {
  int n = 0;
  std::vector<std::uint64_t> characters;
  double noise = 0.5;
  std::vector<std::int8_t> values;  // +-1

  int operator()(std::uint64_t x) const { return values[x]; }
  PointSet negative_set() const {  // {f = -1}
    PointSet a(n);
    for (std::uint64_t x = 0; x < values.size(); ++x) {
      if (values[x] < 0) a.insert(x);
    }
    return a;
  }
};

inline PlantedSpectral planted_spectral(int n, std::vector<std::uint64_t> characters, double noise,
                                        std::uint64_t seed) {
  check_table_dimension(n);
  if (characters.empty()) throw std::invalid_argument("need at least one character");
  PlantedSpectral f;
  f.n = n;
  f.characters = std::move(characters);
  f.noise = noise;
  f.values.resize(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < f.values.size(); ++x) {
    double s = 0;
    for (std::uint64_t c : f.characters) s += parity(x & c) ? -1.0 : 1.0;
    Rng rng(seed, StreamId::kNoise, x);
    s += (2.0 * rng.uniform() - 1.0) * noise;
    f.values[x] = s >= 0 ? 1 : -1;
  }
  return f;
}

// `count` distinct nonzero characters drawn from the seed.
inline std::vector<std::uint64_t> random_characters(int n, int count, std::uint64_t seed) {
  Rng rng(seed, StreamId::kGenerator, ~std::uint64_t{2});
  std::vector<std::uint64_t> out;
  while (static_cast<int>(out.size()) < count) {
    const std::uint64_t c = rng.bits(n);
    if (c != 0 && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct GeneratorSpec {
  std::string kind = "random-density";  // random-density | subspace | coset-union | planted-spectral
  double alpha = 0.5;
  int codim = 2;
  int count = 2;
  int characters = 4;
  double noise = 0.5;
};

inline PointSet generate_set(const GeneratorSpec& g, int n, std::uint64_t seed) {
  if (g.kind == "random-density") return random_density_set(n, g.alpha, seed);
  if (g.kind == "subspace") return subspace_set(n, g.codim, seed);
  if (g.kind == "coset-union") return coset_union_set(n, g.codim, g.count, seed);
  if (g.kind == "planted-spectral") {
    return planted_spectral(n, random_characters(n, g.characters, seed), g.noise, seed).negative_set();
  }
  throw std::invalid_argument("unknown generator: " + g.kind);
}

}  // namespace f2ap

#endif  // F2AP_GENERATORS_HPP_
