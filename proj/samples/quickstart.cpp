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

// Finds a subspace inside 4A three ways for one random set at n = 10, then an
// affine subspace inside A + A.

#include <cstdio>

#include "f2ap/f2ap.hpp"

int main() {
  using namespace f2ap;
  const int n = 10;
  const PointSet a = random_density_set(n, 0.25, /*seed=*/7);
  std::printf("|A| = %zu, density %.4f, |2A| = %zu\n", a.size(), a.density(), sumset(a, a).size());

  const ClassicalBogolyubovResult classical = classical_bogolyubov(a);
  std::printf("classical:   codim %d (bound %.1f), V in 4A: %s\n", classical.codim, classical.codim_bound,
              classical.certificate_pass ? "yes" : "no");

  const ExactBogolyubovResult exact = exact_bogolyubov(a, ParamSchedule::desk());
  std::printf("periods:     |X| = %zu, codim %d (symbolic bound %.1f), V in 4A: %s\n", exact.period_set.X.size(),
              exact.subspace.codim, exact.subspace.paper_codim_bound, exact.certificate_pass ? "yes" : "no");

  // The same pipeline driven only by membership queries to A.
  const FunctionOracle h = FunctionOracle::from_set(a);
  ParamSchedule sched = ParamSchedule::desk_algorithmic();
  sched.seed = 7;
  const BogolyubovResult algo = quasipoly_bogolyubov(h, 0.25, 0.2, sched);
  std::printf("oracle:      codim %d, %llu distinct queries, certificate %s\n", algo.codim,
              static_cast<unsigned long long>(algo.oracle_queries), to_string(algo.certificate.kind).c_str());

  const RefinedReport sub = find_sumset_subspace(a, ParamSchedule::desk_sumset());
  if (sub.shift) {
    std::printf("A + A holds %s + V with dim V = %d (verified: %s)\n", sub.shift->to_hex().c_str(), sub.dim,
                sub.containment_verified ? "yes" : "no");
  }
  return 0;
}
