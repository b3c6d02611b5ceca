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

// f2ap command-line driver.
//
//   f2ap <wht|spec|periods|bogolyubov|gl|sumset-subspace|verify|bench> [options]
//
// Every run prints one JSON document (or writes it to --out) holding the
// echoed config, the measurements, the symbolic bounds next to them, and the
// list of in-run invariants. Exit status: 0 when every invariant held, 1 when
// one failed (its name goes to stderr), 2 on bad input. Options may also come
// from a TOML file via --config. F2AP_THREADS sets the worker count.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "f2ap/f2ap.hpp"
#include "f2ap/io.hpp"

namespace {

using f2ap::Json;

struct Options {
  int n = 10;
  std::string generator = "random-density";
  double density = -1;  // generator density; defaults to --alpha
  double alpha = 0.5;
  int codim = 2;
  int count = 2;
  int characters = 4;
  double noise = 0.5;
  std::optional<std::uint64_t> seed;
  std::string input;     // hex point file instead of a generator
  std::string out;       // JSON result path, stdout when empty
  std::string audit;     // JSON-lines audit path
  std::string csv;       // CSV summary path
  std::string schedule;  // JSON schedule path
  std::string preset = "desk";

  // wht
  int top = 32;
  std::string table_out;
  // spec
  double rho = 0.5;
  // periods
  int ell = 0;
  std::size_t tuples = 500;
  // bogolyubov
  std::string mode = "exact";
  std::string pipeline = "algorithmic";
  double gamma = 0.2;
  // gl
  double nu = 0.2;
  double delta = 0.1;
  // sumset-subspace
  int dim_target = -1;
  int oracle_max_n = 10;
  // verify
  int trials = 5;
};

class Invariants {
 public:
  void check(const std::string& name, bool ok) { list_.emplace_back(name, ok); }
  std::optional<std::string> first_failure() const {
    for (const auto& [name, ok] : list_) {
      if (!ok) return name;
    }
    return std::nullopt;
  }
  Json to_json() const {
    Json a = Json::array();
    for (const auto& [name, ok] : list_) a.push_back(Json{{"name", name}, {"passed", ok}});
    return a;
  }

 private:
  std::vector<std::pair<std::string, bool>> list_;
};

// Measured value next to the symbolic bound for the same quantity.
Json compare(const std::string& quantity, double measured, double bound, const std::string& relation) {
  return Json{{"quantity", quantity}, {"measured", measured}, {"paper_bound", bound}, {"relation", relation}};
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t require_seed(const Options& o, const std::string& why) {
  if (!o.seed) throw UsageError("--seed is required (" + why + ")");
  return *o.seed;
}

double generator_density(const Options& o) { return o.density >= 0 ? o.density : o.alpha; }

f2ap::PointSet make_set(const Options& o) {
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("cannot open input: " + o.input);
    return f2ap::read_point_set_hex(in, o.n);
  }
  f2ap::GeneratorSpec g;
  g.kind = o.generator;
  g.alpha = generator_density(o);
  g.codim = o.codim;
  g.count = o.count;
  g.characters = o.characters;
  g.noise = o.noise;
  return f2ap::generate_set(g, o.n, require_seed(o, "set generator"));
}

f2ap::ParamSchedule make_schedule(const Options& o, double alpha) {
  f2ap::ParamSchedule s = o.schedule.empty() ? f2ap::preset_by_name(o.preset, alpha, o.n)
                                             : f2ap::load_schedule(o.schedule);
  if (o.seed) s.seed = *o.seed;
  s.validate();
  return s;
}

Json config_json(const std::string& command, const Options& o) {
  Json j{{"command", command},
         {"n", o.n},
         {"generator", o.input.empty() ? Json(o.generator) : Json("file")},
         {"density", generator_density(o)},
         {"alpha", o.alpha},
         {"codim", o.codim},
         {"count", o.count},
         {"characters", o.characters},
         {"noise", o.noise},
         {"seed", o.seed ? Json(*o.seed) : Json(nullptr)},
         {"input", o.input},
         {"schedule_file", o.schedule},
         {"preset", o.preset}};
  if (command == "wht") j["top"] = o.top;
  if (command == "spec") j["rho"] = o.rho;
  if (command == "periods") {
    j["ell"] = o.ell;
    j["tuples"] = o.tuples;
  }
  if (command == "bogolyubov") {
    j["mode"] = o.mode;
    j["pipeline"] = o.pipeline;
    j["gamma"] = o.gamma;
  }
  if (command == "gl") {
    j["nu"] = o.nu;
    j["delta"] = o.delta;
  }
  if (command == "sumset-subspace") {
    j["dim_target"] = o.dim_target;
    j["oracle_max_n"] = o.oracle_max_n;
  }
  if (command == "verify") j["trials"] = o.trials;
  return j;
}

std::unique_ptr<std::ofstream> open_or_null(const std::string& path) {
  if (path.empty()) return nullptr;
  auto f = std::make_unique<std::ofstream>(path);
  if (!*f) throw UsageError("cannot open output: " + path);
  return f;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

Json run_wht(const Options& o, Invariants& inv) {
  const f2ap::PointSet a = make_set(o);
  const f2ap::RealTable f = f2ap::RealTable::indicator(a);
  const f2ap::RealTable fh = f2ap::wht(f);
  const double residual = f2ap::inverse_wht(fh).max_abs_diff(f);
  double energy = 0;
  for (double v : fh.values()) energy += v * v;

  std::vector<std::uint64_t> order(fh.size());
  for (std::uint64_t t = 0; t < order.size(); ++t) order[t] = t;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t x, std::uint64_t y) { return std::abs(fh[x]) > std::abs(fh[y]); });
  Json top = Json::array();
  for (int i = 0; i < o.top && i < static_cast<int>(order.size()); ++i) {
    top.push_back(Json::array({f2ap::BitVector(o.n, order[i]).to_hex(), fh[order[i]]}));
  }
  if (!o.table_out.empty()) {
    std::ofstream t(o.table_out, std::ios::binary);
    if (!t) throw UsageError("cannot open table output: " + o.table_out);
    f2ap::write_real_table(t, fh);
  }
  inv.check("wht.inverse_identity", residual < 1e-12);
  inv.check("wht.parseval", std::abs(energy - a.density()) < 1e-12);
  inv.check("wht.mean", std::abs(fh[0] - a.density()) < 1e-12);
  return Json{{"set", f2ap::to_json(a)},
              {"density", a.density()},
              {"inverse_residual", residual},
              {"parseval_energy", energy},
              {"top_coefficients", top}};
}

Json run_spec(const Options& o, Invariants& inv) {
  const f2ap::PointSet a = make_set(o);
  if (a.empty()) throw UsageError("set is empty");
  const auto spec = f2ap::spec_rho(a, o.rho);
  const f2ap::ChangReport chang = f2ap::chang_check(a, o.rho);
  const double size_bound = 1.0 / (o.rho * o.rho * a.density());
  inv.check("spec.parseval_size", static_cast<double>(spec.size()) <= size_bound + 1e-9);
  inv.check("spec.chang_dimension", chang.holds);
  return Json{{"set", f2ap::to_json(a)},
              {"density", a.density()},
              {"spectrum", f2ap::to_json(spec)},
              {"span_dim", chang.span_dim},
              {"comparisons", Json::array({compare("|Spec_rho|", static_cast<double>(spec.size()), size_bound, "<="),
                                           compare("dim span(Spec_rho)", chang.span_dim, chang.bound, "<=")})}};
}

Json run_periods(const Options& o, Invariants& inv) {
  const f2ap::PointSet a = make_set(o);
  if (a.empty()) throw UsageError("set is empty");
  const f2ap::ParamSchedule s = make_schedule(o, a.density());
  const f2ap::PointSet b = f2ap::sumset(a, a);
  const f2ap::GoodnessSpec spec{s.epsilon, s.delta, false};
  const f2ap::PeriodSet p = f2ap::build_period_set(a, b, s.t, spec, s.enumeration_cap);
  const f2ap::PeriodSetCheck c = f2ap::check_period_properties(p);
  const f2ap::RhoTable r(a, b);
  const f2ap::PointSet sset = f2ap::sumset(a, b);
  const f2ap::AlmostPeriodReport p3 = f2ap::verify_property3(p, r, sset);
  const int ell = o.ell > 0 ? o.ell : s.ell;
  f2ap::IteratedOptions io;
  io.tuples = o.tuples;
  io.seed = s.seed;
  const f2ap::IteratedReport it = f2ap::verify_iterated(p, r, ell, sset, io);
  const f2ap::PeriodSubspace ps = f2ap::period_subspace(p);

  if (auto csv = open_or_null(o.csv)) {
    *csv << "tuple_id,failure_fraction,bound\n";
    for (const auto& row : it.rows) *csv << row.tuple_id << ',' << row.failure_fraction << ',' << row.bound << '\n';
  }
  inv.check("periods.contained_in_shift", c.contained_in_shift);
  inv.check("periods.pigeonhole_size", c.pigeonhole_holds);
  // The |A|/(2K^{t-1}) form presumes at least half the sequences are good.
  inv.check("periods.size_bound", !c.half_good || c.size_bound_holds);
  inv.check("periods.property3", p3.within_stated);
  inv.check("periods.iterated", it.summary.within_stated);

  Json x{{"X", f2ap::to_json(p.X)},
         {"shift_witness", p.shift_witness.to_hex()},
         {"a_hat", f2ap::to_json(p.a_hat)},
         {"t", p.t},
         {"K", p.K},
         {"good_count", p.good_count},
         {"total_sequences", p.total_sequences},
         {"fiber_size", p.fiber_size}};
  return Json{{"set", f2ap::to_json(a)},
              {"schedule", f2ap::to_json(s)},
              {"period_set", x},
              {"V", f2ap::to_json(ps.V)},
              {"property3_max_fraction", p3.max_fraction},
              {"iterated_ell", ell},
              {"iterated_exhaustive", it.exhaustive},
              {"iterated_max_fraction", it.summary.max_fraction},
              {"comparisons",
               Json::array({compare("|X|", static_cast<double>(p.X.size()), c.pigeonhole_bound, ">="),
                            compare("|X| (half-good form)", static_cast<double>(p.X.size()), c.size_bound, ">="),
                            compare("property-3 failure", p3.max_fraction, p3.stated_bound, "<="),
                            compare("iterated failure", it.summary.max_fraction, it.summary.stated_bound, "<="),
                            compare("codim V", ps.codim, ps.paper_codim_bound, "<=")})}};
}

Json run_bogolyubov(const Options& o, Invariants& inv) {
  const f2ap::PointSet a = make_set(o);
  if (a.empty()) throw UsageError("set is empty");
  if (o.pipeline == "classical") {
    const auto res = f2ap::classical_bogolyubov(a);
    inv.check("bogolyubov.certificate", res.certificate_pass);
    inv.check("bogolyubov.codim_bound", res.codim <= res.codim_bound + 1e-9);
    return Json{{"set", f2ap::to_json(a)},
                {"pipeline", "classical"},
                {"V", f2ap::to_json(res.V)},
                {"threshold", res.threshold},
                {"certificate", res.certificate_pass ? "exact-pass" : "exact-fail"},
                {"witness", res.witness ? Json(res.witness->to_hex()) : Json(nullptr)},
                {"comparisons", Json::array({compare("codim V", res.codim, res.codim_bound, "<=")})}};
  }
  if (o.pipeline == "exact") {
    const f2ap::ParamSchedule s = make_schedule(o, a.density());
    const auto res = f2ap::exact_bogolyubov(a, s);
    inv.check("bogolyubov.certificate", res.certificate_pass);
    return Json{{"set", f2ap::to_json(a)},
                {"pipeline", "exact"},
                {"schedule", f2ap::to_json(s)},
                {"V", f2ap::to_json(res.subspace.V)},
                {"X_size", res.period_set.X.size()},
                {"certificate", res.certificate_pass ? "exact-pass" : "exact-fail"},
                {"witness", res.witness ? Json(res.witness->to_hex()) : Json(nullptr)},
                {"majority_implies_containment", res.majority.implies_containment},
                {"comparisons", Json::array({compare("codim V", res.subspace.codim,
                                                     res.subspace.paper_codim_bound, "<=")})}};
  }
  if (o.pipeline != "algorithmic") throw UsageError("unknown pipeline: " + o.pipeline);
  if (o.mode != "exact" && o.mode != "sampled") throw UsageError("unknown mode: " + o.mode);
  require_seed(o, "randomized pipeline");
  // The oracle pipeline has its own desk values.
  Options oo = o;
  if (o.schedule.empty() && o.preset == "desk") oo.preset = "desk-algo";
  const f2ap::ParamSchedule s = make_schedule(oo, o.alpha);
  const f2ap::FunctionOracle h = f2ap::FunctionOracle::from_set(a);
  f2ap::BogolyubovOptions bo;
  bo.exact_certificate = o.mode == "exact";
  auto audit_file = open_or_null(o.audit);
  std::unique_ptr<f2ap::AuditLog> log;
  if (audit_file) {
    log = std::make_unique<f2ap::AuditLog>(*audit_file);
    bo.audit = log->sink();
  }
  const f2ap::BogolyubovResult res = f2ap::quasipoly_bogolyubov(h, o.alpha, o.gamma, s, bo);
  inv.check("bogolyubov.certificate", res.certificate.passed());
  inv.check("bogolyubov.gl_list_size", res.K_list.entries.size() <= std::max<std::size_t>(res.K_list.k_max, 1));
  Json j = f2ap::to_json(res);
  j["set"] = f2ap::to_json(a);
  j["pipeline"] = "algorithmic";
  j["mode"] = o.mode;
  j["comparisons"] = Json::array({compare("codim V", res.codim, res.paper_codim_bound, "<=")});
  return j;
}

Json run_gl(const Options& o, Invariants& inv) {
  const std::uint64_t seed = require_seed(o, "randomized search");
  f2ap::PointSet a(o.n);
  std::vector<std::uint64_t> chars;
  if (o.input.empty() && o.generator == "planted-spectral") {
    chars = f2ap::random_characters(o.n, o.characters, seed);
    a = f2ap::planted_spectral(o.n, chars, o.noise, seed).negative_set();
  } else {
    a = make_set(o);
  }
  // f = +1 off A, -1 on A.
  auto f = [&a](std::uint64_t x) { return a.contains(x) ? -1 : 1; };
  f2ap::GlOptions gl;
  gl.seed = seed;
  const f2ap::CoefficientList k = f2ap::goldreich_levin(f, o.n, o.nu, o.delta, gl);

  f2ap::RealTable ft(o.n);
  for (std::uint64_t x = 0; x < ft.size(); ++x) ft[x] = f(x);
  const f2ap::RealTable fh = f2ap::wht(ft);
  std::vector<std::uint64_t> missing, spurious;
  for (std::uint64_t t = 0; t < fh.size(); ++t) {
    if (std::abs(fh[t]) < o.nu) continue;
    bool found = false;
    for (const auto& e : k.entries) found = found || e.alpha.bits() == t;
    if (!found) missing.push_back(t);
  }
  for (const auto& e : k.entries) {
    // Entries whose estimate misses the true coefficient by more than nu/2.
    if (std::abs(e.c - fh[e.alpha.bits()]) > o.nu / 2) spurious.push_back(e.alpha.bits());
  }
  inv.check("gl.list_size", k.entries.size() <= k.k_max);
  inv.check("gl.completeness", missing.empty());
  inv.check("gl.soundness", spurious.empty());
  Json jm = Json::array(), js = Json::array(), jc = Json::array();
  for (auto t : missing) jm.push_back(f2ap::BitVector(o.n, t).to_hex());
  for (auto t : spurious) js.push_back(f2ap::BitVector(o.n, t).to_hex());
  for (auto c : chars) jc.push_back(f2ap::BitVector(o.n, c).to_hex());
  return Json{{"set", f2ap::to_json(a)},
              {"planted_characters", jc},
              {"coefficients", f2ap::to_json(k)},
              {"missing", jm},
              {"spurious", js},
              {"comparisons", Json::array({compare("|K|", static_cast<double>(k.entries.size()),
                                                   static_cast<double>(k.k_max), "<=")})}};
}

Json run_sumset_subspace(const Options& o, Invariants& inv) {
  const auto t0 = std::chrono::steady_clock::now();
  require_seed(o, "randomized shift prefilter");
  const f2ap::PointSet a = make_set(o);
  if (a.empty()) throw UsageError("set is empty");
  Options oo = o;
  if (o.schedule.empty() && o.preset == "desk") oo.preset = "desk-sumset";
  const f2ap::ParamSchedule s = make_schedule(oo, a.density());
  const f2ap::RefinedReport rep = f2ap::find_sumset_subspace(a, s);
  int oracle_dim = -1;
  if (o.n <= o.oracle_max_n) {
    oracle_dim = f2ap::oracle::max_affine_subspace_in_set(f2ap::sumset(a, a), o.n).dim();
  }
  const double runtime = seconds_since(t0);
  if (auto csv = open_or_null(o.csv)) {
    *csv << "n,alpha,dim_found,dim_oracle_max,runtime_s\n";
    *csv << o.n << ',' << a.density() << ',' << (rep.shift ? rep.dim : -1) << ',' << oracle_dim << ','
         << runtime << '\n';
  }
  inv.check("sumset.shift_found", rep.shift.has_value());
  inv.check("sumset.containment", !rep.shift || rep.containment_verified);
  inv.check("sumset.mean_rho", rep.mean_is_alpha);
  inv.check("sumset.slice_size", rep.slice_bound_holds);
  inv.check("sumset.almost_period_bound", rep.max_failure <= rep.bound + 1e-12);
  if (o.dim_target >= 0) inv.check("sumset.dim_target", rep.shift && rep.dim >= o.dim_target);
  if (oracle_dim >= 0 && rep.shift) inv.check("sumset.oracle_dominates", rep.dim <= oracle_dim);

  return Json{{"set", f2ap::to_json(a)},
              {"schedule", f2ap::to_json(s)},
              {"shift", rep.shift ? Json(rep.shift->to_hex()) : Json(nullptr)},
              {"V", f2ap::to_json(rep.V)},
              {"dim", rep.dim},
              {"dim_oracle_max", oracle_dim},
              {"S_size", rep.S.size()},
              {"X_size", rep.period_set.X.size()},
              {"shifts_scanned", rep.shifts_scanned},
              {"containment_verified", rep.containment_verified},
              {"max_failure", rep.max_failure},
              {"comparisons", Json::array({compare("almost-period failure", rep.max_failure, rep.bound, "<="),
                                           compare("dim V", rep.dim, rep.paper_dim_bound, ">=")})}};
}

// Oracle cross-check suite over `trials` seeded random sets.
Json run_verify(const Options& o, Invariants& inv) {
  const std::uint64_t seed = require_seed(o, "seeded trials");
  const int n = o.n;
  if (n < 2 || n > 12) throw UsageError("verify needs 2 <= n <= 12");
  Json rows = Json::array();
  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t ts = f2ap::mix64(seed + static_cast<std::uint64_t>(trial));
    const f2ap::PointSet a = f2ap::random_density_set(n, 0.5, ts);
    const f2ap::PointSet b = f2ap::random_density_set(n, 0.25, ts ^ 0x5bd1e995u);
    if (a.empty() || b.empty()) continue;
    Json row{{"trial", trial}};

    const f2ap::RealTable fa = f2ap::RealTable::indicator(a);
    const f2ap::RealTable fb = f2ap::RealTable::indicator(b);
    const double wht_err = f2ap::wht(fa).max_abs_diff(f2ap::oracle::naive_wht(fa));
    const double conv_err = f2ap::convolve(fa, fb).max_abs_diff(f2ap::oracle::naive_convolve(fa, fb));
    row["wht_error"] = wht_err;
    row["convolve_error"] = conv_err;
    inv.check("verify.wht", wht_err < 1e-12);
    inv.check("verify.convolve", conv_err < 1e-12);

    const f2ap::RhoTable r(a, b);
    bool rho_ok = true;
    for (std::uint64_t y = 0; y < r.size(); ++y) {
      rho_ok = rho_ok && std::abs(r(y) - f2ap::oracle::naive_rho(a, b, y)) < 1e-12;
    }
    inv.check("verify.rho", rho_ok);

    // Sparse set so 2A and 4A are not everything.
    const f2ap::PointSet sparse = f2ap::random_density_set(n, 4.0 / (1 << n) * n, ts ^ 0x9e37u);
    if (!sparse.empty()) {
      inv.check("verify.sumset2", f2ap::sumset(sparse, sparse) == f2ap::oracle::exact_sumset(sparse, 2));
      inv.check("verify.sumset4", f2ap::iterated_sumset(sparse, 4) == f2ap::oracle::exact_sumset(sparse, 4));
    }

    f2ap::PointSet s = a;
    s.insert(0);
    const int d_max = n <= 8 ? n : 3;
    const f2ap::Subspace v1 = f2ap::oracle::max_subspace_in_set(s, d_max);
    const f2ap::Subspace v2 = f2ap::oracle::max_subspace_in_set_enumerative(s, d_max);
    row["max_subspace_dim"] = v1.dim();
    inv.check("verify.max_subspace", v1 == v2);

    // Estimator kernel against a per-sequence recount.
    f2ap::PointSet small(n);
    for (std::uint64_t x : a.points()) {
      if (small.size() < 24) small.insert(x);
    }
    const f2ap::PointSet two = f2ap::sumset(small, small);
    const f2ap::GoodnessSpec gs{0.3, 0.3, false};
    const f2ap::GoodEstimatorSet g = f2ap::good_estimator_set(small, two, 2, gs);
    const f2ap::RhoTable rs(small, two);
    const f2ap::PointSet ab = f2ap::sumset(small, two);
    bool kernel_ok = true;
    for (std::uint64_t idx = 0; idx < g.total(); ++idx) {
      const f2ap::SampleSeq seq = g.sequence(idx);
      std::uint64_t bad = 0;
      for (std::uint64_t y : ab.points()) {
        if (std::abs(rs(y) - f2ap::rho_hat(seq, two, y)) > gs.epsilon + 1e-12) ++bad;
      }
      kernel_ok = kernel_ok && ((bad <= g.bad_limit) == g.contains(idx));
    }
    inv.check("verify.estimator_kernel", kernel_ok);
    rows.push_back(row);
  }
  return Json{{"trials", rows}};
}

// Fixed workloads; JSON holds checksums only, timings go to the CSV.
Json run_bench(const Options& o, Invariants& inv) {
  const std::uint64_t seed = require_seed(o, "seeded workloads");
  std::vector<std::pair<std::string, double>> times;
  Json out;

  auto t0 = std::chrono::steady_clock::now();
  const f2ap::PointSet a = f2ap::random_density_set(o.n, 0.5, seed);
  const f2ap::RealTable fh = f2ap::wht(f2ap::RealTable::indicator(a));
  times.emplace_back("wht", seconds_since(t0));
  out["wht_mean"] = fh[0];

  t0 = std::chrono::steady_clock::now();
  const f2ap::PointSet two_a = f2ap::sumset(a, a);
  times.emplace_back("sumset", seconds_since(t0));
  out["sumset_size"] = two_a.size();

  t0 = std::chrono::steady_clock::now();
  const f2ap::ClassicalBogolyubovResult cb = f2ap::classical_bogolyubov(a);
  times.emplace_back("classical_bogolyubov", seconds_since(t0));
  out["classical_codim"] = cb.codim;
  inv.check("bench.classical_certificate", cb.certificate_pass);

  t0 = std::chrono::steady_clock::now();
  const auto f = [&a](std::uint64_t x) { return a.contains(x) ? -1 : 1; };
  f2ap::GlOptions gl;
  gl.seed = seed;
  gl.max_samples_per_depth = std::int64_t{1} << 18;
  const f2ap::CoefficientList k = f2ap::goldreich_levin(f, o.n, 0.25, 0.1, gl);
  times.emplace_back("goldreich_levin", seconds_since(t0));
  out["gl_entries"] = k.entries.size();
  out["gl_queries"] = k.queries;

  if (auto csv = open_or_null(o.csv)) {
    *csv << "workload,n,seconds\n";
    for (const auto& [name, sec] : times) *csv << name << ',' << o.n << ',' << sec << '\n';
  }
  return out;
}

int dispatch(const std::string& command, const Options& o) {
  Invariants inv;
  Json result;
  if (command == "wht") result = run_wht(o, inv);
  else if (command == "spec") result = run_spec(o, inv);
  else if (command == "periods") result = run_periods(o, inv);
  else if (command == "bogolyubov") result = run_bogolyubov(o, inv);
  else if (command == "gl") result = run_gl(o, inv);
  else if (command == "sumset-subspace") result = run_sumset_subspace(o, inv);
  else if (command == "verify") result = run_verify(o, inv);
  else if (command == "bench") result = run_bench(o, inv);
  else throw UsageError("unknown subcommand: " + command);

  const auto failure = inv.first_failure();
  Json doc{{"config", config_json(command, o)},
           {"result", result},
           {"invariants", inv.to_json()},
           {"first_failure", failure ? Json(*failure) : Json(nullptr)}};
  const std::string text = doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open output: " + o.out);
    f << text;
  }
  if (failure) {
    std::cerr << "invariant failed: " << *failure << '\n';
    return 1;
  }
  return 0;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "ambient dimension")->check(CLI::Range(1, 24));
  sub->add_option("--generator", o.generator, "random-density|subspace|coset-union|planted-spectral");
  sub->add_option("--density", o.density, "generator density (default: --alpha)");
  sub->add_option("--alpha", o.alpha, "density parameter");
  sub->add_option("--codim", o.codim);
  sub->add_option("--count", o.count);
  sub->add_option("--characters", o.characters);
  sub->add_option("--noise", o.noise);
  sub->add_option("--seed", o.seed, "master seed");
  sub->add_option("--input", o.input, "hex point file instead of a generator");
  sub->add_option("--out", o.out, "JSON result path");
  sub->add_option("--csv", o.csv, "CSV summary path");
  sub->add_option("--schedule", o.schedule, "JSON schedule file");
  sub->add_option("--preset", o.preset, "schedule preset");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f2ap: almost-periodicity and Bogolyubov experiments over F_2^n"};
  app.set_config("--config", "", "TOML config file");
  app.require_subcommand(1);
  Options o;

  auto* wht = app.add_subcommand("wht", "Walsh-Hadamard transform of a set");
  add_common(wht, o);
  wht->add_option("--top", o.top, "coefficients to print");
  wht->add_option("--table-out", o.table_out, "binary table of all coefficients");

  auto* spec = app.add_subcommand("spec", "large spectrum and Chang bound");
  add_common(spec, o);
  spec->add_option("--rho", o.rho);

  auto* periods = app.add_subcommand("periods", "period set X of A with B = 2A");
  add_common(periods, o);
  periods->add_option("--ell", o.ell, "iterated length (default: schedule ell)");
  periods->add_option("--tuples", o.tuples);

  auto* bog = app.add_subcommand("bogolyubov", "subspace inside 4A");
  add_common(bog, o);
  bog->add_option("--mode", o.mode, "certificate: exact|sampled");
  bog->add_option("--pipeline", o.pipeline, "algorithmic|exact|classical");
  bog->add_option("--gamma", o.gamma, "failure budget gamma'");
  bog->add_option("--audit", o.audit, "JSON-lines audit log path");

  auto* gl = app.add_subcommand("gl", "Goldreich-Levin search against the exact spectrum");
  add_common(gl, o);
  gl->add_option("--nu", o.nu);
  gl->add_option("--delta", o.delta);

  auto* ss = app.add_subcommand("sumset-subspace", "affine subspace inside A + A");
  add_common(ss, o);
  ss->add_option("--dim-target", o.dim_target);
  ss->add_option("--oracle-max-n", o.oracle_max_n);

  auto* verify = app.add_subcommand("verify", "oracle cross-check suite");
  add_common(verify, o);
  verify->add_option("--trials", o.trials);

  auto* bench = app.add_subcommand("bench", "timing workloads");
  add_common(bench, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every other parse error is bad input.
    return app.exit(e) == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "gl" && o.input.empty() && gl->count("--generator") == 0) {
    o.generator = "planted-spectral";
  }
  try {
    return dispatch(command, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
