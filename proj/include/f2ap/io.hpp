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

// Serialization: JSON for results and schedules, a little-endian binary
// format for real tables, hex lines or raw bitmaps for point sets, and a
// JSON-lines audit log.

#ifndef F2AP_IO_HPP_
#define F2AP_IO_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#include "f2ap/bogolyubov_algo.hpp"
#include "f2ap/f2core.hpp"
#include "f2ap/fourier.hpp"
#include "f2ap/goldreich_levin.hpp"
#include "f2ap/point_set.hpp"
#include "f2ap/sampling.hpp"
#include "f2ap/schedule.hpp"

namespace f2ap {

using Json = nlohmann::json;

inline std::string base64_encode(const std::vector<std::uint8_t>& data) {
  static constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < data.size(); i += 3) {
    const std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += kAlphabet[v & 63];
  }
  if (i + 1 == data.size()) {
    const std::uint32_t v = data[i] << 16;
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += "==";
  } else if (i + 2 == data.size()) {
    const std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
    out += kAlphabet[(v >> 18) & 63];
    out += kAlphabet[(v >> 12) & 63];
    out += kAlphabet[(v >> 6) & 63];
    out += '=';
  }
  return out;
}

inline std::vector<std::uint8_t> base64_decode(const std::string& text) {
  auto value = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
  };
  std::vector<std::uint8_t> out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (char c : text) {
    if (c == '=') break;
    const int v = value(c);
    if (v < 0) throw std::invalid_argument("invalid base64");
    acc = (acc << 6) | static_cast<std::uint32_t>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<std::uint8_t>((acc >> bits) & 0xff));
    }
  }
  return out;
}

inline Json to_json(const BitVector& v) { return v.to_hex(); }

inline Json to_json(const std::vector<BitVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v.to_hex());
  return a;
}

inline Json to_json(const Subspace& v) {
  return Json{{"n", v.ambient_dim()}, {"dim", v.dim()}, {"perp_basis", to_json(v.perp_basis())}};
}

inline Subspace subspace_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<BitVector> perp;
  for (const auto& h : j.at("perp_basis")) perp.push_back(BitVector::from_hex(n, h.get<std::string>()));
  return Subspace::from_perp(n, perp);
}

inline Json to_json(const AffineSubspace& a) {
  Json j = to_json(a.direction());
  j["shift"] = a.shift().to_hex();
  return j;
}

// Bitmap as little-endian bytes of the word array, base64-encoded.
inline Json to_json(const PointSet& s) {
  std::vector<std::uint8_t> bytes;
  const std::size_t nbytes = std::max<std::size_t>(1, static_cast<std::size_t>(s.universe_size() / 8));
  for (std::size_t i = 0; i < nbytes; ++i) {
    bytes.push_back(static_cast<std::uint8_t>((s.words()[i / 8] >> (8 * (i % 8))) & 0xff));
  }
  return Json{{"n", s.dim()}, {"size", s.size()}, {"bitmap_b64", base64_encode(bytes)}};
}

inline PointSet point_set_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const std::vector<std::uint8_t> bytes = base64_decode(j.at("bitmap_b64").get<std::string>());
  PointSet s(n);
  for (std::uint64_t x = 0; x < s.universe_size(); ++x) {
    if (x / 8 < bytes.size() && ((bytes[x / 8] >> (x % 8)) & 1)) s.insert(x);
  }
  return s;
}

inline Json to_json(const ParamSchedule& s) {
  return Json{{"preset", s.preset},
              {"t", s.t},
              {"ell", s.ell},
              {"epsilon", s.epsilon},
              {"eta", s.eta},
              {"delta", s.delta},
              {"r", s.r},
              {"r_prime", s.r_prime},
              {"gamma1", s.gamma1},
              {"gamma2", s.gamma2},
              {"gamma3", s.gamma3},
              {"gamma4", s.gamma4},
              {"gamma_prime", s.gamma_prime},
              {"seed", s.seed},
              {"z_multiplier", s.z_multiplier},
              {"g_multiplier", s.g_multiplier},
              {"find_multiplier", s.find_multiplier},
              {"mu0_multiplier", s.mu0_multiplier},
              {"gl_multiplier", s.gl_multiplier},
              {"gl_max_samples_per_depth", s.gl_max_samples_per_depth},
              {"enumeration_cap", s.enumeration_cap}};
}

// Starts from the named preset (default "desk") and overrides present keys.
inline ParamSchedule schedule_from_json(const Json& j) {
  ParamSchedule s = preset_by_name(j.value("preset", std::string("desk")));
  auto take = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  take("t", s.t);
  take("ell", s.ell);
  take("epsilon", s.epsilon);
  take("eta", s.eta);
  take("delta", s.delta);
  take("r", s.r);
  take("r_prime", s.r_prime);
  take("gamma1", s.gamma1);
  take("gamma2", s.gamma2);
  take("gamma3", s.gamma3);
  take("gamma4", s.gamma4);
  take("gamma_prime", s.gamma_prime);
  take("seed", s.seed);
  take("z_multiplier", s.z_multiplier);
  take("g_multiplier", s.g_multiplier);
  take("find_multiplier", s.find_multiplier);
  take("mu0_multiplier", s.mu0_multiplier);
  take("gl_multiplier", s.gl_multiplier);
  take("gl_max_samples_per_depth", s.gl_max_samples_per_depth);
  take("enumeration_cap", s.enumeration_cap);
  s.validate();
  return s;
}

inline ParamSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schedule: " + path);
  return schedule_from_json(Json::parse(in));
}

// [[hex alpha, c], ...] plus metadata.
inline Json to_json(const CoefficientList& k) {
  Json entries = Json::array();
  for (const auto& e : k.entries) entries.push_back(Json::array({e.alpha.to_hex(), e.c}));
  return Json{{"entries", entries},
              {"nu", k.nu},
              {"delta_fail", k.delta_fail},
              {"k_max", k.k_max},
              {"samples_per_depth", k.samples_per_depth},
              {"coefficient_samples", k.coefficient_samples},
              {"capped", k.capped},
              {"queries", k.queries},
              {"max_candidates", k.max_candidates}};
}

inline Json to_json(const Certificate& c) {
  Json j{{"kind", to_string(c.kind)}, {"checked", c.checked}, {"confidence", c.confidence}};
  j["witness"] = c.witness ? Json(c.witness->to_hex()) : Json(nullptr);
  return j;
}

inline Json to_json(const SampleSeq& s) {
  Json a = Json::array();
  for (std::uint64_t v : s.a) a.push_back(BitVector(s.n, v).to_hex());
  return a;
}

inline Json to_json(const BogolyubovResult& r) {
  return Json{{"V", to_json(r.V)},
              {"codim", r.codim},
              {"paper_codim_bound", r.paper_codim_bound},
              {"mu0", r.mu0},
              {"mu0_samples", r.mu0_samples},
              {"nu", r.nu},
              {"K_list", to_json(r.K_list)},
              {"certificate", to_json(r.certificate)},
              {"a_hat", to_json(r.a_hat.a_hat)},
              {"a_hat_verified", r.a_hat.verified},
              {"a_hat_estimate", r.a_hat.estimate},
              {"a_hat_attempts", r.a_hat.attempts},
              {"unverified", r.unverified},
              {"oracle_queries", r.oracle_queries},
              {"z_evaluations", r.z_evaluations},
              {"g_evaluations", r.g_evaluations},
              {"schedule", to_json(r.schedule)}};
}

// Binary real table: 8-byte little-endian n, then 2^n little-endian doubles.
inline void write_real_table(std::ostream& out, const RealTable& t) {
  auto put = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  put(static_cast<std::uint64_t>(t.dim()));
  for (double v : t.values()) put(std::bit_cast<std::uint64_t>(v));
}

inline RealTable read_real_table(std::istream& in) {
  auto get = [&]() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      const int c = in.get();
      if (c == EOF) throw std::runtime_error("truncated real table");
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
    }
    return v;
  };
  const auto n = static_cast<int>(get());
  RealTable t(n);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::bit_cast<double>(get());
  return t;
}

// One hex point per line, ascending.
inline void write_point_set_hex(std::ostream& out, const PointSet& s) {
  for (std::uint64_t x : s.points()) out << BitVector(s.dim(), x).to_hex() << '\n';
}

inline PointSet read_point_set_hex(std::istream& in, int n) {
  PointSet s(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    s.insert(BitVector::from_hex(n, line).bits());
  }
  return s;
}

// Raw bitmap: little-endian bytes of the word array, point x at bit x.
inline void write_point_set_bitmap(std::ostream& out, const PointSet& s) {
  const std::size_t nbytes = std::max<std::size_t>(1, static_cast<std::size_t>(s.universe_size() / 8));
  for (std::size_t i = 0; i < nbytes; ++i) {
    out.put(static_cast<char>((s.words()[i / 8] >> (8 * (i % 8))) & 0xff));
  }
}

inline PointSet read_point_set_bitmap(std::istream& in, int n) {
  PointSet s(n);
  const std::size_t nbytes = std::max<std::size_t>(1, static_cast<std::size_t>(s.universe_size() / 8));
  for (std::size_t i = 0; i < nbytes; ++i) {
    const int c = in.get();
    if (c == EOF) throw std::runtime_error("truncated bitmap");
    for (int b = 0; b < 8; ++b) {
      const std::uint64_t x = i * 8 + b;
      if (x < s.universe_size() && ((c >> b) & 1)) s.insert(x);
    }
  }
  return s;
}

// JSON-lines audit log; records are written in evaluation order.
class AuditLog {
 public:
  explicit AuditLog(std::ostream& out) : out_(&out) {}

  void record(const AuditRecord& r) {
    const Json j{{"name", r.name}, {"input", r.input_digest}, {"output", r.output}, {"queries", r.queries}};
    std::lock_guard<std::mutex> lock(mu_);
    *out_ << j.dump() << '\n';
    ++count_;
  }
  AuditSink sink() {
    return [this](const AuditRecord& r) { record(r); };
  }
  std::uint64_t count() const { return count_; }

 private:
  std::ostream* out_;
  std::mutex mu_;
  std::uint64_t count_ = 0;
};

}  // namespace f2ap

#endif  // F2AP_IO_HPP_
