// Copyright 2026 The leakelim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leakelim/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace leakelim {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write_json(const Json& j, int indent, std::string& out) {
  const std::string pad(2 * (indent + 1), ' ');
  const std::string close_pad(2 * indent, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        write_json(it.value(), indent + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        write_json(j[i], indent + 1, out);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_double(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  write_json(j, 0, out);
  out += "\n";
  return out;
}

Json to_json(const EncodingDescriptor& d) {
  Json j;
  j["kind"] = to_string(d.kind);
  j["K"] = d.k;
  if (d.kind == EncodingKind::Fermionic) j["n_levels"] = d.n_levels;
  if (d.kind == EncodingKind::DualRail) j["photons"] = d.total_photons;
  return j;
}

EncodingDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("encoding must be a JSON object");
  }
  EncodingDescriptor d;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "kind") {
      d.kind = encoding_kind_from_string(it.value().get<std::string>());
    } else if (key == "K") {
      d.k = it.value().get<int>();
    } else if (key == "n_levels") {
      d.n_levels = it.value().get<int>();
    } else if (key == "photons") {
      d.total_photons = it.value().get<int>();
    } else {
      throw std::invalid_argument("unknown encoding key '" + key + "'");
    }
  }
  return d;
}

Json to_json(const LEOSpec& s) {
  Json j;
  j["encoding"] = to_string(s.encoding);
  j["K"] = s.k;
  j["sign"] = s.sign;
  j["phase"] = s.phase;
  return j;
}

Json to_json(const ValidationReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["anticommutator_l"] = r.anticommutator_l;
  j["commutator_e"] = r.commutator_e;
  j["commutator_eperp"] = r.commutator_eperp;
  j["max_l_entry"] = r.max_l_entry;
  j["tolerance"] = r.tolerance;
  j["verdict"] = r.verdict;
  return j;
}

Json to_json(const Gate& g) {
  Json j;
  j["generator"] = g.generator;
  j["angle"] = g.angle;
  return j;
}

Json to_json(const GateSequence& s) {
  Json j;
  j["target"] = {{"generator", s.target_label}, {"angle", s.target_angle}};
  j["primitive_set"] = s.primitive_set.name;
  j["gate_count"] = s.size();
  Json gates = Json::array();
  for (const Gate& g : s.gates) gates.push_back(to_json(g));
  j["gates"] = std::move(gates);
  Json steps = Json::array();
  for (const RecursionStep& st : s.steps) {
    steps.push_back({{"level", st.level},
                     {"conjugator", st.conjugator},
                     {"generator", st.generator},
                     {"sign", st.sign}});
  }
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const TermClass& c) {
  Json j;
  j["label"] = c.label;
  j["e_norm"] = c.e_norm;
  j["eperp_norm"] = c.eperp_norm;
  j["l_norm"] = c.l_norm;
  return j;
}

Json to_json(const LogLogFit& f) {
  Json j;
  j["status"] = to_string(f.status);
  j["slope"] = f.slope;
  j["intercept"] = f.intercept;
  j["r2"] = f.r2;
  j["points_used"] = f.points_used;
  j["x_min"] = f.x_min;
  j["x_max"] = f.x_max;
  return j;
}

Json to_json(const GateCountReport& r) {
  Json j;
  j["encoding"] = to_string(r.kind);
  Json counts = Json::array();
  for (const auto& [k, n] : r.counts) counts.push_back({{"K", k}, {"gates", n}});
  j["counts"] = std::move(counts);
  j["slope"] = r.slope;
  j["intercept"] = r.intercept;
  j["max_residual"] = r.max_residual;
  return j;
}

std::string sweep_csv(const SweepResult& s) {
  std::string out = "t_or_n,leakage_worst,leakage_avg,target_distance\n";
  for (const SweepPoint& p : s.points) {
    out += format_double(p.x) + "," + format_double(p.leakage_worst) + "," +
           format_double(p.leakage_avg) + "," +
           format_double(p.target_distance) + "\n";
  }
  return out;
}

Json sweep_fit_json(const SweepResult& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == SweepKind::Time) {
    j["n"] = s.n;
  } else {
    j["total_time"] = s.total_time;
  }
  j["points"] = s.points.size();
  j["fit"] = to_json(s.fit);
  j["perturbative"] = s.perturbative;
  j["warning"] = s.warning;
  return j;
}

Json gate_count_golden(int k_max) {
  Json j;
  j["k_max"] = k_max;
  Json reports = Json::array();
  for (EncodingKind kind :
       {EncodingKind::Fermionic, EncodingKind::Dfs2, EncodingKind::Dfs3}) {
    reports.push_back(to_json(gate_count_report(kind, 1, k_max)));
  }
  j["reports"] = std::move(reports);
  return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "'");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace leakelim
