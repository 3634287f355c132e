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

#include "leakelim/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "leakelim/compiler.hpp"
#include "leakelim/json_io.hpp"
#include "leakelim/leo.hpp"

namespace leakelim {

namespace {

/// Raised for bad configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised for unsupported command/mode combinations; exit code 4.
struct ModeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr double kClassTol = 1e-12;
constexpr double kCompileTol = 1e-9;

SweepKind sweep_kind_from_string(const std::string& s) {
  if (s == "t-sweep") return SweepKind::Time;
  if (s == "n-sweep") return SweepKind::Pulses;
  throw ConfigError("unknown sweep kind '" + s + "' (t-sweep or n-sweep)");
}

void apply_sweep_json(const Json& j, SweepConfig& s) {
  if (!j.is_object()) throw ConfigError("sweep must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "kind") {
      s.kind = sweep_kind_from_string(it.value().get<std::string>());
    } else if (key == "points") {
      s.points = it.value().get<std::vector<double>>();
    } else if (key == "n") {
      s.n = it.value().get<int>();
    } else if (key == "T") {
      s.total_time = it.value().get<double>();
    } else {
      throw ConfigError("unknown sweep key '" + key + "'");
    }
  }
}

std::string term_class(const TermClass& c) {
  const bool e = c.e_norm > kClassTol;
  const bool ep = c.eperp_norm > kClassTol;
  const bool l = c.l_norm > kClassTol;
  if (!e && !ep && !l) return "zero";
  if (e && !ep && !l) return "E";
  if (!e && ep && !l) return "E_perp";
  if (!e && !ep && l) return "L";
  return "mixed";
}

Json dims_json(const SystemBathModel& m) {
  return {{"system", m.system_dim()},
          {"bath", m.bath_dim()},
          {"joint", m.joint_dim()}};
}

Json header_json(const std::string& command, const ExperimentConfig& c) {
  Json j;
  j["command"] = command;
  j["encoding"] = to_json(c.encoding);
  j["seed"] = *c.seed;
  return j;
}

void validate(const ExperimentConfig& c) {
  if (!c.seed) throw ConfigError("a seed is required (--seed or \"seed\")");
  if (c.encoding.k < 1) throw ConfigError("K must be >= 1");
  if (c.bath_dim < 1) throw ConfigError("bath_dim must be >= 1");
  if (!std::isfinite(c.strength) || c.strength < 0.0) {
    throw ConfigError("strength must be finite and >= 0");
  }
  if (c.samples < 1) throw ConfigError("samples must be >= 1");
  if (c.format != "json" && c.format != "csv") {
    throw ConfigError("format must be json or csv");
  }
  if (c.coupling != "linear") bilinear_mode_from_string(c.coupling);
  if (c.sweep.n < 1) throw ConfigError("sweep n must be >= 1");
  if (!(c.sweep.total_time > 0.0)) throw ConfigError("sweep T must be > 0");
}

/// Writes `content` to <out>/<name>, creating the directory.
void emit(const ExperimentConfig& c, const std::string& name,
          const std::string& content) {
  std::filesystem::create_directories(c.output_dir);
  write_file_atomic((std::filesystem::path(c.output_dir) / name).string(),
                    content);
}

SystemBathModel build_model(const Encoding& enc, const ExperimentConfig& c) {
  if (c.coupling == "linear") {
    return random_linear_coupling(enc, c.bath_dim, *c.seed, c.strength);
  }
  if (enc.descriptor.kind != EncodingKind::Dfs3) {
    throw ModeError("bilinear couplings need the dfs3 encoding");
  }
  return bilinear_coupling(enc, c.bath_dim, *c.seed,
                           bilinear_mode_from_string(c.coupling), c.strength);
}

Encoding build_encoding(const EncodingDescriptor& d) {
  check_dim(ambient_dim_of(d), "encoding");
  return make_encoding(d);
}

int cmd_classify(const ExperimentConfig& c, std::ostream& out) {
  const Encoding enc = build_encoding(c.encoding);
  const SystemBathModel m = build_model(enc, c);
  std::size_t n_leaky = 0;
  for (const TermClass& t : m.classification()) {
    if (t.l_norm > kClassTol) ++n_leaky;
  }
  if (c.format == "csv") {
    std::string csv = "label,e_norm,eperp_norm,l_norm,class\n";
    for (const TermClass& t : m.classification()) {
      csv += t.label + "," + format_double(t.e_norm) + "," +
             format_double(t.eperp_norm) + "," + format_double(t.l_norm) +
             "," + term_class(t) + "\n";
    }
    emit(c, "classify.csv", csv);
  } else {
    Json j = header_json("classify", c);
    j["bath_dim"] = c.bath_dim;
    j["strength"] = c.strength;
    j["coupling"] = c.coupling;
    j["dims"] = dims_json(m);
    Json terms = Json::array();
    for (const TermClass& t : m.classification()) {
      Json row = to_json(t);
      row["class"] = term_class(t);
      terms.push_back(std::move(row));
    }
    j["terms"] = std::move(terms);
    j["leaky_terms"] = n_leaky;
    emit(c, "classify.json", dump_json(j));
  }
  out << "classify: " << m.terms().size() << " terms, " << n_leaky
      << " with leakage\n";
  return kExitOk;
}

int cmd_leo_check(const ExperimentConfig& c, bool inject_identity,
                  std::ostream& out) {
  const Encoding enc = build_encoding(c.encoding);
  LEOSpec spec;
  spec.encoding = c.encoding.kind;
  spec.k = c.encoding.k;
  const Operator r = inject_identity
                         ? Operator::identity(enc.code.ambient_dim())
                         : encoding_leo(enc, spec);
  const ValidationReport rep =
      validate_leo(r, enc.code, c.samples, *c.seed);
  const double shape = leo_shape_residual(r, enc.code);
  if (c.format == "csv") {
    std::string csv =
        "encoding,K,samples,seed,anticommutator_l,commutator_e,"
        "commutator_eperp,max_l_entry,shape_residual,verdict\n";
    csv += to_string(c.encoding.kind) + "," + std::to_string(c.encoding.k) +
           "," + std::to_string(rep.samples) + "," + std::to_string(rep.seed) +
           "," + format_double(rep.anticommutator_l) + "," +
           format_double(rep.commutator_e) + "," +
           format_double(rep.commutator_eperp) + "," +
           format_double(rep.max_l_entry) + "," + format_double(shape) + "," +
           (rep.verdict ? "true" : "false") + "\n";
    emit(c, "leo_check.csv", csv);
  } else {
    Json j = header_json("leo-check", c);
    j["leo"] = to_json(spec);
    j["injected_identity"] = inject_identity;
    j["shape_residual"] = shape;
    j["report"] = to_json(rep);
    emit(c, "leo_check.json", dump_json(j));
  }
  out << "leo-check: verdict " << (rep.verdict ? "pass" : "fail")
      << ", max|{R,L}| = " << format_double(rep.anticommutator_l) << "\n";
  return rep.verdict ? kExitOk : kExitVerification;
}

int cmd_compile(const ExperimentConfig& c, bool count_only,
                std::ostream& out) {
  const EncodingKind kind = c.encoding.kind;
  if (kind == EncodingKind::DualRail) {
    throw ModeError("compile: dual-rail has no gate-level compiler");
  }
  if (c.encoding.k > kMaxCompileK) {
    throw ResourceCapError("compile: K = " + std::to_string(c.encoding.k) +
                           " exceeds the compiler limit " +
                           std::to_string(kMaxCompileK));
  }
  if (!count_only && c.encoding.k > verification_cap(kind)) {
    throw ModeError("compile: K = " + std::to_string(c.encoding.k) +
                    " is above the verification cap " +
                    std::to_string(verification_cap(kind)) +
                    "; use --count-only");
  }
  const GateSequence seq = compile_leo(kind, c.encoding.k);

  Json verification = nullptr;
  bool passed = true;
  if (!count_only) {
    const Encoding enc = build_encoding(c.encoding);
    const Operator realized = realize(seq, OperatorContext(enc));
    const Operator direct = encoding_leo(enc);
    const double full = phase_distance(realized, direct);
    const double on_code = code_distance(realized, direct, enc.code);
    passed = full <= kCompileTol;
    verification = {{"phase_distance", full},
                    {"code_distance", on_code},
                    {"tolerance", kCompileTol},
                    {"passed", passed}};
    out << "compile: phase distance " << format_double(full)
        << ", code distance " << format_double(on_code) << "\n";
  }

  if (c.format == "csv") {
    std::string csv = "index,generator,angle,depth\n";
    for (std::size_t i = 0; i < seq.gates.size(); ++i) {
      const Gate& g = seq.gates[i];
      csv += std::to_string(i) + "," + g.generator + "," +
             format_double(g.angle) + "," + std::to_string(g.depth) + "\n";
    }
    emit(c, "compile.csv", csv);
  } else {
    Json j = header_json("compile", c);
    j["count_only"] = count_only;
    j["sequence"] = to_json(seq);
    j["verification"] = verification;
    emit(c, "compile.json", dump_json(j));
  }
  emit(c, "compile.txt", render_text(seq));
  out << "compile: " << seq.size() << " gates\n";
  return passed ? kExitOk : kExitVerification;
}

std::vector<double> default_points(SweepKind kind) {
  if (kind == SweepKind::Time) {
    std::vector<double> t;
    for (int i = 0; i <= 4; ++i) t.push_back(std::pow(10.0, -3.0 + 0.5 * i));
    return t;
  }
  return {2, 4, 8, 16, 32};
}

int cmd_sweep(const ExperimentConfig& c, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Encoding enc = build_encoding(c.encoding);
  const SystemBathModel m = build_model(enc, c);
  LEOSpec spec;
  spec.encoding = c.encoding.kind;
  spec.k = c.encoding.k;
  const Operator r = encoding_leo(enc, spec);
  const std::vector<double> pts =
      c.sweep.points.empty() ? default_points(c.sweep.kind) : c.sweep.points;

  SweepResult res;
  if (c.sweep.kind == SweepKind::Time) {
    res = time_sweep(m, r, pts, c.sweep.n);
  } else {
    std::vector<int> ns;
    for (double p : pts) {
      if (p != std::floor(p) || p < 1 || p > 1e6) {
        throw ConfigError("n-sweep points must be positive integers");
      }
      ns.push_back(static_cast<int>(p));
    }
    res = pulse_sweep(m, r, c.sweep.total_time, ns);
  }

  Json j = header_json("sweep", c);
  j["bath_dim"] = c.bath_dim;
  j["strength"] = c.strength;
  j["coupling"] = c.coupling;
  j["dims"] = dims_json(m);
  const Json fit = sweep_fit_json(res);
  for (auto it = fit.begin(); it != fit.end(); ++it) j[it.key()] = it.value();
  emit(c, "sweep.csv", sweep_csv(res));
  emit(c, "sweep_fit.json", dump_json(j));

  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  out << "sweep: " << to_string(res.kind) << " slope "
      << format_double(res.fit.slope) << " (" << to_string(res.fit.status)
      << ")\n";
  if (!res.warning.empty()) out << "warning: " << res.warning << "\n";
  out << "elapsed_s: " << elapsed << "\n";
  return kExitOk;
}

}  // namespace

ExperimentConfig config_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const Json& v = it.value();
      if (key == "encoding") {
        c.encoding = descriptor_from_json(v);
      } else if (key == "bath_dim") {
        c.bath_dim = v.get<std::size_t>();
      } else if (key == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (key == "strength") {
        c.strength = v.get<double>();
      } else if (key == "samples") {
        c.samples = v.get<int>();
      } else if (key == "coupling") {
        c.coupling = v.get<std::string>();
      } else if (key == "sweep") {
        apply_sweep_json(v, c.sweep);
      } else if (key == "output_dir") {
        c.output_dir = v.get<std::string>();
      } else if (key == "format") {
        c.format = v.get<std::string>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

int verification_cap(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Fermionic:
    case EncodingKind::Dfs2:
      return 4;
    case EncodingKind::Dfs3:
      return 2;
    case EncodingKind::DualRail:
      return 0;
  }
  return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Leakage elimination operators: classify, validate, compile "
               "and simulate."};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir, format;
  std::uint64_t seed = 0;
  auto* o_config = app.add_option("--config", config_path, "JSON config file")
                       ->check(CLI::ExistingFile);
  auto* o_seed = app.add_option("--seed", seed, "RNG seed (required)");
  auto* o_out = app.add_option("--out", out_dir, "output directory");
  auto* o_format = app.add_option("--format", format, "json or csv")
                       ->check(CLI::IsMember({"json", "csv"}));

  std::string encoding, coupling, sweep_kind, points;
  int k = 1, n_levels = 4, photons = 2, samples = 20, sweep_n = 1;
  std::size_t bath_dim = 4;
  double strength = 1.0, total_time = 1.0;
  bool inject_identity = false, count_only = false;

  struct Shared {
    CLI::Option *encoding, *k, *n_levels, *photons;
  };
  auto add_encoding = [&](CLI::App* sub) {
    return Shared{
        sub->add_option("--encoding", encoding,
                        "fermionic, dual-rail, dfs2 or dfs3"),
        sub->add_option("--K", k, "number of logical qubits"),
        sub->add_option("--n-levels", n_levels, "levels per fermionic site"),
        sub->add_option("--photons", photons, "dual-rail photon number")};
  };

  auto* classify = app.add_subcommand("classify", "per-term E/E_perp/L norms");
  auto* leo_check = app.add_subcommand("leo-check", "validate an LEO");
  auto* compile = app.add_subcommand("compile", "compile an LEO to pulses");
  auto* sweep = app.add_subcommand("sweep", "parity-kick suppression sweep");

  std::vector<std::pair<CLI::App*, Shared>> shared;
  for (CLI::App* sub : {classify, leo_check, compile, sweep}) {
    shared.emplace_back(sub, add_encoding(sub));
  }
  std::vector<CLI::Option*> o_bath, o_strength, o_coupling;
  for (CLI::App* sub : {classify, sweep}) {
    o_bath.push_back(sub->add_option("--bath-dim", bath_dim, "bath dimension"));
    o_strength.push_back(
        sub->add_option("--strength", strength, "coupling strength"));
    o_coupling.push_back(sub->add_option(
        "--coupling", coupling, "linear, scalar, cross, symmetric or full"));
  }
  auto* o_samples =
      leo_check->add_option("--samples", samples, "random samples per class");
  leo_check->add_flag("--inject-identity", inject_identity,
                      "validate the identity instead (must fail)");
  compile->add_flag("--count-only", count_only,
                    "emit gates and counts without building matrices");
  auto* o_kind = sweep->add_option("--kind", sweep_kind, "t-sweep or n-sweep");
  auto* o_points =
      sweep->add_option("--points", points, "comma-separated t or n values");
  auto* o_n = sweep->add_option("--n", sweep_n, "cycles for a t-sweep");
  auto* o_T = sweep->add_option("--T", total_time, "total time for an n-sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    ExperimentConfig c;
    if (o_config->count()) {
      std::ifstream f(config_path, std::ios::binary);
      std::stringstream ss;
      ss << f.rdbuf();
      c = config_from_json(ss.str());
    }
    if (o_seed->count()) c.seed = seed;
    if (o_out->count()) c.output_dir = out_dir;
    if (o_format->count()) c.format = format;
    for (const auto& [sub, opts] : shared) {
      if (!sub->parsed()) continue;
      try {
        if (opts.encoding->count()) {
          c.encoding.kind = encoding_kind_from_string(encoding);
        }
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      if (opts.k->count()) c.encoding.k = k;
      if (opts.n_levels->count()) c.encoding.n_levels = n_levels;
      if (opts.photons->count()) c.encoding.total_photons = photons;
    }
    for (std::size_t i = 0; i < o_bath.size(); ++i) {
      if (o_bath[i]->count()) c.bath_dim = bath_dim;
      if (o_strength[i]->count()) c.strength = strength;
      if (o_coupling[i]->count()) c.coupling = coupling;
    }
    if (o_samples->count()) c.samples = samples;
    if (o_kind->count()) c.sweep.kind = sweep_kind_from_string(sweep_kind);
    if (o_points->count()) {
      c.sweep.points.clear();
      std::stringstream ss(points);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used = 0;
          c.sweep.points.push_back(std::stod(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw ConfigError("bad sweep point '" + item + "'");
        }
      }
    }
    if (o_n->count()) c.sweep.n = sweep_n;
    if (o_T->count()) c.sweep.total_time = total_time;
    try {
      validate(c);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }

    if (classify->parsed()) return cmd_classify(c, out);
    if (leo_check->parsed()) return cmd_leo_check(c, inject_identity, out);
    if (compile->parsed()) return cmd_compile(c, count_only, out);
    return cmd_sweep(c, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ModeError& e) {
    err << "mode error: " << e.what() << "\n";
    return kExitMode;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::out_of_range& e) {
    err << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const PredicateError& e) {
    err << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "output error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}

}  // namespace leakelim
