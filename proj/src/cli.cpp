// Copyright 2026 The dirax Authors
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

#include "dirax/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "dirax/darboux.hpp"
#include "dirax/pauli.hpp"

namespace dirax::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kCommands = {"rabi",       "controlled", "gate",
                                         "synthesize", "resume",     "verify"};

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"rabi",
       {"command", "output", "g", "delta", "epsilon", "t_final", "h", "psi0"}},
      {"controlled",
       {"command", "output", "g", "delta", "epsilon", "t_final", "h", "psi0",
        "sigma", "lambda", "sing_guard"}},
      {"gate",
       {"command", "output", "direction", "amplitude", "duration", "envelope",
        "h"}},
      {"synthesize",
       {"command", "output", "target", "direction", "a_min", "a_max", "t_min",
        "t_max", "budget", "h", "fidelity_threshold"}},
      {"resume", {"command", "output", "configs"}},
      {"verify",
       {"command", "output", "g", "delta", "sigma", "lambda", "epsilon",
        "t_final", "h", "residual_tol", "sing_guard"}},
  };
  return keys;
}

[[noreturn]] void fail(const std::string& key, const std::string& constraint) {
  throw ValidationError("config key '" + key + "': " + constraint);
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(key, "must be a number");
  return j[key].get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) fail(key, "must be an integer");
  return j[key].get<int>();
}

std::string get_string(const json& j, const std::string& key,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) fail(key, "must be a string");
  return j[key].get<std::string>();
}

Direction4 get_direction(const json& j, const std::string& key,
                         const Direction4& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_array() || j[key].size() != 4) {
    fail(key, "must be an array of 4 numbers [d0, d1, d2, d3]");
  }
  Direction4 d;
  for (int k = 0; k < 4; ++k) {
    if (!j[key][k].is_number()) fail(key, "must contain numbers only");
    d[k] = j[key][k].get<double>();
  }
  return d;
}

Spinor get_psi0(const json& j, const std::string& key, const Spinor& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_array() || j[key].size() != 4) {
    fail(key, "must be an array of 4 numbers [re1, im1, re2, im2]");
  }
  double v[4];
  for (int k = 0; k < 4; ++k) {
    if (!j[key][k].is_number()) fail(key, "must contain numbers only");
    v[k] = j[key][k].get<double>();
  }
  return Spinor{Complex(v[0], v[1]), Complex(v[2], v[3])};
}

Envelope parse_envelope(const std::string& name, const std::string& key) {
  if (name == "constant") return Envelope::constant;
  if (name == "sine-ramp") return Envelope::sine_ramp;
  fail(key, "must be \"constant\" or \"sine-ramp\"");
}

std::string envelope_name(Envelope env) {
  return env == Envelope::constant ? "constant" : "sine-ramp";
}

void check_unknown_keys(const json& j, const std::set<std::string>& allowed,
                        const std::string& context) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      throw ValidationError("unknown key '" + item.key() + "'" + context);
    }
  }
}

void check_grid(const json& j, const std::string& span_key, double span,
                double h) {
  if (!(span > 0.0)) fail(span_key, "must be > 0");
  if (!(h > 0.0)) fail("h", "must satisfy h > 0");
  try {
    make_grid(0.0, span, h);
  } catch (const BadGrid&) {
    fail(j.contains("h") ? "h" : span_key,
         span_key + "/h must be within 1e-9 of an integer >= 1");
  }
}

FieldConfig parse_field(const json& j, const std::string& context,
                        bool check_keys) {
  static const std::set<std::string> row_keys = {"direction", "amplitude",
                                                 "duration", "envelope", "h"};
  if (check_keys) check_unknown_keys(j, row_keys, context);
  FieldConfig cfg;
  cfg.direction = get_direction(j, "direction", Direction4{0, 1, 0, 0});
  cfg.amplitude = get_number(j, "amplitude", 1.0);
  cfg.duration = get_number(j, "duration", 1.0);
  cfg.envelope = parse_envelope(get_string(j, "envelope", "constant"),
                                "envelope");
  cfg.step = get_number(j, "h", 1e-3);
  return cfg;
}

// --- artifact formatting ---------------------------------------------------

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open output file " + tmp.string());
    out << content;
    if (!out) throw Error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string summary_path(const std::string& csv_path) {
  namespace fs = std::filesystem;
  fs::path p(csv_path);
  if (p.extension() == ".csv") p.replace_extension();
  p += ".summary.json";
  return p.string();
}

std::string inversion_csv(const InversionSeries& series) {
  std::ostringstream out;
  out << "t,P_up,P_down,W,f0_re,f0_im,f1_re,f1_im,f2_re,f2_im,f3_re,f3_im\n";
  for (std::size_t k = 0; k < series.w.size(); ++k) {
    out << fmt(series.grid.node(static_cast<Eigen::Index>(k))) << ','
        << fmt(series.p_up[k]) << ',' << fmt(series.p_down[k]) << ','
        << fmt(series.w[k]);
    for (int mu = 0; mu < 4; ++mu) {
      out << ',' << fmt(series.v1_components[k][mu].real()) << ','
          << fmt(series.v1_components[k][mu].imag());
    }
    out << '\n';
  }
  return out.str();
}

std::string resume_csv(const std::vector<ResumeRow>& rows) {
  std::ostringstream out;
  out << "row,d0,d1,d2,d3,amplitude,duration,best_match,fidelity,"
         "global_phase,error\n";
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ResumeRow& row = rows[k];
    out << k;
    for (int mu = 0; mu < 4; ++mu) out << ',' << fmt(row.config.direction[mu]);
    out << ',' << fmt(row.config.amplitude) << ','
        << fmt(row.config.duration) << ',' << row.report.best_match << ','
        << fmt(row.report.fidelity) << ',' << fmt(row.report.global_phase)
        << ',' << csv_quote(row.error) << '\n';
  }
  return out.str();
}

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["output"] = c.output;
  if (c.command == "rabi" || c.command == "controlled") {
    j["g"] = c.rabi.g;
    j["delta"] = c.rabi.delta;
    j["epsilon"] = c.rabi.epsilon;
    j["t_final"] = c.rabi.t_final;
    j["h"] = c.rabi.h;
    j["psi0"] = {c.rabi.psi0[0].real(), c.rabi.psi0[0].imag(),
                 c.rabi.psi0[1].real(), c.rabi.psi0[1].imag()};
    if (c.command == "controlled") {
      j["sigma"] = c.sigma;
      j["lambda"] = c.lambda;
      j["sing_guard"] = c.sing_guard;
    }
  } else if (c.command == "gate") {
    j["direction"] = {c.field.direction[0], c.field.direction[1],
                      c.field.direction[2], c.field.direction[3]};
    j["amplitude"] = c.field.amplitude;
    j["duration"] = c.field.duration;
    j["envelope"] = envelope_name(c.field.envelope);
    j["h"] = c.field.step;
  } else if (c.command == "synthesize") {
    j["target"] = c.target;
    j["direction"] = {c.field.direction[0], c.field.direction[1],
                      c.field.direction[2], c.field.direction[3]};
    j["a_min"] = c.a_min;
    j["a_max"] = c.a_max;
    j["t_min"] = c.t_min;
    j["t_max"] = c.t_max;
    j["budget"] = c.budget;
    j["h"] = c.field.step;
    j["fidelity_threshold"] = c.fidelity_threshold;
  } else if (c.command == "resume") {
    json rows = json::array();
    for (const FieldConfig& f : c.resume_configs) {
      json row;
      row["direction"] = {f.direction[0], f.direction[1], f.direction[2],
                          f.direction[3]};
      row["amplitude"] = f.amplitude;
      row["duration"] = f.duration;
      row["envelope"] = envelope_name(f.envelope);
      row["h"] = f.step;
      rows.push_back(row);
    }
    j["configs"] = rows;
  } else if (c.command == "verify") {
    j["g"] = c.rabi.g;
    j["delta"] = c.rabi.delta;
    j["sigma"] = c.sigma;
    j["lambda"] = c.lambda;
    j["epsilon"] = c.epsilon_test;
    j["t_final"] = c.rabi.t_final;
    j["h"] = c.rabi.h;
    j["residual_tol"] = c.residual_tol;
    j["sing_guard"] = c.sing_guard;
  }
  return j;
}

void write_artifacts(const RunConfig& c, const std::string& csv,
                     const json& results) {
  json summary;
  summary["command"] = c.command;
  summary["config"] = config_json(c);
  summary["results"] = results;
  write_file_atomic(c.output, csv);
  write_file_atomic(summary_path(c.output), summary.dump(2) + "\n");
}

json gate_report_json(const GateReport& report) {
  json j;
  j["best_match"] = report.best_match;
  j["fidelity"] = report.fidelity;
  j["global_phase"] = report.global_phase;
  j["unitarity_defect"] = report.unitarity_defect;
  j["tie"] = report.tie;
  return j;
}

ResumeRow single_row(const FieldConfig& cfg, const GateReport& report) {
  ResumeRow row;
  row.config = cfg;
  row.report = report;
  return row;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  const json j = json::parse(text, nullptr, false, /*ignore_comments=*/true);
  if (j.is_discarded()) throw ParseError("config is not valid JSON");
  if (!j.is_object()) throw ParseError("config must be a JSON object");

  RunConfig c;
  c.command = get_string(j, "command", "");
  if (!kCommands.count(c.command)) {
    fail("command", "must be one of rabi, controlled, gate, synthesize, "
                    "resume, verify");
  }
  check_unknown_keys(j, allowed_keys().at(c.command), "");
  c.output = get_string(j, "output", c.command + ".csv");

  if (c.command == "rabi" || c.command == "controlled") {
    // controlled defaults are the validated collapse configuration; see
    // cavity.hpp and the regression tests
    const bool controlled = c.command == "controlled";
    c.rabi.g = get_number(j, "g", 1.0);
    c.rabi.delta = get_number(j, "delta", controlled ? 8.0 : 0.0);
    c.rabi.epsilon = get_number(j, "epsilon", 0.0);
    c.rabi.t_final = get_number(j, "t_final", 100.0);
    c.rabi.h = get_number(j, "h", 0.01);
    c.rabi.psi0 = get_psi0(j, "psi0", Spinor{1.0, 0.0});
    if (c.rabi.g < 0.0) fail("g", "must satisfy g >= 0");
    if (!(c.rabi.psi0.norm() > 0.0)) fail("psi0", "must be a nonzero state");
    check_grid(j, "t_final", c.rabi.t_final, c.rabi.h);
    if (c.command == "controlled") {
      c.sigma = get_int(j, "sigma", 1);
      if (c.sigma < 1 || c.sigma > 3) fail("sigma", "must be 1, 2 or 3");
      c.lambda = get_number(j, "lambda", 0.5);
      if (!(c.lambda > 0.0)) fail("lambda", "must be > 0");
      c.sing_guard = get_number(j, "sing_guard", kDefaultSingularGuard);
      if (!(c.sing_guard > 0.0)) fail("sing_guard", "must be > 0");
    }
  } else if (c.command == "gate") {
    c.field = parse_field(j, "", /*check_keys=*/false);
    try {
      build_field_potential(c.field);
    } catch (const BadConfig& e) {
      throw ValidationError(e.what());
    }
    check_grid(j, "duration", c.field.duration, c.field.step);
  } else if (c.command == "synthesize") {
    c.target = get_string(j, "target", "");
    if (c.target.empty()) fail("target", "is required");
    bool known = false;
    for (const GateDef& g : gate_library()) known |= (g.name == c.target);
    if (!known) fail("target", "must name a library gate");
    c.field.direction = get_direction(j, "direction", Direction4{0, 1, 0, 0});
    c.a_min = get_number(j, "a_min", 0.5);
    c.a_max = get_number(j, "a_max", 2.0);
    c.t_min = get_number(j, "t_min", 0.5);
    c.t_max = get_number(j, "t_max", 4.0);
    c.budget = get_int(j, "budget", 400);
    c.field.step = get_number(j, "h", 1e-3);
    c.fidelity_threshold = get_number(j, "fidelity_threshold", 0.999);
    if (!(c.a_min > 0.0) || !(c.a_min < c.a_max)) {
      fail("a_min", "bounds must be positive and ordered");
    }
    if (!(c.t_min > 0.0) || !(c.t_min < c.t_max)) {
      fail("t_min", "bounds must be positive and ordered");
    }
    if (c.budget < 25) fail("budget", "must be >= 25");
    if (!(c.field.step > 0.0)) fail("h", "must satisfy h > 0");
    if (!(c.fidelity_threshold > 0.0) || c.fidelity_threshold > 1.0) {
      fail("fidelity_threshold", "must lie in (0, 1]");
    }
  } else if (c.command == "resume") {
    if (!j.contains("configs") || !j["configs"].is_array() ||
        j["configs"].empty()) {
      fail("configs", "must be a non-empty array of field configs");
    }
    int row = 0;
    for (const json& item : j["configs"]) {
      if (!item.is_object()) fail("configs", "entries must be objects");
      c.resume_configs.push_back(parse_field(
          item, " in configs[" + std::to_string(row) + "]", true));
      ++row;
    }
  } else if (c.command == "verify") {
    c.rabi.g = get_number(j, "g", 0.0);
    c.rabi.delta = get_number(j, "delta", 1.0);
    c.rabi.t_final = get_number(j, "t_final", 5.0);
    c.rabi.h = get_number(j, "h", 1e-3);
    c.sigma = get_int(j, "sigma", 3);
    c.lambda = get_number(j, "lambda", 1.0);
    c.epsilon_test = get_number(j, "epsilon", 2.0);
    c.residual_tol = get_number(j, "residual_tol", 1e-5);
    c.sing_guard = get_number(j, "sing_guard", kDefaultSingularGuard);
    if (c.rabi.g < 0.0) fail("g", "must satisfy g >= 0");
    if (c.sigma < 1 || c.sigma > 3) fail("sigma", "must be 1, 2 or 3");
    if (!(c.lambda > 0.0)) fail("lambda", "must be > 0");
    if (!(c.residual_tol > 0.0)) fail("residual_tol", "must be > 0");
    if (!(c.sing_guard > 0.0)) fail("sing_guard", "must be > 0");
    check_grid(j, "t_final", c.rabi.t_final, c.rabi.h);
  }
  return c;
}

std::string render_config(const RunConfig& config) {
  return config_json(config).dump(2) + "\n";
}

RunOutcome run(const RunConfig& c) {
  try {
    if (c.command == "rabi" || c.command == "controlled") {
      const InversionSeries series =
          c.command == "rabi"
              ? rabi_baseline(c.rabi)
              : controlled_run(c.rabi, c.sigma, c.lambda, c.sing_guard);
      json results;
      results["collapse_metric"] = collapse_metric(series.w);
      results["nodes"] = series.w.size();
      results["final_w"] = series.w.back();
      if (series.seed_eigenvalues) {
        results["seed_eigenvalues"] = {series.seed_eigenvalues->first,
                                       series.seed_eigenvalues->second};
      }
      write_artifacts(c, inversion_csv(series), results);
      return {kExitOk, ""};
    }

    if (c.command == "gate") {
      const PotentialSpec spec = build_field_potential(c.field);
      const GateReport evolved =
          evolve_gate(spec, c.field.duration, c.field.step);
      GateReport report = classify_gate(evolved.propagator);
      report.unitarity_defect = evolved.unitarity_defect;
      json results = gate_report_json(report);
      write_artifacts(c, resume_csv({single_row(c.field, report)}), results);
      return {kExitOk, ""};
    }

    if (c.command == "synthesize") {
      const SynthesisResult synth = synthesize(
          c.target, c.field.direction, {c.a_min, c.a_max}, {c.t_min, c.t_max},
          c.budget, c.field.step, c.fidelity_threshold);
      FieldConfig found = c.field;
      found.amplitude = synth.amplitude;
      found.duration = synth.duration;
      json results = gate_report_json(synth.report);
      results["target"] = c.target;
      results["amplitude"] = synth.amplitude;
      results["duration"] = synth.duration;
      results["incomplete"] = synth.incomplete;
      write_artifacts(c, resume_csv({single_row(found, synth.report)}),
                      results);
      return {kExitOk, ""};
    }

    if (c.command == "resume") {
      const std::vector<ResumeRow> rows = resume_table(c.resume_configs);
      std::size_t failed = 0;
      for (const ResumeRow& row : rows) failed += row.error.empty() ? 0 : 1;
      json results;
      results["rows"] = rows.size();
      results["failed_rows"] = failed;
      write_artifacts(c, resume_csv(rows), results);
      return {kExitOk, ""};
    }

    if (c.command == "verify") {
      FourVector f = FourVector::Zero();
      f[1] = c.rabi.g;
      f[3] = 0.5 * c.rabi.delta;
      const PotentialSpec v0 = constant_potential(f);
      const DarbouxSeed seed =
          seed_for_sigma(c.sigma, v0, c.lambda, 0.0, c.rabi.t_final, c.rabi.h,
                         c.sing_guard);
      const Trajectory probe = integrate_stationary(
          v0, c.epsilon_test, Spinor{1.0, 0.0}, 0.0, c.rabi.t_final, c.rabi.h);
      const ResidualReport report = verify_intertwining(seed, probe);

      std::ostringstream csv;
      csv << "t,residual\n";
      for (std::size_t k = 0; k < report.node_rel.size(); ++k) {
        csv << fmt(seed.grid().node(static_cast<Eigen::Index>(k) + 1)) << ','
            << fmt(report.node_rel[k]) << '\n';
      }
      json results;
      results["residual_max"] = report.max_rel;
      results["residual_mean"] = report.mean_rel;
      results["zero_output"] = report.zero_output;
      results["residual_tol"] = c.residual_tol;
      results["seed_eigenvalues"] = {seed.lambda1, seed.lambda2};
      const bool passed = !report.zero_output && report.max_rel <= c.residual_tol;
      results["passed"] = passed;
      write_artifacts(c, csv.str(), results);
      if (!passed) {
        return {kExitVerification,
                report.zero_output
                    ? "verification failed: transformed state is zero "
                      "(eigenvalue collision with the seed)"
                    : "verification failed: residual max " +
                          fmt(report.max_rel) + " exceeds tolerance " +
                          fmt(c.residual_tol)};
      }
      return {kExitOk, ""};
    }

    return {kExitConfig, "unknown command " + c.command};
  } catch (const SingularSeed& e) {
    return {kExitNumerical, std::string("numerical failure: ") + e.what()};
  } catch (const NotUnitary& e) {
    return {kExitNumerical, std::string("numerical failure: ") + e.what()};
  } catch (const NonHermitian& e) {
    return {kExitNumerical, std::string("numerical failure: ") + e.what()};
  } catch (const ZeroState& e) {
    return {kExitNumerical, std::string("numerical failure: ") + e.what()};
  } catch (const OutOfDomain& e) {
    return {kExitNumerical, std::string("numerical failure: ") + e.what()};
  } catch (const BadConfig& e) {
    return {kExitConfig, std::string("config error: ") + e.what()};
  } catch (const BadBounds& e) {
    return {kExitConfig, std::string("config error: ") + e.what()};
  } catch (const BadGrid& e) {
    return {kExitConfig, std::string("config error: ") + e.what()};
  } catch (const TooShort& e) {
    return {kExitConfig, std::string("config error: ") + e.what()};
  } catch (const Error& e) {
    return {kExitNumerical, std::string("error: ") + e.what()};
  }
}

}  // namespace dirax::cli
