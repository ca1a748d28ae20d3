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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dirax/cli.hpp"

namespace {

struct Flags {
  std::string config_path;
  std::string output;
  double h = 0.0;
  double t_final = 0.0;
  int sigma = 0;
  double lambda = 0.0;
  bool has_h = false, has_t_final = false, has_sigma = false,
       has_lambda = false;
};

int run_command(const std::string& command, const Flags& flags) {
  using nlohmann::json;

  std::string text = "{}";
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) {
      std::cerr << "config error: cannot read " << flags.config_path << "\n";
      return dirax::cli::kExitConfig;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  json doc = json::parse(text, nullptr, false, /*ignore_comments=*/true);
  if (doc.is_discarded() || !doc.is_object()) {
    std::cerr << "config error: " << flags.config_path
              << " is not a JSON object\n";
    return dirax::cli::kExitConfig;
  }
  doc["command"] = command;
  // flags override config keys
  if (!flags.output.empty()) doc["output"] = flags.output;
  if (flags.has_h) doc["h"] = flags.h;
  if (flags.has_t_final) doc["t_final"] = flags.t_final;
  if (flags.has_sigma) doc["sigma"] = flags.sigma;
  if (flags.has_lambda) doc["lambda"] = flags.lambda;

  dirax::cli::RunConfig config;
  try {
    config = dirax::cli::parse_config(doc.dump());
  } catch (const dirax::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return dirax::cli::kExitConfig;
  }

  dirax::cli::RunOutcome outcome;
  try {
    outcome = dirax::cli::run(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dirax::cli::kExitNumerical;
  }
  if (!outcome.message.empty()) std::cerr << outcome.message << "\n";
  if (outcome.exit_code == dirax::cli::kExitOk) {
    std::cout << "wrote " << config.output << "\n";
  }
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Darboux-transformation toolkit for the one-dimensional Dirac "
      "equation: Rabi dynamics control and single-qubit gate synthesis"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print help");  // frees -h/--h for the step size

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"rabi", "Baseline two-level Rabi run; emits populations and inversion"},
      {"controlled",
       "Open-loop Darboux-controlled run D(sigma_i); emits populations, "
       "inversion and the transformed potential"},
      {"gate", "Propagate one field configuration and classify the gate"},
      {"synthesize",
       "Tune (amplitude, duration) to synthesize a named target gate"},
      {"resume", "Classify a list of field configurations into a table"},
      {"verify", "Check the intertwining relation residual for a seed"},
  };

  std::map<std::string, Flags> flags;
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->set_help_flag("--help", "Print help");
    Flags& f = flags[name];
    sub->add_option("--config", f.config_path,
                    "JSON config file (comments allowed)");
    sub->add_option("--output", f.output, "CSV output path");
    if (name != "resume") {
      sub->add_option("--h", f.h, "integration step override")
          ->each([&f](const std::string&) { f.has_h = true; });
    }
    const bool timed = name == "rabi" || name == "controlled" || name == "verify";
    if (timed) {
      sub->add_option("--t-final", f.t_final, "final time override")
          ->each([&f](const std::string&) { f.has_t_final = true; });
    }
    if (name == "controlled" || name == "verify") {
      sub->add_option("--sigma", f.sigma, "controller Pauli axis (1|2|3)")
          ->each([&f](const std::string&) { f.has_sigma = true; });
      sub->add_option("--lambda", f.lambda, "seed eigenvalue magnitude")
          ->each([&f](const std::string&) { f.has_lambda = true; });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return dirax::cli::kExitConfig;  // bad flags are config errors
  }

  for (const auto& [name, description] : commands) {
    if (app.get_subcommand(name)->parsed()) {
      return run_command(name, flags[name]);
    }
  }
  return dirax::cli::kExitConfig;
}
