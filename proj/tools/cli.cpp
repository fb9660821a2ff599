// Copyright 2026 The auxsim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "auxsim/auxsim.h"

namespace auxsim_cli {

namespace {

struct InstanceDeleter {
  void operator()(auxsim_instance* p) const { auxsim_instance_free(p); }
};
struct ClassDeleter {
  void operator()(auxsim_class* p) const { auxsim_class_free(p); }
};
struct SimulatorDeleter {
  void operator()(auxsim_simulator* p) const { auxsim_simulator_free(p); }
};
struct SimulationDeleter {
  void operator()(auxsim_simulation* p) const { auxsim_simulation_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { auxsim_string_free(p); }
};

using InstancePtr = std::unique_ptr<auxsim_instance, InstanceDeleter>;
using ClassPtr = std::unique_ptr<auxsim_class, ClassDeleter>;
using SimulatorPtr = std::unique_ptr<auxsim_simulator, SimulatorDeleter>;
using SimulationPtr = std::unique_ptr<auxsim_simulation, SimulationDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int ExitFor(auxsim_status status) {
  switch (status) {
    case AUXSIM_OK:
      return kExitOk;
    case AUXSIM_ERR_NON_CONVERGENCE:
    case AUXSIM_ERR_SPARSIFY_FAILED:
      return kExitNonConvergence;
    default:
      return kExitBadInput;
  }
}

int Report(auxsim_status status, const char* step, std::ostream& err) {
  err << "auxsim: " << step << " failed (" << auxsim_status_name(status)
      << "): " << auxsim_last_error() << "\n";
  return ExitFor(status);
}

// Writes to cfg.out_path when set, else to `out`.
bool Emit(const RunConfig& cfg, const std::string& text, std::ostream& out,
          std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) {
    err << "auxsim: cannot write " << cfg.out_path << "\n";
    return false;
  }
  return true;
}

bool CheckEps(double eps, std::ostream& err) {
  if (!(eps > 0.0 && eps < 1.0)) {
    err << "auxsim: --eps must be in (0, 1), got " << eps << "\n";
    return false;
  }
  return true;
}

auxsim_cipher_spec SpecFrom(const RunConfig& cfg) {
  auxsim_cipher_spec spec;
  auxsim_cipher_spec_init(&spec);
  spec.k = cfg.k;
  spec.ell = cfg.ell;
  spec.q = cfg.q;
  spec.theta = cfg.theta;
  spec.c1 = cfg.c1;
  spec.c2 = cfg.c2;
  return spec;
}

}  // namespace

int RunSimulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!CheckEps(cfg.eps, err)) return kExitBadInput;
  auxsim_instance* inst_raw = nullptr;
  if (auto s = auxsim_instance_load(cfg.instance_path.c_str(), &inst_raw)) {
    return Report(s, "loading instance", err);
  }
  InstancePtr inst(inst_raw);
  auxsim_class* cls_raw = nullptr;
  if (auto s = auxsim_class_load(cfg.class_path.c_str(), &cls_raw)) {
    return Report(s, "loading class", err);
  }
  ClassPtr cls(cls_raw);

  auxsim_simulate_options opts;
  auxsim_simulate_options_init(&opts);
  opts.eps = cfg.eps;
  opts.seed = cfg.seed;
  opts.max_rounds = cfg.max_rounds;
  opts.max_retries = cfg.max_retries;
  auxsim_simulation* run_raw = nullptr;
  if (auto s = auxsim_simulate(inst.get(), cls.get(), &opts, &run_raw)) {
    return Report(s, "simulate", err);
  }
  SimulationPtr run(run_raw);

  char* json_raw = nullptr;
  if (auto s = auxsim_simulation_to_json(run.get(), &json_raw)) {
    return Report(s, "serializing simulator", err);
  }
  StringPtr json(json_raw);
  if (!Emit(cfg, json.get(), out, err)) return kExitBadInput;

  auxsim_complexity_report report;
  auxsim_game_summary game;
  auxsim_simulation_summary(run.get(), &report, &game);
  err << "simulate: rounds=" << game.rounds
      << " eps_achieved=" << game.eps_achieved
      << " max_advantage=" << game.max_advantage << " t=" << report.t_used
      << " idealized_size=" << report.idealized_size
      << " budget=" << report.budget_bound << "\n";
  return kExitOk;
}

int RunVerify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!CheckEps(cfg.eps, err)) return kExitBadInput;
  auxsim_instance* inst_raw = nullptr;
  if (auto s = auxsim_instance_load(cfg.instance_path.c_str(), &inst_raw)) {
    return Report(s, "loading instance", err);
  }
  InstancePtr inst(inst_raw);
  auxsim_class* cls_raw = nullptr;
  if (auto s = auxsim_class_load(cfg.class_path.c_str(), &cls_raw)) {
    return Report(s, "loading class", err);
  }
  ClassPtr cls(cls_raw);
  auxsim_simulator* sim_raw = nullptr;
  if (auto s = auxsim_simulator_load(cfg.simulator_path.c_str(), &sim_raw)) {
    return Report(s, "loading simulator", err);
  }
  SimulatorPtr sim(sim_raw);

  double adv = 0.0;
  size_t witness = 0;
  if (auto s = auxsim_verify(inst.get(), cls.get(), sim.get(), &adv, &witness)) {
    return Report(s, "verify", err);
  }
  const bool passed = adv <= cfg.eps;
  std::ostringstream doc;
  doc.precision(17);
  doc << "{\"max_advantage\": " << adv << ", \"witness\": " << witness
      << ", \"eps\": " << cfg.eps
      << ", \"passed\": " << (passed ? "true" : "false") << "}\n";
  if (!Emit(cfg, doc.str(), out, err)) return kExitBadInput;
  if (!passed) {
    err << "verify: max advantage " << adv << " exceeds eps " << cfg.eps
        << " (witness distinguisher " << witness << ")\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int RunSecurity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auxsim_method method;
  if (auto s = auxsim_method_parse(cfg.method.c_str(), &method)) {
    return Report(s, "parsing --method", err);
  }
  const auxsim_cipher_spec spec = SpecFrom(cfg);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  char* text_raw = nullptr;
  if (auto s = auxsim_security_report(method, &spec, format.c_str(), &text_raw)) {
    return Report(s, "security", err);
  }
  StringPtr text(text_raw);
  return Emit(cfg, text.get(), out, err) ? kExitOk : kExitBadInput;
}

int RunLeakage(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auxsim_method method;
  if (auto s = auxsim_method_parse(cfg.method.c_str(), &method)) {
    return Report(s, "parsing --method", err);
  }
  const auxsim_cipher_spec spec = SpecFrom(cfg);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  char* text_raw = nullptr;
  if (auto s = auxsim_leakage_report(method, &spec, cfg.lambda, format.c_str(),
                                     &text_raw)) {
    return Report(s, "leakage", err);
  }
  StringPtr text(text_raw);
  return Emit(cfg, text.get(), out, err) ? kExitOk : kExitBadInput;
}

int RunTables(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  char* text_raw = nullptr;
  const std::string format = cfg.format.empty() ? "md" : cfg.format;
  if (auto s = auxsim_tables_render(format.c_str(), &text_raw)) {
    return Report(s, "tables", err);
  }
  StringPtr text(text_raw);
  return Emit(cfg, text.get(), out, err) ? kExitOk : kExitBadInput;
}

int Main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  if (const char* env = std::getenv("AUXSIM_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) auxsim_set_threads(static_cast<unsigned>(n));
  }

  RunConfig cfg;
  CLI::App app{"Auxiliary-input simulators and leakage-resilient cipher "
               "security bounds"};
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand("simulate", "Build a simulator");
  simulate->add_option("--instance", cfg.instance_path, "Instance JSON")->required();
  simulate->add_option("--class", cfg.class_path, "Distinguisher class JSON")->required();
  simulate->add_option("--eps", cfg.eps, "Target advantage in (0,1)")->required();
  simulate->add_option("--seed", cfg.seed, "Random seed");
  simulate->add_option("--max-rounds", cfg.max_rounds, "Minimum game round budget");
  simulate->add_option("--max-retries", cfg.max_retries, "Sparsification redraws");
  simulate->add_option("--out", cfg.out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Re-check a stored simulator");
  verify->add_option("--instance", cfg.instance_path, "Instance JSON")->required();
  verify->add_option("--class", cfg.class_path, "Distinguisher class JSON")->required();
  verify->add_option("--simulator", cfg.simulator_path, "Simulator JSON")->required();
  verify->add_option("--eps", cfg.eps, "Accepted advantage in (0,1)")->required();
  verify->add_option("--out", cfg.out_path, "Output file (default stdout)");

  auto add_cipher = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "pj14 | vz13 | ours | dream");
    sub->add_option("--k", cfg.k, "Weak PRF key bits");
    sub->add_option("--q", cfg.q, "Number of blocks");
    sub->add_option("--theta", cfg.theta, "Log-factor exponent");
    sub->add_option("--c1", cfg.c1, "Constant in eps'");
    sub->add_option("--c2", cfg.c2, "Constant in the simulator loss");
    sub->add_option("--format", cfg.format, "json | md");
    sub->add_option("--out", cfg.out_path, "Output file (default stdout)");
  };
  auto* sec = app.add_subcommand("security", "Bits of security of the cipher");
  add_cipher(sec);
  sec->add_option("--ell", cfg.ell, "Leakage bits per round");
  auto* leak = app.add_subcommand("leakage", "Largest tolerable leakage");
  add_cipher(leak);
  leak->add_option("--lambda", cfg.lambda, "Target bits of security");

  auto* tables = app.add_subcommand("tables", "Regenerate comparison tables");
  tables->add_option("--format", cfg.format, "md | csv | json");
  tables->add_option("--out", cfg.out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "auxsim: " << e.what() << "\n";
    return kExitBadInput;
  }

  if (simulate->parsed()) return RunSimulate(cfg, out, err);
  if (verify->parsed()) return RunVerify(cfg, out, err);
  if (sec->parsed()) return RunSecurity(cfg, out, err);
  if (leak->parsed()) return RunLeakage(cfg, out, err);
  if (tables->parsed()) return RunTables(cfg, out, err);
  return kExitBadInput;
}

}  // namespace auxsim_cli
