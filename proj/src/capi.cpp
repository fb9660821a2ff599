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

#include "auxsim/auxsim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "auxsim/error.hpp"
#include "auxsim/io.hpp"
#include "auxsim/parallel.hpp"
#include "auxsim/security.hpp"
#include "auxsim/simulator.hpp"
#include "json.hpp"

struct auxsim_instance {
  auxsim::JointDistribution dist;
};
struct auxsim_class {
  auxsim::DistinguisherClass cls;
};
struct auxsim_simulator {
  auxsim::Simulator sim;
};
struct auxsim_simulation {
  auxsim::SimulationResult result;
};

namespace {

using auxsim::Error;
using auxsim::ErrorCode;
namespace sec = auxsim::security;

thread_local std::string g_last_error;

template <typename Fn>
auxsim_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return AUXSIM_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<auxsim_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  }
  return AUXSIM_ERR_INTERNAL;
}

void Require(const void* p, const char* name) {
  if (p == nullptr) {
    auxsim::Fail(ErrorCode::kInvalidArgument, std::string(name) + " is null");
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sec::Method ToMethod(auxsim_method m) {
  switch (m) {
    case AUXSIM_METHOD_PJ14:
      return sec::Method::kPJ14;
    case AUXSIM_METHOD_VZ13:
      return sec::Method::kVZ13;
    case AUXSIM_METHOD_OURS:
      return sec::Method::kOurs;
    case AUXSIM_METHOD_DREAM:
      return sec::Method::kDream;
  }
  auxsim::Fail(ErrorCode::kUnsupportedMethod, "unknown method id");
}

sec::CipherSecuritySpec ToSpec(const auxsim_cipher_spec* spec) {
  Require(spec, "spec");
  return sec::CipherSecuritySpec{spec->k,     spec->ell, spec->q, spec->beta,
                                 spec->theta, spec->c1,  spec->c2};
}

}  // namespace

extern "C" {

const char* auxsim_version(void) { return "0.1.0"; }

const char* auxsim_last_error(void) { return g_last_error.c_str(); }

const char* auxsim_status_name(auxsim_status status) {
  return auxsim::ErrorCodeName(static_cast<ErrorCode>(status));
}

void auxsim_string_free(char* s) { std::free(s); }

void auxsim_set_threads(unsigned count) { auxsim::SetWorkerThreads(count); }

auxsim_status auxsim_instance_parse(const char* json, auxsim_instance** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new auxsim_instance{auxsim::io::ParseInstance(json)};
  });
}

auxsim_status auxsim_instance_load(const char* path, auxsim_instance** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new auxsim_instance{
        auxsim::io::ParseInstance(auxsim::io::ReadFile(path))};
  });
}

void auxsim_instance_free(auxsim_instance* instance) { delete instance; }

size_t auxsim_instance_domain_size(const auxsim_instance* instance) {
  return instance ? instance->dist.domain_size() : 0;
}

int auxsim_instance_aux_bits(const auxsim_instance* instance) {
  return instance ? instance->dist.aux_bits() : -1;
}

auxsim_status auxsim_class_parse(const char* json, auxsim_class** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new auxsim_class{auxsim::io::ParseClass(json)};
  });
}

auxsim_status auxsim_class_load(const char* path, auxsim_class** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new auxsim_class{auxsim::io::ParseClass(auxsim::io::ReadFile(path))};
  });
}

void auxsim_class_free(auxsim_class* cls) { delete cls; }

size_t auxsim_class_size(const auxsim_class* cls) {
  return cls ? cls->cls.size() : 0;
}

auxsim_status auxsim_simulator_parse(const char* json, auxsim_simulator** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new auxsim_simulator{auxsim::io::ParseSimulator(json)};
  });
}

auxsim_status auxsim_simulator_load(const char* path, auxsim_simulator** out) {
  return Guard([&] {
    Require(path, "path");
    Require(out, "out");
    *out = new auxsim_simulator{
        auxsim::io::ParseSimulator(auxsim::io::ReadFile(path))};
  });
}

auxsim_status auxsim_simulator_true_channel(const auxsim_instance* instance,
                                            auxsim_simulator** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(out, "out");
    *out = new auxsim_simulator{
        auxsim::Simulator::FromChannel(auxsim::TrueChannel(instance->dist))};
  });
}

auxsim_status auxsim_simulator_to_json(const auxsim_simulator* sim,
                                       char** out) {
  return Guard([&] {
    Require(sim, "sim");
    Require(out, "out");
    *out = CopyString(auxsim::io::SimulatorToJson(sim->sim));
  });
}

void auxsim_simulator_free(auxsim_simulator* sim) { delete sim; }

auxsim_status auxsim_verify(const auxsim_instance* instance,
                            const auxsim_class* cls,
                            const auxsim_simulator* sim,
                            double* max_advantage, size_t* witness) {
  return Guard([&] {
    Require(instance, "instance");
    Require(cls, "cls");
    Require(sim, "sim");
    Require(max_advantage, "max_advantage");
    if (sim->sim.shape() != instance->dist.shape()) {
      auxsim::Fail(ErrorCode::kDimensionMismatch,
                   "simulator and instance differ in shape");
    }
    const auto r =
        auxsim::MaxAdvantage(cls->cls, instance->dist, sim->sim.Lower());
    *max_advantage = r.value;
    if (witness) *witness = r.witness;
  });
}

void auxsim_simulate_options_init(auxsim_simulate_options* opts) {
  if (opts == nullptr) return;
  opts->eps = 0.1;
  opts->seed = 0;
  opts->max_rounds = 0;
  opts->max_retries = 32;
}

auxsim_status auxsim_simulate(const auxsim_instance* instance,
                              const auxsim_class* cls,
                              const auxsim_simulate_options* opts,
                              auxsim_simulation** out) {
  return Guard([&] {
    Require(instance, "instance");
    Require(cls, "cls");
    Require(opts, "opts");
    Require(out, "out");
    auxsim::SimulationOptions options;
    options.eps = opts->eps;
    options.seed = opts->seed;
    options.max_rounds = opts->max_rounds;
    options.max_retries = opts->max_retries;
    *out = new auxsim_simulation{
        auxsim::SimulateFull(instance->dist, cls->cls, options)};
  });
}

auxsim_status auxsim_simulation_summary(const auxsim_simulation* sim,
                                        auxsim_complexity_report* report,
                                        auxsim_game_summary* game) {
  return Guard([&] {
    Require(sim, "sim");
    const auto& r = sim->result;
    if (report) {
      const auto& c = r.complexity;
      *report = auxsim_complexity_report{
          c.base_cost_s,  c.idealized_calls, c.actual_calls,
          c.idealized_size, c.budget_bound,  c.t_used,
          c.rho_used,     c.within_budget ? 1 : 0};
    }
    if (game) {
      *game = auxsim_game_summary{r.game.rounds,   r.game.round_budget,
                                  r.game.eps_achieved, r.max_advantage,
                                  r.witness,       r.retries_used};
    }
  });
}

auxsim_status auxsim_simulation_simulator(const auxsim_simulation* sim,
                                          auxsim_simulator** out) {
  return Guard([&] {
    Require(sim, "sim");
    Require(out, "out");
    *out = new auxsim_simulator{sim->result.simulator};
  });
}

auxsim_status auxsim_simulation_to_json(const auxsim_simulation* sim,
                                        char** out) {
  return Guard([&] {
    Require(sim, "sim");
    Require(out, "out");
    *out = CopyString(auxsim::io::SimulationToJson(sim->result));
  });
}

void auxsim_simulation_free(auxsim_simulation* sim) { delete sim; }

void auxsim_cipher_spec_init(auxsim_cipher_spec* spec) {
  if (spec == nullptr) return;
  *spec = auxsim_cipher_spec{512, 0, 16, 2, 0, 4, 1};
}

auxsim_status auxsim_method_parse(const char* name, auxsim_method* out) {
  return Guard([&] {
    Require(name, "name");
    Require(out, "out");
    *out = static_cast<auxsim_method>(sec::ParseMethod(name));
  });
}

auxsim_status auxsim_lambert_w2(double u, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = sec::LambertW2(u);
  });
}

auxsim_status auxsim_security_bits(const auxsim_cipher_spec* spec,
                                   double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = sec::SecurityBits(ToSpec(spec));
  });
}

auxsim_status auxsim_security_bits_exact(const auxsim_cipher_spec* spec,
                                         double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = sec::SecurityBitsExact(ToSpec(spec));
  });
}

auxsim_status auxsim_eps_prime_floor_log2(double k, double ell, double q,
                                          auxsim_method method, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = sec::EpsPrimeFloorLog2(k, ell, q, ToMethod(method));
  });
}

auxsim_status auxsim_vz_security_cap(double k, double ell, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = sec::VzSecurityCap(k, ell);
  });
}

auxsim_status auxsim_max_leakage(double k, double q, double lambda_target,
                                 int beta, double theta, double c1, double c2,
                                 int* out) {
  return Guard([&] {
    Require(out, "out");
    *out = sec::MaxLeakage(k, q, lambda_target, beta, theta, c1, c2);
  });
}

auxsim_status auxsim_simulator_cost_log2(auxsim_method method, double log2_s,
                                         double ell, double log2_eps,
                                         double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = sec::SimulatorCostLog2(ToMethod(method), log2_s, ell, log2_eps);
  });
}

auxsim_status auxsim_stream_cipher_params(double log2_eps_f, double log2_s_f,
                                          double q, double ell,
                                          auxsim_method method,
                                          auxsim_cipher_params* out) {
  return Guard([&] {
    Require(out, "out");
    const auto p =
        sec::StreamCipherParams(log2_eps_f, log2_s_f, q, ell, ToMethod(method));
    *out = auxsim_cipher_params{p.eps_prime_log2, p.s_prime_log2};
  });
}

auxsim_status auxsim_security_report(auxsim_method method,
                                     const auxsim_cipher_spec* spec,
                                     const char* format, char** out) {
  return Guard([&] {
    Require(format, "format");
    Require(out, "out");
    const auto report = sec::MakeSecurityReport(ToMethod(method), ToSpec(spec));
    const std::string f = format;
    if (f == "json") {
      *out = CopyString(auxsim::io::SecurityReportToJson(report));
    } else if (f == "md") {
      *out = CopyString(auxsim::io::SecurityReportToMarkdown(report));
    } else {
      auxsim::Fail(ErrorCode::kInvalidArgument,
                   "security report format must be json or md");
    }
  });
}

auxsim_status auxsim_leakage_report(auxsim_method method,
                                    const auxsim_cipher_spec* spec,
                                    double lambda_target, const char* format,
                                    char** out) {
  return Guard([&] {
    Require(format, "format");
    Require(out, "out");
    const sec::Method m = ToMethod(method);
    const auto beta = sec::MethodBeta(m);
    if (!beta) {
      auxsim::Fail(ErrorCode::kUnsupportedMethod,
                   "leakage search needs a method with a 2^(beta l) loss");
    }
    sec::CipherSecuritySpec s = ToSpec(spec);
    s.beta = *beta;
    const int ell =
        sec::MaxLeakage(s.k, s.q, lambda_target, s.beta, s.theta, s.c1, s.c2);
    s.ell = ell;
    const double bits = sec::SecurityBits(s);
    const std::string f = format;
    if (f == "json") {
      nlohmann::ordered_json j = {{"method", sec::MethodName(m)},
                                  {"k", s.k},
                                  {"q", s.q},
                                  {"beta", s.beta},
                                  {"lambda_target", lambda_target},
                                  {"max_leakage", ell},
                                  {"lambda_bits", bits}};
      if (m == sec::Method::kDream) {
        j["notes"] = {"unproven: dream simulator bound is conjectural"};
      }
      *out = CopyString(j.dump(2) + "\n");
    } else if (f == "md") {
      std::ostringstream md;
      md.precision(10);
      md << "| method | k | q | lambda_target | max_leakage | lambda_bits |\n"
         << "|---|---|---|---|---|---|\n"
         << "| " << sec::MethodName(m) << " | " << s.k << " | " << s.q << " | "
         << lambda_target << " | " << ell << " | " << bits << " |\n";
      *out = CopyString(md.str());
    } else {
      auxsim::Fail(ErrorCode::kInvalidArgument,
                   "leakage report format must be json or md");
    }
  });
}

auxsim_status auxsim_tables_render(const char* format, char** out) {
  return Guard([&] {
    Require(format, "format");
    Require(out, "out");
    const auto tables = sec::MakeTables();
    const std::string f = format;
    if (f == "md") {
      *out = CopyString(sec::RenderTablesMarkdown(tables));
    } else if (f == "csv") {
      *out = CopyString(sec::RenderTablesCsv(tables));
    } else if (f == "json") {
      *out = CopyString(sec::RenderTablesJson(tables));
    } else {
      auxsim::Fail(ErrorCode::kInvalidArgument,
                   "tables format must be md, csv or json");
    }
  });
}

}  // extern "C"
