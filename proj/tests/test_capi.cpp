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

#include <cmath>
#include <cstring>
#include <string>

#include "auxsim/auxsim.h"
#include "doctest.h"

namespace {

const char* kCopyInstance =
    R"({"domain_size": 2, "aux_bits": 1, "prob": [[0.5, 0.0], [0.0, 0.5]]})";
const char* kEqualityClass = R"({"members": [
    {"kind": "boolean_table", "table": [[1, 0], [0, 1]]},
    {"kind": "boolean_table", "table": [[1, 1], [0, 0]]}],
    "close_under_complement": true})";
const char* kUniformSimulator =
    R"({"kind": "true_channel", "channel": [[0.5, 0.5], [0.5, 0.5]]})";

std::string Take(char* s) {
  std::string out = s == nullptr ? "" : s;
  auxsim_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("handles and verification") {
  CHECK(std::string(auxsim_version()) == "0.1.0");
  CHECK(std::string(auxsim_status_name(AUXSIM_ERR_PARSE)) != "");

  auxsim_instance* inst = nullptr;
  REQUIRE(auxsim_instance_parse(kCopyInstance, &inst) == AUXSIM_OK);
  CHECK(auxsim_instance_domain_size(inst) == 2);
  CHECK(auxsim_instance_aux_bits(inst) == 1);

  auxsim_class* cls = nullptr;
  REQUIRE(auxsim_class_parse(kEqualityClass, &cls) == AUXSIM_OK);
  CHECK(auxsim_class_size(cls) == 4);

  auxsim_simulator* uniform = nullptr;
  REQUIRE(auxsim_simulator_parse(kUniformSimulator, &uniform) == AUXSIM_OK);
  double adv = -1;
  size_t witness = 99;
  REQUIRE(auxsim_verify(inst, cls, uniform, &adv, &witness) == AUXSIM_OK);
  CHECK(adv == 0.5);
  CHECK(witness == 0);

  auxsim_simulator* truth = nullptr;
  REQUIRE(auxsim_simulator_true_channel(inst, &truth) == AUXSIM_OK);
  REQUIRE(auxsim_verify(inst, cls, truth, &adv, &witness) == AUXSIM_OK);
  CHECK(adv == 0.0);

  char* text = nullptr;
  REQUIRE(auxsim_simulator_to_json(truth, &text) == AUXSIM_OK);
  const std::string doc = Take(text);
  auxsim_simulator* again = nullptr;
  REQUIRE(auxsim_simulator_parse(doc.c_str(), &again) == AUXSIM_OK);
  auxsim_simulator_free(again);

  auxsim_simulator_free(truth);
  auxsim_simulator_free(uniform);
  auxsim_class_free(cls);
  auxsim_instance_free(inst);
  auxsim_instance_free(nullptr);
}

TEST_CASE("simulate") {
  auxsim_instance* inst = nullptr;
  auxsim_class* cls = nullptr;
  REQUIRE(auxsim_instance_parse(kCopyInstance, &inst) == AUXSIM_OK);
  REQUIRE(auxsim_class_parse(kEqualityClass, &cls) == AUXSIM_OK);

  auxsim_simulate_options opts;
  auxsim_simulate_options_init(&opts);
  CHECK(opts.max_retries == 32);
  opts.eps = 0.1;
  opts.seed = 7;
  auxsim_simulation* run = nullptr;
  REQUIRE(auxsim_simulate(inst, cls, &opts, &run) == AUXSIM_OK);

  auxsim_complexity_report report;
  auxsim_game_summary game;
  REQUIRE(auxsim_simulation_summary(run, &report, &game) == AUXSIM_OK);
  CHECK(game.eps_achieved <= 0.05);
  CHECK(game.max_advantage <= 0.1);
  CHECK(report.t_used == 800);
  CHECK(report.idealized_calls == 800 * 4);
  CHECK(report.within_budget == 1);

  auxsim_simulator* sim = nullptr;
  REQUIRE(auxsim_simulation_simulator(run, &sim) == AUXSIM_OK);
  double adv = 1;
  size_t witness = 0;
  REQUIRE(auxsim_verify(inst, cls, sim, &adv, &witness) == AUXSIM_OK);
  CHECK(adv == game.max_advantage);

  char* text = nullptr;
  REQUIRE(auxsim_simulation_to_json(run, &text) == AUXSIM_OK);
  CHECK(Take(text).find("\"complexity\"") != std::string::npos);

  opts.eps = 0.0;
  auxsim_simulation* bad = nullptr;
  CHECK(auxsim_simulate(inst, cls, &opts, &bad) == AUXSIM_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::strlen(auxsim_last_error()) > 0);

  auxsim_simulator_free(sim);
  auxsim_simulation_free(run);
  auxsim_class_free(cls);
  auxsim_instance_free(inst);
}

TEST_CASE("error reporting") {
  auxsim_instance* inst = nullptr;
  CHECK(auxsim_instance_parse("{", &inst) == AUXSIM_ERR_PARSE);
  CHECK(inst == nullptr);
  CHECK(std::string(auxsim_last_error()).find("instance") != std::string::npos);
  CHECK(auxsim_instance_parse(nullptr, &inst) == AUXSIM_ERR_INVALID_ARGUMENT);
  CHECK(auxsim_instance_parse(kCopyInstance, nullptr) == AUXSIM_ERR_INVALID_ARGUMENT);
  CHECK(auxsim_instance_load("/nonexistent/instance.json", &inst) == AUXSIM_ERR_IO);

  auxsim_instance* three = nullptr;
  auxsim_class* cls = nullptr;
  auxsim_simulator* sim = nullptr;
  REQUIRE(auxsim_instance_parse(
              R"({"domain_size": 3, "aux_bits": 1, "prob": [[0.2, 0.1], [0.3, 0.1], [0.2, 0.1]]})",
              &three) == AUXSIM_OK);
  REQUIRE(auxsim_class_parse(kEqualityClass, &cls) == AUXSIM_OK);
  REQUIRE(auxsim_simulator_parse(kUniformSimulator, &sim) == AUXSIM_OK);
  double adv = 0;
  size_t witness = 0;
  CHECK(auxsim_verify(three, cls, sim, &adv, &witness) == AUXSIM_ERR_DIMENSION_MISMATCH);
  CHECK(auxsim_verify(three, cls, sim, nullptr, &witness) == AUXSIM_ERR_INVALID_ARGUMENT);
  auxsim_simulator_free(sim);
  auxsim_class_free(cls);
  auxsim_instance_free(three);
}

TEST_CASE("security calculator") {
  auxsim_cipher_spec spec;
  auxsim_cipher_spec_init(&spec);
  CHECK(spec.k == 512);
  CHECK(spec.q == 16);
  CHECK(spec.c1 == 4);

  double w = 0;
  REQUIRE(auxsim_lambert_w2(8.0, &w) == AUXSIM_OK);
  CHECK(w == doctest::Approx(2.0));
  CHECK(auxsim_lambert_w2(0.0, &w) == AUXSIM_ERR_DOMAIN);

  spec.ell = 60;
  spec.beta = 2;
  double lambda = 0;
  REQUIRE(auxsim_security_bits(&spec, &lambda) == AUXSIM_OK);
  CHECK(lambda == 80.0);
  REQUIRE(auxsim_security_bits_exact(&spec, &lambda) == AUXSIM_OK);
  CHECK(lambda == 80.0);

  double floor = 0;
  REQUIRE(auxsim_eps_prime_floor_log2(512, 45, 16, AUXSIM_METHOD_PJ14, &floor) == AUXSIM_OK);
  CHECK(floor == -79.0);
  CHECK(auxsim_eps_prime_floor_log2(512, 45, 16, AUXSIM_METHOD_DREAM, &floor) ==
        AUXSIM_ERR_UNSUPPORTED_METHOD);
  double cap = 0;
  REQUIRE(auxsim_vz_security_cap(480, 0, &cap) == AUXSIM_OK);
  CHECK(cap == 80.0);

  int ell = 0;
  REQUIRE(auxsim_max_leakage(512, 16, 80, 1, 0, 4, 1, &ell) == AUXSIM_OK);
  CHECK(ell == 90);

  double cost = 0;
  REQUIRE(auxsim_simulator_cost_log2(AUXSIM_METHOD_OURS, 0, 1, -1, &cost) == AUXSIM_OK);
  CHECK(cost == 4.0);

  auxsim_cipher_params params;
  REQUIRE(auxsim_stream_cipher_params(-200, 312, 16, 60, AUXSIM_METHOD_OURS, &params) ==
          AUXSIM_OK);
  CHECK(params.eps_prime_log2 == -64.0);
  CHECK(params.s_prime_log2 == 64.0);

  auxsim_method method;
  REQUIRE(auxsim_method_parse("dream", &method) == AUXSIM_OK);
  CHECK(method == AUXSIM_METHOD_DREAM);
  CHECK(auxsim_method_parse("nope", &method) != AUXSIM_OK);

  char* text = nullptr;
  REQUIRE(auxsim_security_report(AUXSIM_METHOD_OURS, &spec, "json", &text) == AUXSIM_OK);
  CHECK(Take(text).find("\"lambda_bits\": 80.0") != std::string::npos);
  REQUIRE(auxsim_leakage_report(AUXSIM_METHOD_PJ14, &spec, 80, "json", &text) == AUXSIM_OK);
  CHECK(Take(text).find("\"max_leakage\": 45") != std::string::npos);
  CHECK(auxsim_security_report(AUXSIM_METHOD_OURS, &spec, "xml", &text) != AUXSIM_OK);
  for (const char* fmt : {"md", "csv", "json"}) {
    REQUIRE(auxsim_tables_render(fmt, &text) == AUXSIM_OK);
    CHECK(Take(text).find("90") != std::string::npos);
  }

  spec.k = 64;
  spec.beta = 3;
  CHECK(auxsim_security_bits(&spec, &lambda) == AUXSIM_ERR_INFEASIBLE_PARAMETERS);
}

}  // TEST_SUITE
