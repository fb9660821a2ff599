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

/* C interface to the auxsim library.
 *
 * Objects are opaque handles created by *_parse / *_load / constructor
 * functions and released with the matching *_free. Every fallible call
 * returns an auxsim_status; on failure auxsim_last_error() holds a message
 * for the calling thread. Strings returned through char** are owned by the
 * caller and released with auxsim_string_free.
 */

#ifndef AUXSIM_AUXSIM_H_
#define AUXSIM_AUXSIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(AUXSIM_BUILDING_LIBRARY)
#define AUXSIM_API __declspec(dllexport)
#else
#define AUXSIM_API __declspec(dllimport)
#endif
#else
#define AUXSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum auxsim_status {
  AUXSIM_OK = 0,
  AUXSIM_ERR_INVALID_ARGUMENT = 1,
  AUXSIM_ERR_DIMENSION_MISMATCH = 2,
  AUXSIM_ERR_OUT_OF_RANGE = 3,
  AUXSIM_ERR_PARSE = 4,
  AUXSIM_ERR_NON_CONVERGENCE = 5,
  AUXSIM_ERR_SPARSIFY_FAILED = 6,
  AUXSIM_ERR_INFEASIBLE_PARAMETERS = 7,
  AUXSIM_ERR_UNSUPPORTED_METHOD = 8,
  AUXSIM_ERR_DOMAIN = 9,
  AUXSIM_ERR_IO = 10,
  AUXSIM_ERR_INTERNAL = 11
} auxsim_status;

typedef enum auxsim_method {
  AUXSIM_METHOD_PJ14 = 0,
  AUXSIM_METHOD_VZ13 = 1,
  AUXSIM_METHOD_OURS = 2,
  AUXSIM_METHOD_DREAM = 3
} auxsim_method;

typedef struct auxsim_instance auxsim_instance;
typedef struct auxsim_class auxsim_class;
typedef struct auxsim_simulator auxsim_simulator;
typedef struct auxsim_simulation auxsim_simulation;

AUXSIM_API const char* auxsim_version(void);
AUXSIM_API const char* auxsim_last_error(void);
AUXSIM_API const char* auxsim_status_name(auxsim_status status);
AUXSIM_API void auxsim_string_free(char* s);

/* Worker threads for member-parallel advantage evaluation (>= 1). */
AUXSIM_API void auxsim_set_threads(unsigned count);

/* ---- Instances (joint distributions) ---- */

AUXSIM_API auxsim_status auxsim_instance_parse(const char* json,
                                               auxsim_instance** out);
AUXSIM_API auxsim_status auxsim_instance_load(const char* path,
                                              auxsim_instance** out);
AUXSIM_API void auxsim_instance_free(auxsim_instance* instance);
AUXSIM_API size_t auxsim_instance_domain_size(const auxsim_instance* instance);
AUXSIM_API int auxsim_instance_aux_bits(const auxsim_instance* instance);

/* ---- Distinguisher classes ---- */

AUXSIM_API auxsim_status auxsim_class_parse(const char* json,
                                            auxsim_class** out);
AUXSIM_API auxsim_status auxsim_class_load(const char* path,
                                           auxsim_class** out);
AUXSIM_API void auxsim_class_free(auxsim_class* cls);
AUXSIM_API size_t auxsim_class_size(const auxsim_class* cls);

/* ---- Simulators ---- */

AUXSIM_API auxsim_status auxsim_simulator_parse(const char* json,
                                                auxsim_simulator** out);
AUXSIM_API auxsim_status auxsim_simulator_load(const char* path,
                                               auxsim_simulator** out);
/* The exact conditional law of the instance as a simulator. */
AUXSIM_API auxsim_status auxsim_simulator_true_channel(
    const auxsim_instance* instance, auxsim_simulator** out);
AUXSIM_API auxsim_status auxsim_simulator_to_json(const auxsim_simulator* sim,
                                                  char** out);
AUXSIM_API void auxsim_simulator_free(auxsim_simulator* sim);

/* Recomputes the max |advantage| of `sim` over the class. */
AUXSIM_API auxsim_status auxsim_verify(const auxsim_instance* instance,
                                       const auxsim_class* cls,
                                       const auxsim_simulator* sim,
                                       double* max_advantage,
                                       size_t* witness);

/* ---- Simulator construction pipeline ---- */

typedef struct auxsim_simulate_options {
  double eps;
  uint64_t seed;
  uint64_t max_rounds;  /* 0: use the default schedule */
  uint32_t max_retries; /* sparsification redraws */
} auxsim_simulate_options;

typedef struct auxsim_complexity_report {
  uint64_t base_cost_s;
  uint64_t idealized_calls;
  uint64_t actual_calls;
  uint64_t idealized_size;
  uint64_t budget_bound;
  uint64_t t_used;
  int rho_used;
  int within_budget;
} auxsim_complexity_report;

typedef struct auxsim_game_summary {
  uint64_t rounds;
  uint64_t round_budget;
  double eps_achieved;
  double max_advantage; /* of the final sparsified simulator */
  size_t witness;
  uint32_t retries_used;
} auxsim_game_summary;

AUXSIM_API void auxsim_simulate_options_init(auxsim_simulate_options* opts);
AUXSIM_API auxsim_status auxsim_simulate(const auxsim_instance* instance,
                                         const auxsim_class* cls,
                                         const auxsim_simulate_options* opts,
                                         auxsim_simulation** out);
AUXSIM_API auxsim_status auxsim_simulation_summary(
    const auxsim_simulation* sim, auxsim_complexity_report* report,
    auxsim_game_summary* game);
AUXSIM_API auxsim_status auxsim_simulation_simulator(
    const auxsim_simulation* sim, auxsim_simulator** out);
/* Simulator document plus complexity, game and verification blocks. */
AUXSIM_API auxsim_status auxsim_simulation_to_json(
    const auxsim_simulation* sim, char** out);
AUXSIM_API void auxsim_simulation_free(auxsim_simulation* sim);

/* ---- Stream cipher security calculator (all values log2 unless noted) ---- */

typedef struct auxsim_cipher_spec {
  double k;
  double ell;
  double q;
  int beta;
  double theta;
  double c1;
  double c2;
} auxsim_cipher_spec;

typedef struct auxsim_cipher_params {
  double eps_prime_log2;
  double s_prime_log2;
} auxsim_cipher_params;

/* k=512, ell=0, q=16, beta=2, theta=0, c1=4, c2=1. */
AUXSIM_API void auxsim_cipher_spec_init(auxsim_cipher_spec* spec);
AUXSIM_API auxsim_status auxsim_method_parse(const char* name,
                                             auxsim_method* out);
AUXSIM_API auxsim_status auxsim_lambert_w2(double u, double* out);
AUXSIM_API auxsim_status auxsim_security_bits(const auxsim_cipher_spec* spec,
                                              double* out);
AUXSIM_API auxsim_status auxsim_security_bits_exact(
    const auxsim_cipher_spec* spec, double* out);
AUXSIM_API auxsim_status auxsim_eps_prime_floor_log2(double k, double ell,
                                                     double q,
                                                     auxsim_method method,
                                                     double* out);
AUXSIM_API auxsim_status auxsim_vz_security_cap(double k, double ell,
                                                double* out);
AUXSIM_API auxsim_status auxsim_max_leakage(double k, double q,
                                            double lambda_target, int beta,
                                            double theta, double c1,
                                            double c2, int* out);
AUXSIM_API auxsim_status auxsim_simulator_cost_log2(auxsim_method method,
                                                    double log2_s, double ell,
                                                    double log2_eps,
                                                    double* out);
AUXSIM_API auxsim_status auxsim_stream_cipher_params(
    double log2_eps_f, double log2_s_f, double q, double ell,
    auxsim_method method, auxsim_cipher_params* out);

/* format: "json" or "md". beta in spec is overridden by the method. */
AUXSIM_API auxsim_status auxsim_security_report(auxsim_method method,
                                                const auxsim_cipher_spec* spec,
                                                const char* format,
                                                char** out);
/* Largest tolerable leakage for the method; format "json" or "md". */
AUXSIM_API auxsim_status auxsim_leakage_report(auxsim_method method,
                                               const auxsim_cipher_spec* spec,
                                               double lambda_target,
                                               const char* format, char** out);
/* format: "md", "csv" or "json". */
AUXSIM_API auxsim_status auxsim_tables_render(const char* format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* AUXSIM_AUXSIM_H_ */
