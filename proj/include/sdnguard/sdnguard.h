/*
 * Copyright 2026 The sdnguard Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libsdnguard.
 *
 * Every function returns an sg_status. On failure a description of the last
 * error on the calling thread is available from sg_last_error(). Strings
 * returned through char** out-parameters are NUL-terminated UTF-8 JSON owned
 * by the caller and must be released with sg_string_free(). Handles are not
 * thread-safe; use one handle per thread or serialise access.
 */

#ifndef SDNGUARD_H
#define SDNGUARD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SG_BUILDING_LIBRARY)
#    define SG_API __declspec(dllexport)
#  else
#    define SG_API __declspec(dllimport)
#  endif
#else
#  define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
    SG_OK = 0,
    SG_ERR_INVALID_ARGUMENT = 1,
    SG_ERR_IO = 2,
    SG_ERR_PARSE = 3,
    SG_ERR_SCHEMA = 4,
    SG_ERR_INVALID_MODEL = 5,
    SG_ERR_UNKNOWN_VERTEX = 6,
    SG_ERR_UNKNOWN_TERMINAL = 7,
    SG_ERR_UNKNOWN_SWITCH = 8,
    SG_ERR_UNKNOWN_PORT = 9,
    SG_ERR_UNDECLARED_PRINCIPAL = 10,
    SG_ERR_GRANT_TO_MALICIOUS = 11,
    SG_ERR_MAPPING_INCOMPLETE = 12,
    SG_ERR_NO_POLICY = 13,
    SG_ERR_NO_PATH = 14,
    SG_ERR_PRECONDITION = 15,
    SG_ERR_FORWARDING_LOOP = 16,
    SG_ERR_FIXTURE_MISMATCH = 17,
    SG_ERR_GENERATION_FAILURE = 18,
    SG_ERR_INTERNAL = 99
} sg_status;

/* Opaque deployment: topology, principals, policy, network and controller. */
typedef struct sg_system sg_system;

typedef struct sg_bench_params {
    uint32_t switches;
    uint32_t terminals;
    uint32_t pairs;
    uint64_t seed;
    uint32_t repeats;           /* 0 selects the default of 5 */
    uint32_t compliance_sample; /* 0 selects the default of 200 */
} sg_bench_params;

SG_API const char* sg_version(void);
SG_API const char* sg_status_name(sg_status status);
SG_API const char* sg_last_error(void);
SG_API void sg_string_free(char* str);

/* Loading. Only syntax and schema are checked here; model invariants are
 * reported by sg_system_validate and enforced by sg_system_deploy. */
SG_API sg_status sg_system_open_files(const char* topology_path,
                                      const char* services_path,
                                      const char* policy_path,
                                      sg_system** out);
SG_API sg_status sg_system_open_json(const char* topology_json,
                                     const char* services_json,
                                     const char* policy_json,
                                     sg_system** out);
/* "fig2", "fig4" or "spms". */
SG_API sg_status sg_system_open_builtin(const char* name, sg_system** out);
SG_API void sg_system_close(sg_system* system);

/* Writes the number of violations; the report lists each of them. */
SG_API sg_status sg_system_validate(const sg_system* system,
                                    size_t* violations,
                                    char** report_json);

/* Eager rule image of the policy (rules.json document). */
SG_API sg_status sg_system_compile(const sg_system* system, char** rules_json);

/* Compiles and uploads the policy, installing drop rules. */
SG_API sg_status sg_system_deploy(sg_system* system);

/* Injects a packet carrying src -> dst headers at terminal `at`.
 * payload may be NULL. Deploys first if needed. */
SG_API sg_status sg_system_inject(sg_system* system,
                                  const char* at_terminal,
                                  const char* src_terminal,
                                  const char* dst_terminal,
                                  const char* payload,
                                  char** trace_json);

/* Replaces the policy with a policy.json document; writes the rule delta. */
SG_API sg_status sg_system_update_policy(sg_system* system,
                                         const char* policy_json,
                                         char** delta_json);

/* Installs one rule (rules.json entry object) directly into a switch,
 * bypassing the controller. Meant for fault injection. */
SG_API sg_status sg_system_install_rule(sg_system* system,
                                        const char* switch_id,
                                        const char* rule_json);

/* Rules currently held by the switches (rules.json document). */
SG_API sg_status sg_system_installed_rules(const sg_system* system, char** rules_json);

/* Exercises every allowed pair once, then checks reachability against the
 * policy. Deploys first if needed. */
SG_API sg_status sg_system_verify(sg_system* system, int* compliant, char** report_json);

/* Built-in scenario name or path to a scenario file. */
SG_API sg_status sg_run_scenario(const char* name_or_path, int* passed, char** report_json);
/* JSON array of built-in scenario names. */
SG_API sg_status sg_list_scenarios(char** names_json);

SG_API sg_status sg_run_bench(const sg_bench_params* params,
                              int* compliant,
                              char** report_json);

/* Full deterministic suite; timings are returned separately. */
SG_API sg_status sg_run_suite(uint64_t seed,
                              int* passed,
                              char** rules_json,
                              char** report_json,
                              char** timing_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SDNGUARD_H */
