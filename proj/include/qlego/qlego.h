// Copyright 2026 The qlego Authors
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

#ifndef QLEGO_QLEGO_H
#define QLEGO_QLEGO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QLEGO_API __declspec(dllexport)
#else
#define QLEGO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    QLEGO_OK = 0,
    QLEGO_ERR_USAGE = 1,
    QLEGO_ERR_TRACE_RANK = 2,
    QLEGO_ERR_BUDGET = 3,
    QLEGO_ERR_INTERNAL = 4
} qlego_status;

typedef struct qlego_network qlego_network;
typedef struct qlego_code qlego_code;

typedef struct {
    /* Nonzero to compute the distance. */
    int distance;
    /* Positive for a weight-capped search; zero tries exhaustive enumeration first. */
    int max_weight;
    /* Nonzero for bare distance of subsystem codes. */
    int bare;
    /* Enumeration budget; zero selects the default of 2^24. */
    uint64_t budget;
    /* Nonzero for the structured (JSON) report instead of text. */
    int json;
} qlego_report_options;

/* Message of the last failing call on this thread. */
QLEGO_API const char *qlego_last_error(void);
/* Frees strings returned through char** out-parameters. */
QLEGO_API void qlego_string_free(char *s);

QLEGO_API qlego_status qlego_network_parse(const char *text, qlego_network **out);
QLEGO_API qlego_status qlego_network_load(const char *path, qlego_network **out);
/* Builds a named example; `params` is a JSON object such as {"L": 3} and may be NULL. */
QLEGO_API qlego_status qlego_network_demo(const char *name, const char *params, qlego_network **out);
QLEGO_API qlego_status qlego_network_write(const qlego_network *net, char **out);
QLEGO_API qlego_status qlego_network_plan(const qlego_network *net, char **out);
/* Assignment is a JSON object mapping instance ids to operator entries. */
QLEGO_API qlego_status qlego_network_push(const qlego_network *net, const char *assignment, int *ok, char **text,
                                          char **dot);
/* Prescription is a JSON object mapping "id.leg" to single-leg operator labels. */
QLEGO_API qlego_status qlego_network_represent(const qlego_network *net, const char *prescription, int *found,
                                               char **text, char **dot);
QLEGO_API void qlego_network_free(qlego_network *net);

QLEGO_API qlego_status qlego_code_build(const qlego_network *net, qlego_code **out);
QLEGO_API qlego_status qlego_code_params(const qlego_code *code, size_t *n, size_t *apparent_k, size_t *true_k);
QLEGO_API qlego_status qlego_code_flags(const qlego_code *code, int *css, int *self_dual);
QLEGO_API qlego_status qlego_code_report(const qlego_code *code, const qlego_report_options *options, char **out);
/* `legs` is a comma-separated list of physical legs written id.leg; empty means no legs. */
QLEGO_API qlego_status qlego_code_erasure(const qlego_code *code, const char *legs, int *correctable);
/* Re-derives logical pairs of weight at most `pair_weight`, then keeps the listed pair indices. */
QLEGO_API qlego_status qlego_code_gauge_fix(qlego_code *code, size_t pair_weight, const size_t *keep, size_t keep_count);
/* Depolarizing Monte Carlo; nonzero `log_domain` accumulates class probabilities as logs. */
QLEGO_API qlego_status qlego_code_decode(const qlego_code *code, double p, uint64_t trials, uint64_t seed,
                                         int log_domain, char **csv);
QLEGO_API qlego_status qlego_code_export_tl(const qlego_code *code, const char *logical, char **out);
QLEGO_API void qlego_code_free(qlego_code *code);

QLEGO_API qlego_status qlego_verify_cz(int d, int *pass);

#ifdef __cplusplus
}
#endif

#endif
