/*
   Copyright 2026 The sigpairs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#ifndef SIGPAIRS_SIGPAIRS_H
#define SIGPAIRS_SIGPAIRS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define SIG_API __attribute__((visibility("default")))
#else
#define SIG_API
#endif

typedef struct sig_group sig_group;

typedef enum sig_status {
    SIG_OK = 0,
    SIG_ERR_DIVISION_BY_ZERO,
    SIG_ERR_NOT_REAL,
    SIG_ERR_PRECISION_EXCEEDED,
    SIG_ERR_INCOMPATIBLE_ORDER,
    SIG_ERR_NOT_UNITARY,
    SIG_ERR_CAP_EXCEEDED,
    SIG_ERR_NOT_HERMITIAN,
    SIG_ERR_EMPTY_SPECTRUM,
    SIG_ERR_NON_INTEGER_COEFFICIENT,
    SIG_ERR_INDEX_OUT_OF_RANGE,
    SIG_ERR_PARSE,
    SIG_ERR_IO,
    SIG_ERR_INVALID_ARGUMENT,
    SIG_ERR_INTERNAL
} sig_status;

typedef enum sig_method { SIG_METHOD_EXACT = 0, SIG_METHOD_NUMERIC = 1 } sig_method;

typedef struct sig_inertia {
    size_t n_plus;
    size_t n_minus;
    size_t n_zero;
} sig_inertia;

typedef struct sig_verify_options {
    long p_max; /* 0 selects the default range */
    long q_max;
    int include_slow;
    unsigned precision_bits;
} sig_verify_options;

SIG_API const char* sig_version(void);
SIG_API const char* sig_status_string(sig_status status);
/* Message of the last failed call on this thread; empty after success. */
SIG_API const char* sig_last_error(void);
/* Releases strings returned through char** out-parameters. */
SIG_API void sig_string_free(char* s);

SIG_API unsigned sig_max_precision_bits(void);
SIG_API void sig_set_max_precision_bits(unsigned bits);

/* spec: cyclic:p,q | dihedral:p | binary-dihedral:p | T | O | I | file:<path> */
SIG_API sig_status sig_group_from_spec(const char* spec, sig_group** out);
/* {"generators": [...], "cap": n} */
SIG_API sig_status sig_group_from_json(const char* json, const char* label, sig_group** out);
SIG_API void sig_group_destroy(sig_group* group);
SIG_API sig_status sig_group_order(const sig_group* group, size_t* out);
SIG_API sig_status sig_group_label(const sig_group* group, char** out);

SIG_API sig_status sig_signature(const sig_group* group, sig_method method, unsigned precision_bits,
                                 sig_inertia* out);
SIG_API sig_status sig_signature_json(const sig_group* group, sig_method method, unsigned precision_bits,
                                      int stable, char** out);
/* Rows "a1,a2,b1,b2,<coefficient json>" of the invariant polynomial. */
SIG_API sig_status sig_phi_csv(const sig_group* group, char** out);

SIG_API sig_status sig_fpq_text(long p, long q, char** out);
SIG_API sig_status sig_fpq_table(long q, long p_max, int latex, char** out);
SIG_API sig_status sig_even_odd_table(long q_max, char** out);

/* family: cyclic-T | dihedral | binary-dihedral */
SIG_API sig_status sig_ratio_table(const char* family, long lo, long hi, int with_engine, char** out);
/* family: dihedral | binary-dihedral */
SIG_API sig_status sig_family_csv(const char* family, long lo, long hi, int with_engine, char** out);

/* Writes the report JSON; *passed is 1 when every case passed. A failing
   sweep is not an error status. options may be NULL. */
SIG_API sig_status sig_verify(const char* theorem, const sig_verify_options* options, int stable, char** json_out,
                              int* passed);

#ifdef __cplusplus
}
#endif

#endif
