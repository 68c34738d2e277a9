/*
   Copyright 2026 qpend developers

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

/*
 * C interface of the qpend shared library.
 *
 * All numeric inputs and outputs are decimal strings, so values survive the
 * boundary at full precision. Functions that fill a caller buffer truncate
 * nothing: when the buffer is too small they return QPEND_ERR_BUFFER and
 * leave the required size in *needed (when given). Handles are opaque and
 * must be released with the matching _destroy call.
 */

#ifndef QPEND_H
#define QPEND_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qpend_status {
    QPEND_OK = 0,
    QPEND_ERR_INVALID = 1,   /* bad argument or config */
    QPEND_ERR_PRECISION = 2, /* tolerance unreachable at working precision */
    QPEND_ERR_SOLVER = 3,    /* eigensolver / integrator failure */
    QPEND_ERR_CACHE = 4,     /* cache directory or entry failure */
    QPEND_ERR_IO = 5,        /* file I/O failure */
    QPEND_ERR_BUFFER = 6,    /* output buffer too small */
    QPEND_ERR_INTERNAL = 7
} qpend_status;

typedef struct qpend_model qpend_model_t;
typedef struct qpend_band qpend_band_t;

const char* qpend_version(void);

/* Message of the most recent failure on this thread. */
const char* qpend_last_error(void);

/* --- model ------------------------------------------------------------- */

/* Creates a model with coupling g (decimal string) and K minima; the working
 * precision is derived from target_digits plus the band-width scale of g. */
qpend_status qpend_model_create(const char* g, int K, int target_digits, qpend_model_t** out);
void qpend_model_destroy(qpend_model_t* model);

int qpend_model_working_digits(const qpend_model_t* model);

qpend_status qpend_potential(const qpend_model_t* model, const char* x, char* buf, size_t len,
                             size_t* needed);
qpend_status qpend_instanton_action(const qpend_model_t* model, char* buf, size_t len, size_t* needed);

/* --- WKB --------------------------------------------------------------- */

qpend_status qpend_delta_wkb(const qpend_model_t* model, char* buf, size_t len, size_t* needed);
qpend_status qpend_wkb_energy(const qpend_model_t* model, const char* theta, char* buf, size_t len,
                              size_t* needed);

/* Exact instanton count c_{n,k} as a decimal integer string. */
qpend_status qpend_instanton_count(int n, int k, int K, char* buf, size_t len, size_t* needed);

/* --- band -------------------------------------------------------------- */

/* Computes every sector to cutoff convergence. eps may be NULL for the
 * default delta_wkb(g) * 10^{-target_digits}; cache_dir may be NULL. */
qpend_status qpend_band_compute(const qpend_model_t* model, const char* eps, const char* cache_dir,
                                int workers, qpend_band_t** out);
void qpend_band_destroy(qpend_band_t* band);

int qpend_band_sectors(const qpend_band_t* band);
long qpend_band_cutoff(const qpend_band_t* band, int j);
qpend_status qpend_band_energy(const qpend_band_t* band, int j, char* buf, size_t len, size_t* needed);
qpend_status qpend_band_delta(const qpend_band_t* band, char* buf, size_t len, size_t* needed);
qpend_status qpend_band_ebar(const qpend_band_t* band, char* buf, size_t len, size_t* needed);

/* --- Gel'fand-Yaglom ---------------------------------------------------- */

/* kappa and the quasi-zero eigenvalue at horizon T (decimal string), with the
 * given integrator step count and working digits. */
qpend_status qpend_kappa(const char* T, long steps, int digits, char* buf, size_t len, size_t* needed);
qpend_status qpend_lambda0(const char* T, long steps, int digits, char* buf, size_t len, size_t* needed);

/* --- command line ------------------------------------------------------- */

/* Full CLI (band / wkb / counts / detratio / fitseries / perturb / fig1-3);
 * returns the process exit code. */
int qpend_main(int argc, const char* const* argv);

#ifdef __cplusplus
}
#endif

#endif /* QPEND_H */
