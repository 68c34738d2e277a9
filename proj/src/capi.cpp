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

#include "qpend.h"

#include <cstring>
#include <string>

#include "qpend/gelfand_yaglom.hpp"
#include "qpend/runner.hpp"
#include "qpend/version.hpp"
#include "qpend/wkb.hpp"

namespace {

thread_local std::string g_last_error;

qpend_status status_of(const qpend::Error& e) {
    g_last_error = e.what();
    return static_cast<qpend_status>(e.code());
}

qpend_status fill(const std::string& value, char* buf, size_t len, size_t* needed) {
    if (needed)
        *needed = value.size() + 1;
    if (!buf || len < value.size() + 1) {
        g_last_error = "output buffer too small";
        return QPEND_ERR_BUFFER;
    }
    std::memcpy(buf, value.c_str(), value.size() + 1);
    return QPEND_OK;
}

template <typename Fn>
qpend_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const qpend::Error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QPEND_ERR_INTERNAL;
    }
}

}  // namespace

struct qpend_model {
    qpend::ModelSpec spec;
    qpend::PrecisionPolicy precision;
};

struct qpend_band {
    qpend::BandSpectrum spectrum;
};

extern "C" {

const char* qpend_version(void) { return qpend::kVersion; }

const char* qpend_last_error(void) { return g_last_error.c_str(); }

qpend_status qpend_model_create(const char* g, int K, int target_digits, qpend_model_t** out) {
    return guarded([&]() -> qpend_status {
        if (!g || !out) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        if (target_digits < 1) {
            g_last_error = "target_digits must be >= 1";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope seed(40);
        qpend::Real g0 = qpend::parse_real(g);
        if (!(g0 > 0)) {
            g_last_error = "g must be positive";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionPolicy precision =
            qpend::band_precision(g0, static_cast<unsigned>(target_digits));
        qpend::PrecisionScope scope(precision);
        *out = new qpend_model{qpend::ModelSpec(qpend::parse_real(g), K), precision};
        return QPEND_OK;
    });
}

void qpend_model_destroy(qpend_model_t* model) { delete model; }

int qpend_model_working_digits(const qpend_model_t* model) {
    return model ? static_cast<int>(model->precision.working_digits) : 0;
}

qpend_status qpend_potential(const qpend_model_t* model, const char* x, char* buf, size_t len,
                             size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!model || !x) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope scope(model->precision);
        return fill(qpend::to_decimal(qpend::potential(qpend::parse_real(x))), buf, len, needed);
    });
}

qpend_status qpend_instanton_action(const qpend_model_t* model, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!model) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope scope(model->precision);
        return fill(qpend::to_decimal(qpend::instanton_action(model->spec.g)), buf, len, needed);
    });
}

qpend_status qpend_delta_wkb(const qpend_model_t* model, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!model) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope scope(model->precision);
        return fill(qpend::to_decimal(qpend::delta_wkb(model->spec.g)), buf, len, needed);
    });
}

qpend_status qpend_wkb_energy(const qpend_model_t* model, const char* theta, char* buf, size_t len,
                              size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!model || !theta) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope scope(model->precision);
        return fill(qpend::to_decimal(qpend::wkb_energy(model->spec.g, qpend::parse_real(theta))),
                    buf, len, needed);
    });
}

qpend_status qpend_instanton_count(int n, int k, int K, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        return fill(qpend::instanton_count(n, k, K).str(), buf, len, needed);
    });
}

qpend_status qpend_band_compute(const qpend_model_t* model, const char* eps, const char* cache_dir,
                                int workers, qpend_band_t** out) {
    return guarded([&]() -> qpend_status {
        if (!model || !out) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope scope(model->precision);
        qpend::Real eps_value =
            eps ? qpend::parse_real(eps)
                : qpend::delta_wkb(model->spec.g) *
                      qpend::pow10(-static_cast<long>(model->precision.target_digits));
        std::unique_ptr<qpend::ResultCache> cache;
        if (cache_dir && *cache_dir)
            cache = std::make_unique<qpend::ResultCache>(cache_dir);
        *out = new qpend_band{qpend::band_cached(model->spec, eps_value, model->precision,
                                                 workers < 1 ? 1 : workers, {}, cache.get())};
        return QPEND_OK;
    });
}

void qpend_band_destroy(qpend_band_t* band) { delete band; }

int qpend_band_sectors(const qpend_band_t* band) {
    return band ? static_cast<int>(band->spectrum.entries.size()) : 0;
}

long qpend_band_cutoff(const qpend_band_t* band, int j) {
    if (!band || j < 0 || j >= static_cast<int>(band->spectrum.entries.size()))
        return -1;
    return band->spectrum.entries[static_cast<size_t>(j)].N_used;
}

qpend_status qpend_band_energy(const qpend_band_t* band, int j, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!band || j < 0 || j >= static_cast<int>(band->spectrum.entries.size())) {
            g_last_error = "bad band handle or sector index";
            return QPEND_ERR_INVALID;
        }
        return fill(qpend::to_decimal(band->spectrum.entries[static_cast<size_t>(j)].energy), buf,
                    len, needed);
    });
}

qpend_status qpend_band_delta(const qpend_band_t* band, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!band) {
            g_last_error = "null band handle";
            return QPEND_ERR_INVALID;
        }
        return fill(qpend::to_decimal(band->spectrum.delta), buf, len, needed);
    });
}

qpend_status qpend_band_ebar(const qpend_band_t* band, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!band) {
            g_last_error = "null band handle";
            return QPEND_ERR_INVALID;
        }
        return fill(qpend::to_decimal(band->spectrum.ebar), buf, len, needed);
    });
}

qpend_status qpend_kappa(const char* T, long steps, int digits, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!T) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope scope(static_cast<unsigned>(digits < 30 ? 30 : digits));
        return fill(qpend::to_decimal(qpend::kappa(qpend::parse_real(T), steps)), buf, len, needed);
    });
}

qpend_status qpend_lambda0(const char* T, long steps, int digits, char* buf, size_t len, size_t* needed) {
    return guarded([&]() -> qpend_status {
        if (!T) {
            g_last_error = "null argument";
            return QPEND_ERR_INVALID;
        }
        qpend::PrecisionScope scope(static_cast<unsigned>(digits < 30 ? 30 : digits));
        return fill(qpend::to_decimal(qpend::lambda0_shooting(qpend::parse_real(T), steps)), buf, len,
                    needed);
    });
}

int qpend_main(int argc, const char* const* argv) { return qpend::run_cli(argc, argv); }

}  // extern "C"
