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

#include "qpend/spectrum.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace qpend {

BandSpectrum band(const ModelSpec& model, const Real& eps, const PrecisionPolicy& precision,
                  const BandOptions& options) {
    if (!(eps > 0))
        throw InvalidArgument("band: eps must be positive");
    precision.validate();
    PrecisionScope scope(precision);

    const int K = model.K;
    std::vector<EigenResult> results(static_cast<size_t>(K));
    std::vector<std::exception_ptr> failures(static_cast<size_t>(K));

    auto solve_sector = [&](int j) {
        try {
            EigenResult r;
            if (options.lookup && options.lookup(j, r)) {
                results[static_cast<size_t>(j)] = std::move(r);
                return;
            }
            r = converge_cutoff(SectorSpec(model, j), 1, eps, precision, nullptr, options.converge);
            if (options.store)
                options.store(j, r);
            results[static_cast<size_t>(j)] = std::move(r);
        } catch (...) {
            failures[static_cast<size_t>(j)] = std::current_exception();
        }
    };

    int workers = std::max(1, options.workers);
    if (workers == 1) {
        for (int j = 0; j < K; ++j)
            solve_sector(j);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(std::min(workers, K)));
        for (int w = 0; w < std::min(workers, K); ++w)
            pool.emplace_back([&] {
                for (int j = next.fetch_add(1); j < K; j = next.fetch_add(1))
                    solve_sector(j);
            });
        for (auto& t : pool)
            t.join();
    }

    for (int j = 0; j < K; ++j)
        if (failures[static_cast<size_t>(j)])
            std::rethrow_exception(failures[static_cast<size_t>(j)]);

    BandSpectrum out{model, precision, {}, Real(0), false, Real(0), std::nullopt, eps};
    out.entries.reserve(static_cast<size_t>(K));
    for (int j = 0; j < K; ++j) {
        const EigenResult& r = results[static_cast<size_t>(j)];
        BandEntry e;
        e.j = j;
        e.theta = 2 * pi() * j / K;
        e.energy = r.energies.at(0);
        e.N_used = r.N_used;
        e.achieved_tolerance = r.achieved_tolerance;
        out.entries.push_back(std::move(e));
    }

    int top = K / 2;  // floor; the half-open top sector for odd K
    out.half_open_delta = (K % 2 != 0);
    out.delta = out.entries[static_cast<size_t>(top)].energy - out.entries[0].energy;
    out.ebar = (out.entries[0].energy + out.entries[static_cast<size_t>(top)].energy) / 2;
    if (K % 4 == 0)
        out.e_quarter = out.entries[static_cast<size_t>(K / 4)].energy;
    return out;
}

Real cosine_fit_residual(const BandSpectrum& spectrum) {
    if (spectrum.delta == 0)
        throw InvalidArgument("cosine_fit_residual: band width is zero, residual undefined");
    PrecisionScope scope(spectrum.precision);
    Real worst = 0;
    for (const BandEntry& e : spectrum.entries) {
        Real predicted = spectrum.ebar - spectrum.delta / 2 * cos(e.theta);
        Real dev = abs(e.energy - predicted);
        if (dev > worst)
            worst = dev;
    }
    return worst / spectrum.delta;
}

std::vector<ThetaRow> theta_spectrum_table(const BandSpectrum& spectrum) {
    const int K = spectrum.model.K;
    std::vector<ThetaRow> rows;
    rows.reserve(static_cast<size_t>(K / 2) + 1);
    for (int j = 0; j <= K / 2; ++j) {
        const BandEntry& e = spectrum.entries[static_cast<size_t>(j)];
        int degeneracy = (j == 0 || 2 * j == K) ? 1 : 2;
        if (degeneracy == 2) {
            const BandEntry& mirror = spectrum.entries[static_cast<size_t>(K - j)];
            Real allowed = 10 * (e.achieved_tolerance + mirror.achieved_tolerance);
            if (abs(e.energy - mirror.energy) > allowed)
                throw InternalError("theta_spectrum_table: degenerate pair mismatch beyond tolerance");
        }
        rows.push_back(ThetaRow{j, e.theta, e.energy, degeneracy});
    }
    return rows;
}

Complex wavefunction(const ModelSpec& model, int j, const std::vector<Real>& coeffs, const Real& x) {
    if (j < 0 || j >= model.K)
        throw InvalidArgument("wavefunction: need 0 <= j < K");
    if (coeffs.empty() || coeffs.size() % 2 == 0)
        throw InvalidArgument("wavefunction: coefficients must span n = -N..N");
    const long N = (static_cast<long>(coeffs.size()) - 1) / 2;
    const Real sqrt_g = sqrt(model.g);
    const Real base_angle = 2 * pi() * sqrt_g * x / model.K;

    // phase for n = -N, advanced by exp(i * K * base_angle) per coefficient
    Real phi0 = base_angle * (j - N * model.K);
    Real cr = cos(phi0), ci = sin(phi0);
    Real step_r = cos(base_angle * model.K), step_i = sin(base_angle * model.K);

    Real re = 0, im = 0, t;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        re += coeffs[i] * cr;
        im += coeffs[i] * ci;
        t = cr * step_r - ci * step_i;
        ci = cr * step_i + ci * step_r;
        cr = t;
    }
    Real amp = pow(model.g, Real(1) / 4) / sqrt(Real(model.K));
    return Complex{amp * re, amp * im};
}

Real wavefunction_norm(const ModelSpec& model, int j, const std::vector<Real>& coeffs) {
    const long points = 64 * static_cast<long>(coeffs.size());
    const Real L = model.circle_length();
    const Real h = L / points;
    // psi is L-periodic, so equal weights make this the trapezoid rule
    Real acc = 0;
    for (long i = 0; i < points; ++i) {
        Complex v = wavefunction(model, j, coeffs, i * h);
        acc += v.re * v.re + v.im * v.im;
    }
    return acc * h;
}

}  // namespace qpend
