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

#include "qpend/perturbation.hpp"

#include <map>

namespace qpend {

namespace {

// States live in the unnormalized ladder basis phi_n = (adag)^n |0>, where
// a phi_n = n phi_{n-1} and adag phi_n = phi_{n+1}; every matrix element of
// x^{2p} = ((a + adag)/sqrt 2)^{2p} is then rational. <0|phi_n> = delta_{n,0}.
using State = std::map<int, Rational>;

State apply_x_power(const State& state, int power) {
    State cur = state;
    for (int step = 0; step < power; ++step) {
        State next;
        for (const auto& [n, c] : cur) {
            if (n >= 1)
                next[n - 1] += c * n;
            next[n + 1] += c;
        }
        cur = std::move(next);
    }
    Rational half_pow(1, BigInt(1) << (power / 2));
    for (auto& [n, c] : cur)
        c *= half_pow;
    return cur;
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

}  // namespace

Real PiRational::value() const {
    Real num(numerator(coeff).str());
    Real den(denominator(coeff).str());
    return num / den * pow(pi(), static_cast<int>(pi_power));
}

WellExpansion well_expansion(int order) {
    if (order < 2)
        throw InvalidArgument("well_expansion: order must be >= 2");
    WellExpansion out;
    out.order = order;
    out.couplings.reserve(static_cast<size_t>(order));
    for (int p = 1; p <= order; ++p) {
        // v_p = (-1)^{p+1} (2 pi)^{2p-2} / (2p)!
        Rational c = Rational(BigInt(1) << (2 * p - 2)) / factorial(2 * p);
        if (p % 2 == 0)
            c = -c;
        out.couplings.push_back(PiRational{c, static_cast<unsigned>(2 * p - 2)});
    }
    return out;
}

Real PerturbationSeries::eval(const Real& g, int m) const {
    if (m < 0 || m > order())
        m = order();
    Real sum = 0;
    Real gk = 1;
    for (int k = 0; k <= m; ++k) {
        sum += a[static_cast<size_t>(k)].value() * gk;
        gk *= g;
    }
    return sum;
}

PerturbationSeries rs_ground_energy(int order) {
    if (order < 1)
        throw InvalidArgument("rs_ground_energy: order must be >= 1");

    // The g^s term of the well is u_s x^{2(s+1)} with pi^{2s} stripped off:
    // u_s = (-1)^s 2^{2s} / (2s+2)!. Stripping makes every intermediate
    // rational; a_k regains the factor pi^{2k} at the end.
    std::vector<Rational> u(static_cast<size_t>(order) + 1);
    for (int s = 1; s <= order; ++s) {
        u[static_cast<size_t>(s)] = Rational(BigInt(1) << (2 * s)) / factorial(2 * s + 2);
        if (s % 2 != 0)
            u[static_cast<size_t>(s)] = -u[static_cast<size_t>(s)];
    }

    std::vector<State> psi(1, State{{0, Rational(1)}});
    std::vector<Rational> energy(1, Rational(1, 2));

    for (int k = 1; k <= order; ++k) {
        // rhs of (H0 - E0) psi_k = sum_s (E_s - H_s) psi_{k-s}
        State rhs;
        Rational ek = 0;
        for (int s = 1; s <= k; ++s) {
            State hs_psi = apply_x_power(psi[static_cast<size_t>(k - s)], 2 * (s + 1));
            for (const auto& [n, c] : hs_psi)
                rhs[n] -= u[static_cast<size_t>(s)] * c;
            auto it = hs_psi.find(0);
            if (it != hs_psi.end())
                ek += u[static_cast<size_t>(s)] * it->second;
        }
        energy.push_back(ek);
        for (int s = 1; s <= k; ++s)
            for (const auto& [n, c] : psi[static_cast<size_t>(k - s)])
                rhs[n] += energy[static_cast<size_t>(s)] * c;

        if (rhs.count(0) && rhs[0] != 0)
            throw InternalError("rs_ground_energy: secular term did not cancel");
        State psik;
        for (const auto& [n, c] : rhs)
            if (n != 0 && c != 0)
                psik[n] = c / n;  // (H0 - E0) phi_n = n phi_n
        psi.push_back(std::move(psik));
    }

    PerturbationSeries out;
    out.a.reserve(energy.size());
    for (int k = 0; k <= order; ++k)
        out.a.push_back(PiRational{energy[static_cast<size_t>(k)], static_cast<unsigned>(2 * k)});
    return out;
}

Real band_mean_check(const BandSpectrum& coarse, const BandSpectrum& fine,
                     const PerturbationSeries& series, int m) {
    if (!(coarse.model.g > fine.model.g))
        throw InvalidArgument("band_mean_check: spectra must be at distinct g, larger first");
    if (m > series.order())
        throw InvalidArgument("band_mean_check: series order too low for requested m");
    PrecisionScope scope(coarse.precision);
    Real r1 = abs(coarse.ebar - series.eval(coarse.model.g, m));
    Real r2 = abs(fine.ebar - series.eval(fine.model.g, m));
    if (r1 == 0 || r2 == 0)
        throw SolverError("band_mean_check: residual vanished; cannot fit an exponent");
    return log(r1 / r2) / log(coarse.model.g / fine.model.g);
}

}  // namespace qpend
