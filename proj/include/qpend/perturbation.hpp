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

#ifndef QPEND_PERTURBATION_HPP
#define QPEND_PERTURBATION_HPP

#include <vector>

#include "qpend/real.hpp"
#include "qpend/spectrum.hpp"

namespace qpend {

/// An exact scalar of the form coeff * pi^pi_power.
struct PiRational {
    Rational coeff;
    unsigned pi_power = 0;

    Real value() const;
};

/// Taylor data of the rescaled well g^{-1} V(g^{1/2} x) = x^2/2 +
/// sum_{p>=2} v_p g^{p-1} x^{2p}, with v_p = (-1)^{p+1} (2 pi)^{2p-2} / (2p)!.
/// Exact rationals times powers of pi^2; v_2 = -pi^2/6.
struct WellExpansion {
    int order;
    /// couplings[p-1] = v_p for p = 1..order (couplings[0] is the harmonic 1/2).
    std::vector<PiRational> couplings;
};

WellExpansion well_expansion(int order);

/// Ground-energy series E = sum a_k g^k of the single well. Every a_k is an
/// exact rational multiple of pi^{2k}, identical at any precision; a_0 = 1/2,
/// a_1 = -pi^2/8.
struct PerturbationSeries {
    std::vector<PiRational> a;

    int order() const { return static_cast<int>(a.size()) - 1; }
    /// Partial sum through g^m (all terms when m < 0).
    Real eval(const Real& g, int m = -1) const;
};

/// Rayleigh-Schrodinger recursion in the oscillator basis, carried out in
/// exact rational arithmetic; each x^{2p} couples finitely many levels, so no
/// basis truncation error enters. The result is independent of K by
/// construction — a single-well expansion cannot see the band.
PerturbationSeries rs_ground_energy(int order);

/// Fits |Ebar - sum_{k<=m} a_k g^k| = C g^p across the two band means and
/// returns the exponent p; a series correct through order m makes p ~ m+1.
Real band_mean_check(const BandSpectrum& coarse, const BandSpectrum& fine,
                     const PerturbationSeries& series, int m);

}  // namespace qpend

#endif
