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

#ifndef QPEND_WKB_HPP
#define QPEND_WKB_HPP

#include <vector>

#include "qpend/model.hpp"
#include "qpend/real.hpp"

namespace qpend {

/// Fluctuation-determinant constant of the one-instanton measure. Its
/// numerical derivation lives in the gelfand_yaglom module; everything here
/// uses the validated closed-form value.
inline constexpr int kKappa = 2;

/// The semiclassical side of every comparison: S0, kappa, the band width
/// Delta_WKB = 8 (pi^3 g)^{-1/2} e^{-S0}, and per-sector energies
/// E_theta = 1/2 - (Delta_WKB/2) cos(theta).
struct WkbPrediction {
    Real g;
    int K;
    Real S0;
    Real kappa;
    Real delta_wkb;
    /// (theta_j, E_j) for j = 0..K-1.
    std::vector<std::pair<Real, Real>> energies;
};

Real delta_wkb(const Real& g);
Real wkb_energy(const Real& g, const Real& theta);
WkbPrediction wkb_predict(const ModelSpec& model);

/// Rough decimal exponent of delta_wkb, for precision budgeting. Safe for any
/// positive g, including values whose band width underflows double.
long delta_wkb_exponent(const Real& g);

/// c_{n,k}: the number of n-instanton paths from minimum 0 to minimum k on the
/// K-cycle, by the exact recursion c_{n,k} = c_{n-1,k-1} + c_{n-1,k+1} with
/// periodic k. Exact integers; c grows like 2^n.
BigInt instanton_count(int n, int k, int K);

struct InstantonCountTable {
    int K;
    int n_max;
    /// rows[n][k], n = 0..n_max, k = 0..K-1.
    std::vector<std::vector<BigInt>> rows;
};

InstantonCountTable instanton_count_table(int n_max, int K);

/// Same count through the transfer-matrix eigendecomposition,
/// (1/K) sum_j e^{2 pi i j k / K} (2 cos(2 pi j / K))^n, rounded to the nearest
/// integer. Throws InternalError if the value strays more than 1e-10 from an
/// integer — the two routes must agree exactly.
BigInt instanton_count_closed(int n, int k, int K);

/// |<g^{-1/2} k | E_j>| = (K sqrt(pi))^{-1/2}; K = 1 gives the infinite-volume
/// normalization pi^{-1/4} of a single Bloch state.
Real minima_amplitude(int K);

/// <g^{-1/2} k | e^{-T H} | 0> from the dilute-gas closed form,
/// (1/(K sqrt(pi))) e^{-T/2} sum_j e^{2 pi i j k/K} exp(4 cos(2 pi j/K)
/// (pi^3 g)^{-1/2} e^{-S0} T). Real by the j <-> K-j symmetry; the imaginary
/// part is checked to cancel at working precision.
Real transition_amplitude(int k, int K, const Real& g, const Real& T_horizon);

}  // namespace qpend

#endif
