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

#ifndef QPEND_SERIES_HPP
#define QPEND_SERIES_HPP

#include <vector>

#include "qpend/real.hpp"

namespace qpend {

/// One measured point of Delta_num / Delta_WKB. achieved_digits is the
/// significant-digit count the eigensolve guaranteed for the ratio; it feeds
/// the propagated part of the coefficient uncertainties.
struct RatioSample {
    Real g;
    Real ratio;
    long achieved_digits = 40;
};

struct CoefficientEstimate {
    Real value;
    /// Difference between consecutive-order fits plus propagated sample error.
    /// Truncation-dominated; no statistical model is claimed.
    Real uncertainty;
    /// False when the uncertainty exceeds |value|; the coefficient is then
    /// reported as undetermined rather than silently dropped.
    bool determined = true;
};

struct SeriesFit {
    int order;
    std::vector<CoefficientEstimate> coefficients;  // b_0 .. b_{order-1}
};

/// Extracts b_0..b_{m-1} of ratio(g) = sum b_k g^k by successive elimination:
/// Richardson extrapolation (Neville at g = 0) gives b_0, the samples are then
/// reduced to (v - b_0)/g and the stage repeats. Needs at least m+2 samples
/// with distinct g. The geometric sample grid of the pipeline is not required;
/// any distinct positive g work.
SeriesFit extract_coefficients(std::vector<RatioSample> samples, int m);

/// Cross-check path: the square Vandermonde solve on the m smallest-g samples.
std::vector<Real> vandermonde_coefficients(std::vector<RatioSample> samples, int m);

struct NormalizedRow {
    int k;
    Real normalized;  // 2^{5k} pi^{-2k} b_k
    BigInt nearest;
    Real residual;
    Real uncertainty;
    bool integer_consistent;
    bool determined;
};

/// The integer-normalized table 2^{5k} pi^{-2k} b_k with nearest integers and
/// residuals; a row is integer-consistent when its residual is inside the
/// fit uncertainty.
std::vector<NormalizedRow> normalize_to_integers(const SeriesFit& fit);

/// Factorial-growth model b_k ~ A B^k k!.
struct GrowthFit {
    Real A;
    Real B;
    int k_min_used;
    int k_max_used;
};

/// Least-squares fit of log|b_k / k!| = log|A| + k log B over the asymptotic
/// tail: the last four coefficients with k >= 3 (small-k transients are never
/// fitted). values[i] is b_{k_first + i}; needs at least four usable
/// coefficients, all of one sign.
GrowthFit growth_fit(const std::vector<Real>& values, int k_first = 0);

}  // namespace qpend

#endif
