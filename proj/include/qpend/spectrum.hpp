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

#ifndef QPEND_SPECTRUM_HPP
#define QPEND_SPECTRUM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "qpend/eigensolver.hpp"
#include "qpend/model.hpp"
#include "qpend/real.hpp"

namespace qpend {

struct BandEntry {
    int j;
    Real theta;
    Real energy;
    long N_used = 0;
    Real achieved_tolerance;
};

/// The lowest band: per-sector ground energies E_j with theta_j = 2 pi j / K,
/// the width delta = E_{K/2} - E_0 (even K; odd K reports the half-open width
/// E_{(K-1)/2} - E_0 and flags it), and the mean ebar = (E_0 + E_{K/2}) / 2.
/// E_{K/4} is recorded separately when 4 | K (the Fig.-3 convention for ebar).
struct BandSpectrum {
    ModelSpec model;
    PrecisionPolicy precision;
    std::vector<BandEntry> entries;
    Real delta;
    bool half_open_delta = false;
    Real ebar;
    std::optional<Real> e_quarter;
    Real eps;
};

struct BandOptions {
    int workers = 1;
    ConvergeOptions converge;
    /// Per-sector hook, e.g. for cached results: returns true and fills the
    /// result if the sector is already known; band() fills the cache through
    /// store after computing otherwise.
    std::function<bool(int j, EigenResult&)> lookup;
    std::function<void(int j, const EigenResult&)> store;
};

/// Computes every sector's ground energy at cutoff convergence eps and
/// assembles the band. Sectors run concurrently when workers > 1; a sector
/// failure is rethrown after the remaining sectors finish.
BandSpectrum band(const ModelSpec& model, const Real& eps, const PrecisionPolicy& precision,
                  const BandOptions& options = {});

/// max_j |E_j - (ebar - (delta/2) cos theta_j)| / delta — the relative
/// departure of the computed band from the Bloch cosine law. Throws on a
/// vanishing delta.
Real cosine_fit_residual(const BandSpectrum& spectrum);

struct ThetaRow {
    int j;
    Real theta;
    Real energy;
    int degeneracy;
};

/// One row per distinct level (j = 0..floor(K/2)), with degeneracy 1 for
/// theta = 0 and theta = pi and 2 otherwise. Verifies E_j = E_{K-j} within
/// the achieved tolerance before merging a degenerate pair.
std::vector<ThetaRow> theta_spectrum_table(const BandSpectrum& spectrum);

struct Complex {
    Real re;
    Real im;
    Real abs() const { return sqrt(re * re + im * im); }
};

/// Position-space Bloch wavefunction of sector j from plane-wave coefficients
/// c_n (n = -N..N stored ascending): psi_j(x) = sum_n c_n g^{1/4}/sqrt(K)
/// exp(2 pi i (j + nK) sqrt(g) x / K). Unit-norm coefficients give a
/// wavefunction normalized over one circle.
Complex wavefunction(const ModelSpec& model, int j, const std::vector<Real>& coeffs, const Real& x);

/// Trapezoid quadrature of |psi|^2 over the circle on a uniform grid of at
/// least 64 * (number of coefficients) points; the integrand is band-limited,
/// so the trapezoid rule is spectrally accurate here.
Real wavefunction_norm(const ModelSpec& model, int j, const std::vector<Real>& coeffs);

}  // namespace qpend

#endif
