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

#ifndef QPEND_HAMILTONIAN_HPP
#define QPEND_HAMILTONIAN_HPP

#include <optional>
#include <vector>

#include "qpend/model.hpp"
#include "qpend/real.hpp"

namespace qpend {

/// One Z_K translation sector, labeled by j with Bloch angle theta_j = 2 pi j / K.
struct SectorSpec {
    ModelSpec model;
    int j;

    SectorSpec(ModelSpec m, int sector);
    Real theta() const;
};

/// The Hamiltonian restricted to a sector, truncated at |n| <= N: a symmetric
/// tridiagonal matrix with
///   diag_n  = (g/2) (2 pi (j + nK) / K)^2 + 1/(4 pi^2 g),   n = -N..N,
///   offdiag = -1/(8 pi^2 g)   (constant).
/// The 1/2 on the kinetic term follows from P^2/2 in the plane-wave basis.
/// Immutable once built; safe to share across threads.
class SectorMatrix {
public:
    SectorMatrix(SectorSpec spec, long cutoff, PrecisionPolicy precision);

    /// Detached matrix: an explicit diagonal with the same constant-offdiagonal
    /// tridiagonal shape, no sector attached. What the eigensolver consumes in
    /// tests and oracles.
    SectorMatrix(std::vector<Real> diagonal, Real offdiag, PrecisionPolicy precision);

    long cutoff() const { return N_; }
    long dim() const { return static_cast<long>(diag_.size()); }

    /// i-th diagonal entry, i = 0..2N (plane-wave index n = i - N).
    const Real& diag(long i) const { return diag_[static_cast<size_t>(i)]; }
    const std::vector<Real>& diagonal() const { return diag_; }
    const Real& offdiag() const { return offdiag_; }

    /// Throws for detached matrices.
    const SectorSpec& spec() const;
    const PrecisionPolicy& precision() const { return precision_; }

    /// Gershgorin bounds; every eigenvalue lies in [lower, upper].
    Real gershgorin_lower() const;
    Real gershgorin_upper() const;

private:
    std::optional<SectorSpec> spec_;
    long N_;
    PrecisionPolicy precision_;
    std::vector<Real> diag_;
    Real offdiag_;
};

SectorMatrix build_sector_matrix(const SectorSpec& spec, long cutoff, const PrecisionPolicy& precision);

/// Self-test of the sector-scaling identity: the matrices of sectors (j, K)
/// and (l j, l K) coincide entry by entry, since (lj + n lK)/(lK) = (j + nK)/K.
/// Builds both at the given cutoff and compares. Always true; a mismatch
/// indicates a broken matrix-element formula.
bool sector_equivalence_check(int j, int K, int l, long cutoff = 20);

}  // namespace qpend

#endif
