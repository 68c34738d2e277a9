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

#include "qpend/hamiltonian.hpp"

#include <utility>

namespace qpend {

SectorSpec::SectorSpec(ModelSpec m, int sector) : model(std::move(m)), j(sector) {
    if (j < 0 || j >= model.K)
        throw InvalidArgument("sector: j must satisfy 0 <= j < K");
}

Real SectorSpec::theta() const { return 2 * pi() * j / model.K; }

SectorMatrix::SectorMatrix(SectorSpec spec, long cutoff, PrecisionPolicy precision)
    : spec_(std::move(spec)), N_(cutoff), precision_(precision) {
    if (N_ < 1)
        throw InvalidArgument("sector matrix: cutoff N must be >= 1");
    precision_.validate();
    PrecisionScope scope(precision_);

    const Real g = Real(spec_->model.g);  // re-round to working precision
    const Real p = pi();
    const Real pot = 1 / (4 * p * p * g);
    const int K = spec_->model.K;

    diag_.reserve(static_cast<size_t>(2 * N_ + 1));
    for (long n = -N_; n <= N_; ++n) {
        Real wavenumber = 2 * p * (spec_->j + n * K) / K;
        diag_.push_back(g / 2 * wavenumber * wavenumber + pot);
    }
    offdiag_ = -1 / (8 * p * p * g);
}

SectorMatrix::SectorMatrix(std::vector<Real> diagonal, Real offdiag, PrecisionPolicy precision)
    : N_(0), precision_(precision), diag_(std::move(diagonal)), offdiag_(std::move(offdiag)) {
    if (diag_.empty())
        throw InvalidArgument("sector matrix: empty diagonal");
    precision_.validate();
    N_ = (static_cast<long>(diag_.size()) - 1) / 2;
}

const SectorSpec& SectorMatrix::spec() const {
    if (!spec_)
        throw InvalidArgument("sector matrix: detached matrix has no sector spec");
    return *spec_;
}

Real SectorMatrix::gershgorin_lower() const {
    Real lo = diag_[0];
    for (const Real& d : diag_)
        if (d < lo) lo = d;
    return lo - 2 * abs(offdiag_);
}

Real SectorMatrix::gershgorin_upper() const {
    Real hi = diag_[0];
    for (const Real& d : diag_)
        if (d > hi) hi = d;
    return hi + 2 * abs(offdiag_);
}

SectorMatrix build_sector_matrix(const SectorSpec& spec, long cutoff, const PrecisionPolicy& precision) {
    return SectorMatrix(spec, cutoff, precision);
}

bool sector_equivalence_check(int j, int K, int l, long cutoff) {
    if (l < 1)
        throw InvalidArgument("sector_equivalence_check: l must be >= 1");
    // K >= 2 is the ModelSpec floor; scale a K=1 request instead of rejecting it.
    int K_a = K < 2 ? 2 : K;
    int j_a = K < 2 ? 2 * j : j;
    PrecisionPolicy prec = PrecisionPolicy::for_target(40);
    PrecisionScope scope(prec);
    Real g = 1;
    SectorMatrix a(SectorSpec(ModelSpec(g, K_a), j_a % K_a), cutoff, prec);
    SectorMatrix b(SectorSpec(ModelSpec(g, l * K_a), (l * j_a) % (l * K_a)), cutoff, prec);
    // wavenumbers (j + nK)/K and (lj + n lK)/(lK) coincide value by value; the
    // two division paths round differently, so match at working precision
    Real tol = pow10(-(static_cast<long>(prec.working_digits)) + 3);
    if (abs(a.offdiag() - b.offdiag()) > tol * abs(a.offdiag()))
        return false;
    for (long i = 0; i < a.dim(); ++i)
        if (abs(a.diag(i) - b.diag(i)) > tol * (1 + abs(a.diag(i))))
            return false;
    return true;
}

}  // namespace qpend
