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

#include "qpend/eigensolver.hpp"

#include <algorithm>

namespace qpend {

namespace {

// Counts negative Sturm pivots for a fixed shift; returns false on an exactly
// zero pivot so the caller can nudge lambda. Compound in-place operations keep
// the inner loop free of allocations.
bool sturm_pass(const SectorMatrix& m, const Real& lambda, const Real& b2, long& count_out) {
    long count = 0;
    Real d = m.diag(0);
    d -= lambda;
    if (d == 0)
        return false;
    if (d < 0)
        ++count;
    Real t;
    const long n = m.dim();
    for (long i = 1; i < n; ++i) {
        t = b2;
        t /= d;
        d = m.diag(i);
        d -= lambda;
        d -= t;
        if (d == 0)
            return false;
        if (d < 0)
            ++count;
    }
    count_out = count;
    return true;
}

Real resolution_floor(const SectorMatrix& m) {
    Real scale = abs(m.gershgorin_upper());
    Real lo = abs(m.gershgorin_lower());
    if (lo > scale)
        scale = lo;
    long working = static_cast<long>(m.precision().working_digits);
    long guard = static_cast<long>(m.precision().guard());
    return (1 + scale) * pow10(guard - working);
}

}  // namespace

long sturm_count(const SectorMatrix& matrix, const Real& lambda) {
    PrecisionScope scope(matrix.precision());
    const Real b2 = matrix.offdiag() * matrix.offdiag();
    Real shift = lambda;
    for (int attempt = 0; attempt < 64; ++attempt) {
        long count = 0;
        if (sturm_pass(matrix, shift, b2, count))
            return count;
        shift = ulp_below(shift);
    }
    throw InternalError("sturm_count: zero pivot persisted through ulp perturbations");
}

EigenResult lowest_eigenvalues(const SectorMatrix& matrix, int m, const Real& tol) {
    if (m < 1)
        throw InvalidArgument("lowest_eigenvalues: m must be >= 1");
    if (!(tol > 0))
        throw InvalidArgument("lowest_eigenvalues: tol must be positive");
    PrecisionScope scope(matrix.precision());
    if (m > matrix.dim())
        throw InvalidArgument("lowest_eigenvalues: m exceeds matrix dimension");
    if (tol < resolution_floor(matrix))
        throw PrecisionError("lowest_eigenvalues: tol below working-precision resolution; raise working_digits");

    const Real b2 = matrix.offdiag() * matrix.offdiag();
    const Real glo = matrix.gershgorin_lower();
    const Real ghi = matrix.gershgorin_upper();

    EigenResult result;
    result.N_used = matrix.cutoff();
    result.achieved_tolerance = Real(0);
    result.energies.reserve(static_cast<size_t>(m));

    Real lo, hi, mid;
    for (int idx = 0; idx < m; ++idx) {
        lo = glo;
        hi = ghi;
        // invariant: count(lo) <= idx < count(hi)
        while (hi - lo > tol) {
            mid = (lo + hi) / 2;
            if (mid <= lo || mid >= hi)
                break;  // bracket at ulp width
            long count = 0;
            Real shift = mid;
            int attempt = 0;
            while (!sturm_pass(matrix, shift, b2, count)) {
                shift = ulp_below(shift);
                if (++attempt > 64)
                    throw InternalError("lowest_eigenvalues: persistent zero pivot");
            }
            ++result.iterations;
            if (count >= idx + 1)
                hi = mid;
            else
                lo = mid;
        }
        result.energies.push_back((lo + hi) / 2);
        Real width = hi - lo;
        if (width > result.achieved_tolerance)
            result.achieved_tolerance = width;
    }
    return result;
}

std::vector<Real> eigenvector(const SectorMatrix& matrix, const Real& eigenvalue, const Real& tol,
                              int max_iterations) {
    if (!(tol > 0))
        throw InvalidArgument("eigenvector: tol must be positive");
    PrecisionScope scope(matrix.precision());
    const long n = matrix.dim();
    const Real b = matrix.offdiag();
    const Real tiny = resolution_floor(matrix);

    std::vector<Real> v(static_cast<size_t>(n));
    Real nrm = 1 / sqrt(Real(n));
    for (auto& c : v)
        c = nrm;

    // (M - lambda) x = v by the tridiagonal (Thomas) sweep; near-singularity is
    // the point of inverse iteration, so a vanishing pivot is replaced by a
    // signed tiny value instead of aborting.
    std::vector<Real> piv(static_cast<size_t>(n)), rhs(static_cast<size_t>(n));
    std::vector<Real> x(static_cast<size_t>(n));
    for (int iter = 0; iter < max_iterations; ++iter) {
        for (long i = 0; i < n; ++i) {
            piv[i] = matrix.diag(i) - eigenvalue;
            rhs[i] = v[i];
        }
        for (long i = 1; i < n; ++i) {
            if (abs(piv[i - 1]) < tiny)
                piv[i - 1] = piv[i - 1] < 0 ? -tiny : tiny;
            Real w = b / piv[i - 1];
            piv[i] -= w * b;
            rhs[i] -= w * rhs[i - 1];
        }
        if (abs(piv[n - 1]) < tiny)
            piv[n - 1] = piv[n - 1] < 0 ? -tiny : tiny;
        x[n - 1] = rhs[n - 1] / piv[n - 1];
        for (long i = n - 2; i >= 0; --i)
            x[i] = (rhs[i] - b * x[i + 1]) / piv[i];

        Real norm2 = 0;
        for (const Real& c : x)
            norm2 += c * c;
        Real norm = sqrt(norm2);
        for (long i = 0; i < n; ++i)
            v[i] = x[i] / norm;

        // residual ||Mv - lambda v||
        Real res2 = 0;
        for (long i = 0; i < n; ++i) {
            Real r = (matrix.diag(i) - eigenvalue) * v[i];
            if (i > 0)
                r += b * v[i - 1];
            if (i + 1 < n)
                r += b * v[i + 1];
            res2 += r * r;
        }
        if (sqrt(res2) <= 10 * tol) {
            // deterministic sign: largest-magnitude component positive
            long arg = 0;
            for (long i = 1; i < n; ++i)
                if (abs(v[i]) > abs(v[arg]))
                    arg = i;
            if (v[arg] < 0)
                for (auto& c : v)
                    c = -c;
            return v;
        }
    }
    throw SolverError("eigenvector: inverse iteration did not converge; eigenvalue insufficiently resolved");
}

EigenResult converge_cutoff(const SectorSpec& spec, int m, const Real& eps,
                            const PrecisionPolicy& precision, ConvergenceTrace* trace,
                            const ConvergeOptions& options) {
    if (!(eps > 0))
        throw InvalidArgument("converge_cutoff: eps must be positive");
    PrecisionScope scope(precision);
    const Real tol = eps / options.tol_divisor;

    EigenResult prev;
    long prev_N = 0;
    long total_iterations = 0;
    for (long N = options.initial_cutoff; N <= options.hard_cap; N *= 2) {
        SectorMatrix matrix(spec, N, precision);
        EigenResult cur = lowest_eigenvalues(matrix, m, tol);
        total_iterations += cur.iterations;
        if (trace)
            trace->rows.push_back(TraceRow{N, cur.energies});
        if (!prev.energies.empty()) {
            Real diff = 0;
            for (int i = 0; i < m; ++i) {
                Real d = abs(cur.energies[i] - prev.energies[i]);
                if (d > diff)
                    diff = d;
            }
            if (diff < eps) {
                cur.N_used = prev_N;
                cur.iterations = total_iterations;
                if (diff > cur.achieved_tolerance)
                    cur.achieved_tolerance = diff;
                return cur;
            }
        }
        prev = std::move(cur);
        prev_N = N;
    }
    throw SolverError("converge_cutoff: cutoff hard cap reached before energies converged");
}

}  // namespace qpend
