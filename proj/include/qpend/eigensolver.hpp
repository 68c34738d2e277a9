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

#ifndef QPEND_EIGENSOLVER_HPP
#define QPEND_EIGENSOLVER_HPP

#include <vector>

#include "qpend/hamiltonian.hpp"
#include "qpend/real.hpp"

namespace qpend {

struct EigenResult {
    /// Lowest eigenvalues, strictly ascending (tridiagonal with nonzero
    /// off-diagonal has a simple spectrum).
    std::vector<Real> energies;
    /// For converge_cutoff: the smallest cutoff the ladder certified to eps,
    /// i.e. the rung whose energies the next doubling reproduced within eps.
    /// For fixed-cutoff solves: the matrix cutoff.
    long N_used = 0;
    Real achieved_tolerance;
    /// Total Sturm passes spent in bisection.
    long iterations = 0;
};

/// One rung of a cutoff-convergence trace.
struct TraceRow {
    long N;
    std::vector<Real> energies;
};

struct ConvergenceTrace {
    std::vector<TraceRow> rows;
};

struct ConvergeOptions {
    long initial_cutoff = 32;
    long hard_cap = 1 << 20;
    /// Bisection tolerance as a fraction of eps; keeps bisection noise well
    /// below the discretization signal the stop test looks at.
    int tol_divisor = 16;
};

/// Number of eigenvalues strictly below lambda, by the Sturm recurrence
/// d_1 = a_1 - lambda, d_i = (a_i - lambda) - b^2 / d_{i-1}, counting
/// negative d_i. An exactly zero pivot perturbs lambda by one ulp downward and
/// recounts; approaching from below keeps an eigenvalue sitting exactly at
/// lambda out of the count, so the result stays "strictly below" and is
/// deterministic.
long sturm_count(const SectorMatrix& matrix, const Real& lambda);

/// m smallest eigenvalues, each bracketed by bisection between the Gershgorin
/// bounds until the bracket is narrower than tol. Deterministic for fixed
/// precision. Throws PrecisionError when tol is below what working precision
/// can resolve against the matrix norm.
EigenResult lowest_eigenvalues(const SectorMatrix& matrix, int m, const Real& tol);

/// Unit-norm eigenvector for a converged eigenvalue, by inverse iteration from
/// the deterministic all-equal start vector. Residual ||Mv - lambda v|| is
/// driven below 10 * tol; failing that within the iteration cap throws
/// SolverError (the eigenvalue was not resolved tightly enough).
std::vector<Real> eigenvector(const SectorMatrix& matrix, const Real& eigenvalue, const Real& tol,
                              int max_iterations = 16);

/// Doubles the cutoff from initial_cutoff until the m lowest energies agree
/// with the previous rung to within eps. Energies are returned at the final
/// rung; N_used records the certified cutoff (see EigenResult). The full
/// ladder is appended to *trace when given, including on failure, so a hard-cap
/// error still leaves the partial trace behind.
EigenResult converge_cutoff(const SectorSpec& spec, int m, const Real& eps,
                            const PrecisionPolicy& precision, ConvergenceTrace* trace = nullptr,
                            const ConvergeOptions& options = {});

}  // namespace qpend

#endif
