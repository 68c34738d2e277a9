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

#include <doctest.h>

#include "oracle.hpp"
#include "qpend/eigensolver.hpp"
#include "qpend/perturbation.hpp"
#include "test_util.hpp"

using namespace qpend;
using test::Rng;

TEST_SUITE_BEGIN("eigensolver");

namespace {

const PrecisionPolicy kPrec = PrecisionPolicy::for_target(40);

SectorMatrix detached(std::vector<double> diag, double off) {
    std::vector<Real> d;
    d.reserve(diag.size());
    for (double x : diag)
        d.emplace_back(x);
    return SectorMatrix(std::move(d), Real(off), kPrec);
}

}  // namespace

TEST_CASE("sturm count at the Gershgorin bounds") {
    PrecisionScope scope(kPrec);
    SectorMatrix m(SectorSpec(ModelSpec(parse_real("0.2"), 4), 1), 8, kPrec);
    CHECK(sturm_count(m, m.gershgorin_lower() - 1) == 0);
    CHECK(sturm_count(m, m.gershgorin_upper() + 1) == m.dim());
}

TEST_CASE("sturm count on diag(1,2,3) with b = 0.1") {
    PrecisionScope scope(kPrec);
    SectorMatrix m = detached({1, 2, 3}, 0.1);
    CHECK(sturm_count(m, Real(2)) == 1);
    // cross-checked against the characteristic-polynomial roots
    test::CharPolyOracle oracle({Real(1), Real(2), Real(3)}, Real(1) / 10);
    auto roots = oracle.eigenvalues(pow10(-45));
    long below = 0;
    for (const Real& r : roots)
        if (r < 2)
            ++below;
    CHECK(below == 1);
}

TEST_CASE("sturm count is monotone in lambda") {
    PrecisionScope scope(kPrec);
    SectorMatrix m(SectorSpec(ModelSpec(parse_real("0.8"), 3), 2), 10, kPrec);
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        Real a = rng.uniform(-2.0, 40.0);
        Real b = rng.uniform(-2.0, 40.0);
        if (a > b)
            a.swap(b);
        CHECK(sturm_count(m, a) <= sturm_count(m, b));
    }
}

TEST_CASE("sturm count survives a shift exactly on an eigenvalue of a minor") {
    PrecisionScope scope(kPrec);
    // eigenvalues are 1 and 1 -/+ 0.25 sqrt2; lambda = 1 makes d_1 = 0 exactly,
    // and the downward nudge keeps the on-shift eigenvalue excluded
    SectorMatrix m = detached({1, 1, 1}, 0.25);
    CHECK(sturm_count(m, Real(1)) == 1);
    CHECK(sturm_count(m, Real(1) - pow10(-20)) == 1);
    CHECK(sturm_count(m, Real(1) + pow10(-20)) == 2);
}

TEST_CASE("lowest eigenvalues of closed-form matrices") {
    PrecisionScope scope(kPrec);
    SUBCASE("diagonal matrix") {
        SectorMatrix m = detached({5, 5, 5, 5}, 0.0);
        EigenResult r = lowest_eigenvalues(m, 1, pow10(-35));
        QPEND_CHECK_CLOSE_ABS(r.energies[0], Real(5), pow10(-34));
    }
    SUBCASE("2x2 analytic") {
        SectorMatrix m = detached({3, 3}, -0.5);
        EigenResult r = lowest_eigenvalues(m, 2, pow10(-35));
        QPEND_CHECK_CLOSE_ABS(r.energies[0], Real(5) / 2, pow10(-34));
        QPEND_CHECK_CLOSE_ABS(r.energies[1], Real(7) / 2, pow10(-34));
        CHECK(r.achieved_tolerance <= pow10(-35));
    }
}

TEST_CASE("sector ground state approaches 1/2 - |a_1| g at small g") {
    PrecisionScope scope(kPrec);
    Real g = pow10(-4);
    SectorMatrix m(SectorSpec(ModelSpec(g, 4), 0), 1400, kPrec);
    EigenResult r = lowest_eigenvalues(m, 1, pow10(-30));
    PerturbationSeries series = rs_ground_energy(3);
    // difference beyond second order is O(g^3) ~ 2e-11
    QPEND_CHECK_CLOSE_ABS(r.energies[0], series.eval(g, 2), pow10(-9));
}

TEST_CASE("bisection is deterministic") {
    PrecisionScope scope(kPrec);
    SectorMatrix m(SectorSpec(ModelSpec(parse_real("0.05"), 4), 1), 40, kPrec);
    EigenResult a = lowest_eigenvalues(m, 2, pow10(-32));
    EigenResult b = lowest_eigenvalues(m, 2, pow10(-32));
    CHECK(to_decimal(a.energies[0]) == to_decimal(b.energies[0]));
    CHECK(to_decimal(a.energies[1]) == to_decimal(b.energies[1]));
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("tolerance below the precision floor is rejected") {
    PrecisionScope scope(kPrec);
    SectorMatrix m = detached({1, 2}, 0.1);
    CHECK_THROWS_AS(lowest_eigenvalues(m, 1, pow10(-90)), PrecisionError);
    CHECK_THROWS_AS(lowest_eigenvalues(m, 0, pow10(-10)), InvalidArgument);
    CHECK_THROWS_AS(lowest_eigenvalues(m, 1, Real(0)), InvalidArgument);
}

TEST_CASE("interlacing of principal submatrices") {
    PrecisionScope scope(kPrec);
    Rng rng(33);
    std::vector<Real> diag;
    for (int i = 0; i < 9; ++i)
        diag.push_back(rng.uniform(-3.0, 3.0));
    Real b = rng.uniform(0.05, 0.6);
    std::vector<Real> sub(diag.begin(), diag.end() - 2);

    SectorMatrix big(std::vector<Real>(diag), Real(b), kPrec);
    SectorMatrix small(std::move(sub), Real(b), kPrec);
    auto eb = lowest_eigenvalues(big, 9, pow10(-30)).energies;
    auto es = lowest_eigenvalues(small, 7, pow10(-30)).energies;
    for (size_t i = 0; i < es.size(); ++i) {
        CHECK(eb[i] <= es[i] + pow10(-29));
        CHECK(es[i] <= eb[i + 2] + pow10(-29));
    }
}

TEST_CASE("bisection agrees with the characteristic-polynomial oracle") {
    // small version of the acceptance batch
    Rng rng(37);
    PrecisionPolicy prec = PrecisionPolicy::for_target(50);
    PrecisionScope scope(prec);
    for (int trial = 0; trial < 50; ++trial) {
        int dim = rng.uniform_int(2, 8);
        std::vector<Real> diag;
        for (int i = 0; i < dim; ++i)
            diag.push_back(rng.uniform(-5.0, 5.0));
        Real b = rng.uniform(-1.5, 1.5);
        if (b == 0)
            b = Real(1) / 2;
        SectorMatrix m(std::vector<Real>(diag), b, prec);
        auto mine = lowest_eigenvalues(m, dim, pow10(-45)).energies;
        auto oracle = test::CharPolyOracle(diag, b).eigenvalues(pow10(-45));
        REQUIRE(mine.size() == oracle.size());
        for (int i = 0; i < dim; ++i)
            QPEND_CHECK_CLOSE_ABS(mine[static_cast<size_t>(i)], oracle[static_cast<size_t>(i)],
                                  pow10(-40));
    }
}

TEST_CASE("eigenvector on closed-form cases") {
    PrecisionScope scope(kPrec);
    SUBCASE("diagonal matrix gives a basis vector") {
        SectorMatrix m = detached({1, 4, 9}, 0.0);
        auto v = eigenvector(m, Real(4), pow10(-30));
        QPEND_CHECK_CLOSE_ABS(v[1], Real(1), pow10(-25));
        QPEND_CHECK_CLOSE_ABS(v[0], Real(0), pow10(-25));
        QPEND_CHECK_CLOSE_ABS(v[2], Real(0), pow10(-25));
    }
    SUBCASE("symmetric 2x2 ground state") {
        SectorMatrix m = detached({2, 2}, -0.75);
        auto v = eigenvector(m, Real(2) - Real(3) / 4, pow10(-30));
        Real inv_sqrt2 = 1 / sqrt(Real(2));
        QPEND_CHECK_CLOSE_ABS(v[0], inv_sqrt2, pow10(-25));
        QPEND_CHECK_CLOSE_ABS(v[1], inv_sqrt2, pow10(-25));
    }
}

TEST_CASE("ground-state coefficients decay beyond the classically allowed region") {
    PrecisionScope scope(kPrec);
    SectorMatrix m(SectorSpec(ModelSpec(pow10(-2), 4), 0), 40, kPrec);
    EigenResult r = lowest_eigenvalues(m, 1, pow10(-30));
    auto v = eigenvector(m, r.energies[0], pow10(-30));
    // |c| decreasing in |n| from somewhat past the turning point outward
    long center = m.cutoff();
    for (long n = 6; n < 40; ++n) {
        CHECK(abs(v[static_cast<size_t>(center + n + 1)]) < abs(v[static_cast<size_t>(center + n)]));
        CHECK(abs(v[static_cast<size_t>(center - n - 1)]) < abs(v[static_cast<size_t>(center - n)]));
    }
}

TEST_CASE("converge_cutoff on an easy point certifies a small cutoff") {
    PrecisionPolicy prec = PrecisionPolicy::for_target(40);
    ConvergenceTrace trace;
    EigenResult r = converge_cutoff(SectorSpec(ModelSpec(Real(1), 4), 0), 1, pow10(-10), prec, &trace);
    CHECK(r.N_used <= 64);
    CHECK(trace.rows.size() >= 2);
    CHECK(trace.rows.front().N == 32);
    CHECK(r.achieved_tolerance <= pow10(-10));
    CHECK(r.iterations > 0);
}

TEST_CASE("converge_cutoff hard cap produces a solver error with partial trace") {
    PrecisionPolicy prec = PrecisionPolicy::for_target(40);
    ConvergenceTrace trace;
    ConvergeOptions opts;
    opts.initial_cutoff = 2;
    opts.hard_cap = 4;
    // far too small a cap for g = 1e-3
    CHECK_THROWS_AS(converge_cutoff(SectorSpec(ModelSpec(pow10(-3), 4), 0), 1, pow10(-25), prec,
                                    &trace, opts),
                    SolverError);
    CHECK(trace.rows.size() == 2);
}

TEST_SUITE_END();
