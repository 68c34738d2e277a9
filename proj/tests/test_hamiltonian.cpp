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

#include "qpend/hamiltonian.hpp"
#include "test_util.hpp"

using namespace qpend;

TEST_SUITE_BEGIN("hamiltonian");

namespace {
const PrecisionPolicy kPrec = PrecisionPolicy::for_target(40);
}

TEST_CASE("matrix elements for K=4, j=0, g=1") {
    PrecisionScope scope(kPrec);
    SectorMatrix m(SectorSpec(ModelSpec(Real(1), 4), 0), 3, kPrec);
    Real p = pi();
    CHECK(m.dim() == 7);
    // n = 0 entry: kinetic term vanishes
    QPEND_CHECK_CLOSE_ABS(m.diag(3), 1 / (4 * p * p), pow10(-60));
    // n = 1 entry: (1/2)(2 pi)^2 + 1/(4 pi^2)
    QPEND_CHECK_CLOSE_ABS(m.diag(4), 2 * p * p + 1 / (4 * p * p), pow10(-60));
    QPEND_CHECK_CLOSE_ABS(m.offdiag(), -1 / (8 * p * p), pow10(-60));
}

TEST_CASE("off-diagonal is -1/(8 pi^2 g) for any sector") {
    PrecisionScope scope(kPrec);
    test::Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        Real g = rng.uniform(0.001, 3.0);
        int K = rng.uniform_int(2, 9);
        int j = rng.uniform_int(0, K - 1);
        SectorMatrix m(SectorSpec(ModelSpec(g, K), j), 5, kPrec);
        QPEND_CHECK_CLOSE_REL(m.offdiag(), -1 / (8 * pi() * pi() * g), pow10(-60));
        CHECK(m.offdiag() < 0);
        // every diagonal entry dominated by the potential floor
        for (long idx = 0; idx < m.dim(); ++idx)
            CHECK(m.diag(idx) >= 1 / (4 * pi() * pi() * g) * (1 - pow10(-30)));
    }
}

TEST_CASE("j=0 diagonal is reflection symmetric") {
    PrecisionScope scope(kPrec);
    SectorMatrix m(SectorSpec(ModelSpec(parse_real("0.37"), 5), 0), 12, kPrec);
    for (long n = 1; n <= 12; ++n)
        CHECK(m.diag(12 + n) == m.diag(12 - n));
}

TEST_CASE("gershgorin bounds bracket the diagonal range") {
    PrecisionScope scope(kPrec);
    SectorMatrix m(SectorSpec(ModelSpec(Real(1) / 2, 3), 1), 6, kPrec);
    CHECK(m.gershgorin_lower() < m.diag(6));
    CHECK(m.gershgorin_upper() > m.diag(0));
    CHECK(m.gershgorin_upper() > m.gershgorin_lower());
}

TEST_CASE("invalid construction is rejected") {
    PrecisionScope scope(kPrec);
    CHECK_THROWS_AS(SectorMatrix(SectorSpec(ModelSpec(Real(1), 4), 0), 0, kPrec), InvalidArgument);
    CHECK_THROWS_AS(SectorSpec(ModelSpec(Real(1), 4), 4), InvalidArgument);
    CHECK_THROWS_AS(SectorSpec(ModelSpec(Real(1), 4), -1), InvalidArgument);
}

TEST_CASE("entries are exact to working precision across rebuilds") {
    PrecisionPolicy lo = PrecisionPolicy::for_target(40);
    PrecisionPolicy hi = PrecisionPolicy::for_target(120);
    SectorMatrix a(SectorSpec(ModelSpec(parse_real("0.013"), 4), 1), 10, lo);
    SectorMatrix b(SectorSpec(ModelSpec(parse_real("0.013"), 4), 1), 10, hi);
    PrecisionScope scope(hi);
    for (long i = 0; i < a.dim(); ++i) {
        Real rel = abs(a.diag(i) - b.diag(i)) / abs(b.diag(i));
        CHECK(rel < pow10(-(static_cast<long>(lo.working_digits)) + 2));
    }
}

TEST_CASE("sector scaling identity (j,K) ~ (lj,lK)") {
    CHECK(sector_equivalence_check(1, 2, 3));
    CHECK(sector_equivalence_check(0, 1, 5));
    CHECK(sector_equivalence_check(1, 3, 2));
    CHECK(sector_equivalence_check(2, 5, 4));
    CHECK_THROWS_AS(sector_equivalence_check(1, 3, 0), InvalidArgument);
}

TEST_CASE("detached matrix carries no sector") {
    PrecisionScope scope(kPrec);
    SectorMatrix m({Real(1), Real(2), Real(3)}, Real(1) / 10, kPrec);
    CHECK(m.dim() == 3);
    CHECK_THROWS_AS(m.spec(), InvalidArgument);
    CHECK_THROWS_AS(SectorMatrix(std::vector<Real>{}, Real(1), kPrec), InvalidArgument);
}

TEST_SUITE_END();
