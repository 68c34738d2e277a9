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

#include "qpend/perturbation.hpp"
#include "test_util.hpp"

using namespace qpend;

TEST_SUITE_BEGIN("perturbation");

TEST_CASE("well expansion couplings") {
    PrecisionScope scope(50);
    WellExpansion w = well_expansion(4);
    REQUIRE(w.couplings.size() == 4);
    // harmonic term x^2/2 with unit curvature
    CHECK(w.couplings[0].coeff == Rational(1, 2));
    CHECK(w.couplings[0].pi_power == 0);
    // v_2 = -pi^2/6
    CHECK(w.couplings[1].coeff == Rational(-1, 6));
    CHECK(w.couplings[1].pi_power == 2);
    // v_3 = (2 pi)^4 / 6! = (16/720) pi^4 = pi^4/45
    CHECK(w.couplings[2].coeff == Rational(1, 45));
    CHECK(w.couplings[2].pi_power == 4);
    // v_4 = -(2 pi)^6 / 8!
    CHECK(w.couplings[3].coeff == Rational(-64, 40320));
    CHECK(w.couplings[3].pi_power == 6);
    CHECK_THROWS_AS(well_expansion(1), InvalidArgument);
}

TEST_CASE("ground-energy series through order six") {
    PerturbationSeries s = rs_ground_energy(6);
    REQUIRE(s.order() == 6);
    CHECK(s.a[0].coeff == Rational(1, 2));
    CHECK(s.a[1].coeff == Rational(-1, 8));
    // frozen from an independent exact-rational implementation of the
    // recursion (Python fractions); a_2 also follows from second-order
    // theory by hand: pi^4/24 - 7 pi^4/96 = -pi^4/32
    CHECK(s.a[2].coeff == Rational(-1, 32));
    CHECK(s.a[3].coeff == Rational(-3, 128));
    CHECK(s.a[4].coeff == Rational(-53, 2048));
    CHECK(s.a[5].coeff == Rational(-297, 8192));
    CHECK(s.a[6].coeff == Rational(-3961, 65536));
    for (int k = 0; k <= 6; ++k)
        CHECK(s.a[static_cast<size_t>(k)].pi_power == static_cast<unsigned>(2 * k));
}

TEST_CASE("the rationals are precision independent") {
    PerturbationSeries lo, hi;
    {
        PrecisionScope scope(30);
        lo = rs_ground_energy(5);
    }
    {
        PrecisionScope scope(200);
        hi = rs_ground_energy(5);
    }
    for (int k = 0; k <= 5; ++k)
        CHECK(lo.a[static_cast<size_t>(k)].coeff == hi.a[static_cast<size_t>(k)].coeff);
}

TEST_CASE("series evaluation at a known point") {
    PrecisionScope scope(60);
    PerturbationSeries s = rs_ground_energy(6);
    // value frozen from the independent implementation at g = 0.02
    QPEND_CHECK_CLOSE_ABS(s.eval(parse_real("0.02")),
                          parse_real("0.4738743865752277737357558"), pow10(-24));
    QPEND_CHECK_CLOSE_ABS(s.eval(parse_real("0.001")),
                          parse_real("0.4987632326342059266853111"), pow10(-24));
    // partial sums: m = 0 is the harmonic level
    QPEND_CHECK_CLOSE_ABS(s.eval(parse_real("0.3"), 0), Real(1) / 2, pow10(-55));
}

TEST_CASE("band mean check on synthetic spectra") {
    PrecisionPolicy prec{40, 80};
    PrecisionScope scope(prec);
    PerturbationSeries s = rs_ground_energy(4);

    auto synthetic = [&](const char* g_str, int m, const Real& tail) {
        ModelSpec model(parse_real(g_str), 4);
        BandSpectrum b{model, prec, {}, Real(0), false, Real(0), std::nullopt, pow10(-30)};
        Real g = model.g;
        b.ebar = s.eval(g, m) + tail * pow(g, m + 1);
        return b;
    };

    SUBCASE("series truncated at order two leaves a g^3 residual") {
        Real tail = parse_real("-22.5");
        Real expo = band_mean_check(synthetic("1e-2", 2, tail), synthetic("1e-3", 2, tail), s, 2);
        QPEND_CHECK_CLOSE_ABS(expo, Real(3), Real("0.05"));
    }
    SUBCASE("order zero leaves the O(g) slope") {
        Real tail = parse_real("-1.23");
        Real expo = band_mean_check(synthetic("1e-2", 0, tail), synthetic("1e-3", 0, tail), s, 0);
        QPEND_CHECK_CLOSE_ABS(expo, Real(1), Real("0.05"));
    }
    SUBCASE("argument order is enforced") {
        Real tail = Real(1);
        auto a = synthetic("1e-3", 2, tail);
        auto b = synthetic("1e-2", 2, tail);
        CHECK_THROWS_AS(band_mean_check(a, b, s, 2), InvalidArgument);
        CHECK_THROWS_AS(band_mean_check(b, a, s, 9), InvalidArgument);
    }
}

TEST_SUITE_END();
