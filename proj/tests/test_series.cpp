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

#include "qpend/series.hpp"
#include "test_util.hpp"

using namespace qpend;
using test::Rng;

TEST_SUITE_BEGIN("series");

namespace {

// the integer-normalized coefficient table of the band-width series
const long long kTable[] = {1, -14, -118, -3588, -150010, -7665092, -454322300};
const char* kTable78 = "-30378374408";
const char* kTable8 = "-2253225850810";
const char* kTable9 = "-183329494073630";

std::vector<Real> paper_coefficients() {
    std::vector<Real> b;
    Real p2 = pi() * pi();
    Real scale = 1;
    auto push = [&](const Real& integer_value) {
        b.push_back(integer_value * scale);
        scale *= p2 / 32;
    };
    for (long long v : kTable)
        push(Real(v));
    push(parse_real(kTable78));
    push(parse_real(kTable8));
    push(parse_real(kTable9));
    return b;
}

std::vector<RatioSample> geometric_samples(const std::vector<Real>& coeffs, double g_min,
                                           int points, long digits) {
    std::vector<RatioSample> out;
    Real g = parse_real(std::to_string(g_min)) * pow(Real(2), points - 1);
    for (int i = 0; i < points; ++i, g /= 2) {
        Real v = 0, gk = 1;
        for (const Real& c : coeffs) {
            v += c * gk;
            gk *= g;
        }
        out.push_back(RatioSample{g, v, digits});
    }
    return out;
}

}  // namespace

TEST_CASE("linear synthetic input is recovered exactly") {
    PrecisionScope scope(60);
    std::vector<Real> coeffs{Real(1), Real(-14) * pi() * pi() / 32};
    auto samples = geometric_samples(coeffs, 1e-3, 6, 55);
    SeriesFit fit = extract_coefficients(samples, 2);
    QPEND_CHECK_CLOSE_ABS(fit.coefficients[0].value, Real(1), pow10(-45));
    auto rows = normalize_to_integers(fit);
    QPEND_CHECK_CLOSE_ABS(rows[1].normalized, Real(-14), pow10(-40));
    CHECK(rows[1].nearest == -14);
    CHECK(fit.coefficients[0].determined);
    CHECK(fit.coefficients[1].determined);
}

TEST_CASE("any polynomial below the fit order is recovered to working precision") {
    PrecisionScope scope(80);
    Rng rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        int m = rng.uniform_int(2, 5);
        std::vector<Real> coeffs;
        for (int k = 0; k < m; ++k)
            coeffs.push_back(rng.uniform(-20.0, 20.0));
        auto samples = geometric_samples(coeffs, 2e-3, m + 3, 74);
        SeriesFit fit = extract_coefficients(samples, m);
        for (int k = 0; k < m; ++k)
            QPEND_CHECK_CLOSE_ABS(fit.coefficients[static_cast<size_t>(k)].value,
                                  coeffs[static_cast<size_t>(k)],
                                  pow10(-40) * (1 + abs(coeffs[static_cast<size_t>(k)])));
    }
}

TEST_CASE("paper-table synthetic pipeline recovers b_1 and b_2") {
    PrecisionScope scope(80);
    auto samples = geometric_samples(paper_coefficients(), 5e-4, 8, 45);
    SeriesFit fit = extract_coefficients(samples, 6);
    auto rows = normalize_to_integers(fit);
    QPEND_CHECK_CLOSE_ABS(rows[0].normalized, Real(1), Real("1e-6"));
    QPEND_CHECK_CLOSE_ABS(rows[1].normalized, Real(-14), Real("0.5"));
    QPEND_CHECK_CLOSE_ABS(rows[2].normalized, Real(-118), Real(5));
    CHECK(rows[1].nearest == -14);
    CHECK(rows[2].nearest == -118);
}

TEST_CASE("order m and m+1 fits agree within reported uncertainties") {
    PrecisionScope scope(80);
    auto samples = geometric_samples(paper_coefficients(), 5e-4, 9, 45);
    SeriesFit a = extract_coefficients(samples, 5);
    SeriesFit b = extract_coefficients(samples, 6);
    for (int k = 0; k < 5; ++k) {
        const auto& ca = a.coefficients[static_cast<size_t>(k)];
        const auto& cb = b.coefficients[static_cast<size_t>(k)];
        if (ca.determined && cb.determined)
            CHECK(abs(ca.value - cb.value) <= 2 * (ca.uncertainty + cb.uncertainty));
    }
}

TEST_CASE("noisy samples flag undetermined coefficients instead of dropping them") {
    PrecisionScope scope(60);
    auto samples = geometric_samples(paper_coefficients(), 5e-4, 8, 6);  // six digits only
    SeriesFit fit = extract_coefficients(samples, 6);
    REQUIRE(fit.coefficients.size() == 6);
    CHECK_FALSE(fit.coefficients[5].determined);
    CHECK(fit.coefficients[0].determined);  // b_0 = 1 survives six digits
    for (const auto& c : fit.coefficients)
        CHECK(c.uncertainty > 0);
}

TEST_CASE("vandermonde cross-check path agrees") {
    PrecisionScope scope(80);
    auto samples = geometric_samples(paper_coefficients(), 5e-4, 8, 60);
    SeriesFit fit = extract_coefficients(samples, 5);
    auto vd = vandermonde_coefficients(samples, 5);
    for (int k = 0; k < 3; ++k) {
        Real tol = fit.coefficients[static_cast<size_t>(k)].uncertainty * 10 + pow10(-20);
        QPEND_CHECK_CLOSE_ABS(fit.coefficients[static_cast<size_t>(k)].value,
                              vd[static_cast<size_t>(k)], tol);
    }
}

TEST_CASE("sample validation") {
    PrecisionScope scope(50);
    auto samples = geometric_samples({Real(1)}, 1e-3, 4, 40);
    CHECK_THROWS_AS(extract_coefficients(samples, 3), InvalidArgument);
    CHECK_THROWS_AS(extract_coefficients(samples, 0), InvalidArgument);
    samples.push_back(samples.back());
    CHECK_THROWS_AS(extract_coefficients(samples, 2), InvalidArgument);
    samples.back().g = Real(-1);
    CHECK_THROWS_AS(extract_coefficients(samples, 2), InvalidArgument);
}

TEST_CASE("growth fit brackets the factorial model of the table") {
    PrecisionScope scope(60);
    GrowthFit fit = growth_fit(paper_coefficients(), 0);
    CHECK(fit.A > Real("-1.3"));
    CHECK(fit.A < Real("-0.95"));
    CHECK(fit.B > Real("2.4"));
    CHECK(fit.B < Real("3.2"));
    CHECK(fit.k_min_used == 6);
    CHECK(fit.k_max_used == 9);

    SUBCASE("dropping the last coefficient moves B by less than 5 percent") {
        auto b = paper_coefficients();
        b.pop_back();
        GrowthFit without = growth_fit(b, 0);
        CHECK(abs(without.B / fit.B - 1) < Real("0.05"));
    }
}

TEST_CASE("growth fit recovers a pure factorial model exactly") {
    PrecisionScope scope(60);
    std::vector<Real> b;
    for (int k = 0; k <= 9; ++k) {
        Real fact = 1;
        for (int i = 2; i <= k; ++i)
            fact *= i;
        b.push_back(Real(-2) * pow(Real(3), k) * fact);
    }
    GrowthFit fit = growth_fit(b, 0);
    QPEND_CHECK_CLOSE_ABS(fit.A, Real(-2), pow10(-40));
    QPEND_CHECK_CLOSE_ABS(fit.B, Real(3), pow10(-40));
}

TEST_CASE("growth fit rejects sign changes and short inputs") {
    PrecisionScope scope(50);
    std::vector<Real> mixed;
    for (int k = 0; k <= 9; ++k)
        mixed.push_back(Real(k % 2 == 0 ? 1 : -1));
    CHECK_THROWS_AS(growth_fit(mixed, 0), SolverError);
    std::vector<Real> short_list{Real(-1), Real(-2), Real(-3)};
    CHECK_THROWS_AS(growth_fit(short_list, 3), InvalidArgument);
}

TEST_SUITE_END();
