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

#include "qpend/real.hpp"

#include <algorithm>
#include <cctype>

namespace qpend {

PrecisionPolicy PrecisionPolicy::for_target(unsigned target) {
    unsigned guard = std::max(30u, target / 5u);
    return PrecisionPolicy{target, target + guard};
}

PrecisionPolicy PrecisionPolicy::for_target_with_scale(unsigned target, unsigned scale_digits) {
    PrecisionPolicy p = for_target(target + scale_digits);
    p.target_digits = target;
    return p;
}

void PrecisionPolicy::validate() const {
    if (target_digits < 1)
        throw InvalidArgument("precision policy: target_digits must be >= 1");
    if (working_digits < target_digits + 30)
        throw InvalidArgument("precision policy: working_digits must be >= target_digits + 30");
}

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
    if (digits < 10)
        throw InvalidArgument("precision scope: fewer than 10 digits requested");
    // The default precision is process-global; writing only when the value
    // actually changes lets worker threads open nested scopes at the precision
    // their parent already established without racing on the global.
    if (digits != saved_)
        Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() {
    if (Real::default_precision() != saved_)
        Real::default_precision(saved_);
}

Real pi() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real pow10(long e) {
    Real r;
    mpfr_set_si(r.backend().data(), 10, MPFR_RNDN);
    mpfr_pow_si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

Real parse_real(const std::string& text) {
    std::string t = text;
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    t.erase(t.begin(), std::find_if_not(t.begin(), t.end(), issp));
    t.erase(std::find_if_not(t.rbegin(), t.rend(), issp).base(), t.end());
    if (t.empty())
        throw InvalidArgument("empty numeric literal");
    Real r;
    if (mpfr_set_str(r.backend().data(), t.c_str(), 10, MPFR_RNDN) != 0)
        throw InvalidArgument("malformed numeric literal: '" + text + "'");
    return r;
}

std::string to_decimal(const Real& x) { return x.str(0, std::ios_base::scientific); }

std::string to_decimal(const Real& x, unsigned digits) {
    return x.str(digits, std::ios_base::scientific);
}

Real ulp_above(const Real& x) {
    Real r = x;
    mpfr_nextabove(r.backend().data());
    return r;
}

Real ulp_below(const Real& x) {
    Real r = x;
    mpfr_nextbelow(r.backend().data());
    return r;
}

}  // namespace qpend
