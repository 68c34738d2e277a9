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

#ifndef QPEND_REAL_HPP
#define QPEND_REAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "qpend/errors.hpp"

namespace qpend {

/// Arbitrary-precision real. Decimal precision is set at runtime, per run,
/// through PrecisionScope; every scalar of the toolkit is one of these.
using Real = boost::multiprecision::mpfr_float;

/// Exact integer (instanton counting grows like 2^n).
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, used by the perturbation module.
using Rational = boost::multiprecision::cpp_rational;

/// Decimal-digit budget of a run. All arithmetic happens at working_digits;
/// final answers are quoted to target_digits. The band width spans thousands
/// of orders of magnitude, so callers computing band quantities must fold
/// |log10 delta| into working_digits on top of this guard (see spectrum).
struct PrecisionPolicy {
    unsigned target_digits = 40;
    unsigned working_digits = 70;

    /// guard = max(30, 0.2 * target); working = target + guard.
    static PrecisionPolicy for_target(unsigned target);

    /// Same guard rule, plus extra digits for scale separation (e.g. the
    /// exponent of the band width).
    static PrecisionPolicy for_target_with_scale(unsigned target, unsigned scale_digits);

    unsigned guard() const { return working_digits > target_digits ? working_digits - target_digits : 0; }

    /// Throws InvalidArgument unless working_digits >= target_digits + 30.
    void validate() const;
};

/// Sets the process-wide default precision (decimal digits) for Real and
/// restores the previous value on destruction. Arithmetic inherits precision
/// from its operands, so establishing the scope before constructing inputs is
/// enough; concurrent tasks must all run under the same policy.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits);
    explicit PrecisionScope(const PrecisionPolicy& policy) : PrecisionScope(policy.working_digits) {}
    ~PrecisionScope();

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// pi computed at the current default precision, never a machine constant.
Real pi();

/// 10^e at the current default precision.
Real pow10(long e);

/// Parses a decimal string; rejects anything with trailing garbage.
Real parse_real(const std::string& text);

/// Full-precision decimal form; parse_real round-trips it exactly.
std::string to_decimal(const Real& x);

/// Decimal form truncated to the given number of significant digits.
std::string to_decimal(const Real& x, unsigned digits);

/// Next representable value above/below x at x's own precision.
Real ulp_above(const Real& x);
Real ulp_below(const Real& x);

}  // namespace qpend

#endif
