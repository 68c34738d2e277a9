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

#ifndef QPEND_MODEL_HPP
#define QPEND_MODEL_HPP

#include "qpend/real.hpp"

namespace qpend {

/// Problem definition: H = P^2/2 + (1 - cos(2 pi sqrt(g) X)) / (4 pi^2 g)
/// with X on a circle of K potential periods of length 1/sqrt(g) each.
struct ModelSpec {
    Real g;
    int K;

    ModelSpec(Real coupling, int minima);

    /// K / sqrt(g)
    Real circle_length() const;
    /// 1 / sqrt(g)
    Real period() const;
};

/// V(x) = (1 - cos(2 pi x)) / (4 pi^2), x in units of the potential period.
/// Nonnegative, unit-periodic, V(0) = 0.
Real potential(const Real& x);

/// The instanton: xbar(tau) = (2/pi) g^{-1/2} arctan(e^tau), the minimal-action
/// Euclidean path from the minimum at 0 to the one at g^{-1/2}.
Real instanton_profile(const Real& tau, const Real& g);

/// S0 = 2 / (pi^2 g). Throws on g <= 0.
Real instanton_action(const Real& g);

/// Curvature of the potential along the instanton, in the dimensionless form
/// W(tau) = 1 - 2 sech^2(tau). Equals cos(4 arctan(e^tau)) but avoids the
/// arctan/cos cancellation at large |tau|; the trigonometric form is kept as
/// a test oracle only.
Real fluctuation_potential(const Real& tau);

}  // namespace qpend

#endif
