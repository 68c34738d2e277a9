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

#include "qpend/model.hpp"

namespace qpend {

ModelSpec::ModelSpec(Real coupling, int minima) : g(std::move(coupling)), K(minima) {
    if (!(g > 0))
        throw InvalidArgument("model: coupling g must be positive");
    if (K < 2)
        throw InvalidArgument("model: K must be at least 2");
}

Real ModelSpec::circle_length() const { return K / sqrt(g); }

Real ModelSpec::period() const { return 1 / sqrt(g); }

Real potential(const Real& x) {
    Real p = pi();
    return (1 - cos(2 * p * x)) / (4 * p * p);
}

Real instanton_profile(const Real& tau, const Real& g) {
    if (!(g > 0))
        throw InvalidArgument("instanton_profile: g must be positive");
    return 2 / pi() * atan(exp(tau)) / sqrt(g);
}

Real instanton_action(const Real& g) {
    if (!(g > 0))
        throw InvalidArgument("instanton_action: g must be positive");
    Real p = pi();
    return 2 / (p * p * g);
}

Real fluctuation_potential(const Real& tau) {
    Real s = 1 / cosh(tau);
    return 1 - 2 * s * s;
}

}  // namespace qpend
