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

#ifndef QPEND_GELFAND_YAGLOM_HPP
#define QPEND_GELFAND_YAGLOM_HPP

#include <functional>

#include "qpend/real.hpp"

namespace qpend {

/// Determinant-ratio data at Euclidean horizon T: psi{1,2}_end are the
/// endpoint values of the initial-value solutions for W1 = 1 and
/// W2 = 1 - 2 sech^2, ratio their quotient (the determinant ratio), lambda0
/// the quasi-zero eigenvalue of the fluctuation operator, and
/// kappa = sqrt(lambda0 * ratio) -> 2.
struct DetRatioResult {
    Real T_horizon;
    Real psi1_end;
    Real psi2_end;
    Real ratio;
    Real lambda0;
    Real kappa;
};

struct IvpResult {
    Real psi_end;
    Real dpsi_end;
    /// Step-doubling (Richardson) estimate of the endpoint discretization
    /// error of the full-step run.
    Real error_estimate;
};

/// Integrates psi'' = (W(tau) - lambda) psi from -T/2 to T/2 with
/// psi(-T/2) = psi0, psi'(-T/2) = dpsi0 (the determinant convention 0, 1 by
/// default), by the classical fixed-step 4th-order Runge-Kutta scheme. A
/// nonzero tol turns the step-doubling estimate into a hard check
/// (SolverError reports the achieved estimate when steps are too few).
/// Precision follows the ambient default; the endpoint grows like e^T, so the
/// caller's digits must comfortably cover e^T amplification of roundoff
/// (40+ digits at T = 30).
IvpResult integrate_ivp(const std::function<Real(const Real&)>& W, const Real& lambda, const Real& T_horizon,
                        long steps, const Real& tol = Real(0), const Real& psi0 = Real(0),
                        const Real& dpsi0 = Real(1));

/// psi1(T/2) / psi2(T/2) for W1 = 1 against the instanton fluctuation
/// potential; approaches e^T / 2 at large T.
Real det_ratio(const Real& T_horizon, long steps);

/// Smallest lambda with psi2_lambda(T/2) = 0, found by bracketed bisection in
/// lambda within [0.1, 10] * 8 e^{-T} (widened once to [0.01, 100] before
/// giving up). lambda0 * e^T -> 8 as T grows.
Real lambda0_shooting(const Real& T_horizon, long steps);

/// The same eigenvalue from the resolvent quadrature
/// lambda0 = psi2_0(T/2) / int G(T/2, tau') psi2_0(tau') dtau', with G built
/// from the closed-form zero modes y1 = sech tau, y2 = sinh tau + tau sech tau
/// and the Wronskian -2. Requires T >= 10.
Real lambda0_green(const Real& T_horizon);

/// sqrt(lambda0 * det_ratio); approaches 2 with O(e^{-T}) deviation.
Real kappa(const Real& T_horizon, long steps);

DetRatioResult det_ratio_result(const Real& T_horizon, long steps);

/// Wronskian of the zero-mode pair in the orientation whose value is -2,
/// i.e. ydot1 y2 - y1 ydot2; constant in tau.
Real wronskian(const Real& tau);

/// The closed-form endpoint of the W2 initial-value solution,
/// psi2_0(T/2) = tanh(T/2) + (T/2) sech^2(T/2), exact for every T. Test
/// oracle for the integrator and the large-T limit psi2 -> 1.
Real psi2_endpoint_closed_form(const Real& T_horizon);

}  // namespace qpend

#endif
