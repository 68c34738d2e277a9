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

#include "qpend/gelfand_yaglom.hpp"

#include <vector>

#include "qpend/model.hpp"

namespace qpend {

namespace {

struct Endpoint {
    Real psi;
    Real dpsi;
};

// RK4 over precomputed potential samples on the half-step grid
// (w[2i] = W(tau_i), w[2i+1] = W(tau_i + h/2)). stride 2 walks the full grid;
// stride 4 reuses the same samples for the half-resolution comparison run.
Endpoint integrate_sampled(const std::vector<Real>& w, const Real& lambda, const Real& T, long steps,
                           long stride, const Real& psi0 = Real(0), const Real& dpsi0 = Real(1)) {
    const long n = steps / (stride / 2);
    const Real h = T / n;
    const Real h2 = h / 2, h6 = h / 6;

    Real y = psi0, v = dpsi0;
    Real k1y, k1v, k2y, k2v, k3y, k3v, k4y, k4v, ty, wv, acc;
    for (long i = 0; i < n; ++i) {
        const size_t at = static_cast<size_t>(i * stride);
        const size_t mid = at + static_cast<size_t>(stride / 2);
        const size_t end = at + static_cast<size_t>(stride);

        k1y = v;
        wv = w[at];
        wv -= lambda;
        k1v = wv;
        k1v *= y;

        ty = k1y;
        ty *= h2;
        ty += y;
        wv = w[mid];
        wv -= lambda;
        k2v = wv;
        k2v *= ty;
        k2y = k1v;
        k2y *= h2;
        k2y += v;

        ty = k2y;
        ty *= h2;
        ty += y;
        k3v = wv;
        k3v *= ty;
        k3y = k2v;
        k3y *= h2;
        k3y += v;

        ty = k3y;
        ty *= h;
        ty += y;
        wv = w[end];
        wv -= lambda;
        k4v = wv;
        k4v *= ty;
        k4y = k3v;
        k4y *= h;
        k4y += v;

        acc = k1y;
        acc += k4y;
        k2y += k3y;
        k2y *= 2;
        acc += k2y;
        acc *= h6;
        y += acc;

        acc = k1v;
        acc += k4v;
        k2v += k3v;
        k2v *= 2;
        acc += k2v;
        acc *= h6;
        v += acc;
    }
    return Endpoint{y, v};
}

std::vector<Real> sample_potential(const std::function<Real(const Real&)>& W, const Real& T, long steps) {
    std::vector<Real> w;
    w.reserve(static_cast<size_t>(2 * steps + 1));
    const Real h2 = T / (2 * steps);
    const Real t0 = -T / 2;
    for (long i = 0; i <= 2 * steps; ++i)
        w.push_back(W(t0 + i * h2));
    return w;
}

std::vector<Real> sample_fluctuation(const Real& T, long steps) {
    return sample_potential([](const Real& t) { return fluctuation_potential(t); }, T, steps);
}

void check_ivp_args(const Real& T, long steps) {
    if (!(T > 0))
        throw InvalidArgument("gelfand_yaglom: T_horizon must be positive");
    if (steps < 100)
        throw InvalidArgument("gelfand_yaglom: need at least 100 integration steps");
    if (steps % 4 != 0)
        throw InvalidArgument("gelfand_yaglom: steps must be divisible by 4 for step-doubling");
}

Real y2(const Real& t) { return sinh(t) + t / cosh(t); }

}  // namespace

IvpResult integrate_ivp(const std::function<Real(const Real&)>& W, const Real& lambda, const Real& T_horizon,
                        long steps, const Real& tol, const Real& psi0, const Real& dpsi0) {
    check_ivp_args(T_horizon, steps);
    std::vector<Real> w = sample_potential(W, T_horizon, steps);
    Endpoint full = integrate_sampled(w, lambda, T_horizon, steps, 2, psi0, dpsi0);
    Endpoint half = integrate_sampled(w, lambda, T_horizon, steps, 4, psi0, dpsi0);
    // classical Richardson estimate for a 4th-order scheme
    Real est = abs(full.psi - half.psi) / 15;
    if (tol > 0 && est > tol)
        throw SolverError("integrate_ivp: achieved error estimate " + to_decimal(est, 3) +
                          " exceeds tolerance; increase steps");
    return IvpResult{full.psi, full.dpsi, est};
}

Real det_ratio(const Real& T_horizon, long steps) {
    check_ivp_args(T_horizon, steps);
    std::vector<Real> w1(static_cast<size_t>(2 * steps + 1), Real(1));
    std::vector<Real> w2 = sample_fluctuation(T_horizon, steps);
    Endpoint p1 = integrate_sampled(w1, Real(0), T_horizon, steps, 2);
    Endpoint p2 = integrate_sampled(w2, Real(0), T_horizon, steps, 2);
    return p1.psi / p2.psi;
}

namespace {

Real lambda0_from_samples(const std::vector<Real>& w2, const Real& T, long steps) {
    auto endpoint = [&](const Real& lam) { return integrate_sampled(w2, lam, T, steps, 2).psi; };

    Real scale = 8 * exp(-T);
    Real lo = scale / 10, hi = scale * 10;
    Real flo = endpoint(lo), fhi = endpoint(hi);
    if ((flo > 0) == (fhi > 0)) {
        lo = scale / 100;
        hi = scale * 100;
        flo = endpoint(lo);
        fhi = endpoint(hi);
        if ((flo > 0) == (fhi > 0))
            throw SolverError("lambda0_shooting: no sign change in the widened lambda bracket");
    }
    const Real tol = scale * Real("1e-8");
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        Real fm = endpoint(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return (lo + hi) / 2;
}

}  // namespace

Real lambda0_shooting(const Real& T_horizon, long steps) {
    check_ivp_args(T_horizon, steps);
    std::vector<Real> w2 = sample_fluctuation(T_horizon, steps);
    return lambda0_from_samples(w2, T_horizon, steps);
}

Real lambda0_green(const Real& T_horizon) {
    if (!(T_horizon >= 10))
        throw InvalidArgument("lambda0_green: needs T_horizon >= 10");
    const Real s = T_horizon / 2;
    // psi2_0 expressed exactly in the zero-mode pair:
    // psi2_0(tau) = [sech(s) y2(tau) + y2(s) y1(tau)] / 2
    const Real c1 = y2(s) / 2, c2 = (1 / cosh(s)) / 2;
    auto psi0 = [&](const Real& t) { return c1 / cosh(t) + c2 * y2(t); };

    // Simpson quadrature of int y1(tau) psi2_0(tau) dtau over [-T/2, T/2]
    const long n = 1 << 14;
    const Real h = T_horizon / n;
    Real acc = 0;
    for (long i = 0; i <= n; ++i) {
        Real t = -s + i * h;
        Real f = psi0(t) / cosh(t);
        int weight = (i == 0 || i == n) ? 1 : (i % 2 == 1 ? 4 : 2);
        acc += weight * f;
    }
    acc *= h / 3;

    // 0 = psi2_0(T/2) - lambda0 int G(T/2,tau') psi2_0(tau') dtau' with
    // G(T/2, tau') = -W^{-1} y1(tau') y2(T/2) and Wronskian W = -2
    Real integral = y2(s) / 2 * acc;
    return psi2_endpoint_closed_form(T_horizon) / integral;
}

Real kappa(const Real& T_horizon, long steps) {
    return det_ratio_result(T_horizon, steps).kappa;
}

DetRatioResult det_ratio_result(const Real& T_horizon, long steps) {
    check_ivp_args(T_horizon, steps);
    std::vector<Real> w1(static_cast<size_t>(2 * steps + 1), Real(1));
    std::vector<Real> w2 = sample_fluctuation(T_horizon, steps);

    DetRatioResult out;
    out.T_horizon = T_horizon;
    out.psi1_end = integrate_sampled(w1, Real(0), T_horizon, steps, 2).psi;
    out.psi2_end = integrate_sampled(w2, Real(0), T_horizon, steps, 2).psi;
    out.ratio = out.psi1_end / out.psi2_end;
    out.lambda0 = lambda0_from_samples(w2, T_horizon, steps);
    out.kappa = sqrt(out.lambda0 * out.ratio);
    return out;
}

Real wronskian(const Real& tau) {
    Real ch = cosh(tau), sh = sinh(tau);
    Real sech = 1 / ch, th = sh / ch;
    Real y1 = sech, dy1 = -sech * th;
    Real y2v = sh + tau * sech;
    Real dy2 = ch + sech - tau * sech * th;
    return dy1 * y2v - y1 * dy2;
}

Real psi2_endpoint_closed_form(const Real& T_horizon) {
    Real s = T_horizon / 2;
    Real sech = 1 / cosh(s);
    return tanh(s) + s * sech * sech;
}

}  // namespace qpend
