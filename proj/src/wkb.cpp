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

#include "qpend/wkb.hpp"

namespace qpend {

Real delta_wkb(const Real& g) {
    if (!(g > 0))
        throw InvalidArgument("delta_wkb: g must be positive");
    Real p = pi();
    return 8 / sqrt(p * p * p * g) * exp(-2 / (p * p * g));
}

Real wkb_energy(const Real& g, const Real& theta) {
    if (!(g > 0))
        throw InvalidArgument("wkb_energy: g must be positive");
    return Real(1) / 2 - cos(theta) / 2 * delta_wkb(g);
}

WkbPrediction wkb_predict(const ModelSpec& model) {
    WkbPrediction out;
    out.g = model.g;
    out.K = model.K;
    out.S0 = instanton_action(model.g);
    out.kappa = kKappa;
    out.delta_wkb = delta_wkb(model.g);
    out.energies.reserve(static_cast<size_t>(model.K));
    Real half = Real(1) / 2;
    for (int j = 0; j < model.K; ++j) {
        Real theta = 2 * pi() * j / model.K;
        out.energies.emplace_back(theta, half - cos(theta) / 2 * out.delta_wkb);
    }
    return out;
}

long delta_wkb_exponent(const Real& g) {
    PrecisionScope scope(30);
    Real gg(g);
    Real p = pi();
    Real log10_delta = (log(Real(8)) - log(p * p * p * gg) / 2 - 2 / (p * p * gg)) / log(Real(10));
    return static_cast<long>(floor(log10_delta));
}

InstantonCountTable instanton_count_table(int n_max, int K) {
    if (n_max < 0)
        throw InvalidArgument("instanton_count_table: n_max must be >= 0");
    if (K < 1)
        throw InvalidArgument("instanton_count_table: K must be >= 1");
    InstantonCountTable table;
    table.K = K;
    table.n_max = n_max;
    table.rows.assign(static_cast<size_t>(n_max) + 1, std::vector<BigInt>(static_cast<size_t>(K)));
    table.rows[0][0] = 1;  // c_{0,k} = delta_{0,k}
    for (int n = 1; n <= n_max; ++n) {
        auto& row = table.rows[static_cast<size_t>(n)];
        const auto& prev = table.rows[static_cast<size_t>(n) - 1];
        for (int k = 0; k < K; ++k)
            row[static_cast<size_t>(k)] = prev[static_cast<size_t>((k - 1 + K) % K)] +
                                          prev[static_cast<size_t>((k + 1) % K)];
    }
    return table;
}

BigInt instanton_count(int n, int k, int K) {
    if (n < 0 || k < 0 || K < 1 || k >= K)
        throw InvalidArgument("instanton_count: need n >= 0 and 0 <= k < K");
    return instanton_count_table(n, K).rows[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

BigInt instanton_count_closed(int n, int k, int K) {
    if (n < 0 || k < 0 || K < 1 || k >= K)
        throw InvalidArgument("instanton_count_closed: need n >= 0 and 0 <= k < K");
    // working precision must cover 2^n plus comfortable slack
    unsigned digits = 40 + static_cast<unsigned>(n * 0.302) + 10;
    PrecisionScope scope(digits);
    Real sum = 0;
    Real two_pi = 2 * pi();
    for (int j = 0; j < K; ++j) {
        Real lambda = 2 * cos(two_pi * j / K);
        sum += cos(two_pi * j * k / K) * pow(lambda, n);
    }
    sum /= K;
    Real rounded = round(sum);
    if (abs(sum - rounded) > Real("1e-10"))
        throw InternalError("instanton_count_closed: value is not integral; eigendecomposition inconsistent");
    std::string digits_str = rounded.str(0, std::ios_base::fixed);
    if (auto dot = digits_str.find('.'); dot != std::string::npos)
        digits_str.erase(dot);
    if (digits_str.empty() || digits_str == "-")
        digits_str = "0";
    return BigInt(digits_str);
}

Real minima_amplitude(int K) {
    if (K < 1)
        throw InvalidArgument("minima_amplitude: K must be >= 1");
    return 1 / sqrt(K * sqrt(pi()));
}

Real transition_amplitude(int k, int K, const Real& g, const Real& T_horizon) {
    if (k < 0 || K < 1 || k >= K)
        throw InvalidArgument("transition_amplitude: need 0 <= k < K");
    if (!(g > 0) || !(T_horizon > 0))
        throw InvalidArgument("transition_amplitude: g and T_horizon must be positive");
    Real p = pi();
    Real two_pi = 2 * p;
    Real density = 4 / sqrt(p * p * p * g) * exp(-2 / (p * p * g));
    Real re = 0, im = 0;
    for (int j = 0; j < K; ++j) {
        Real phase = two_pi * j * k / K;
        Real w = exp(cos(two_pi * j / K) * density * T_horizon);
        re += cos(phase) * w;
        im += sin(phase) * w;
    }
    Real prefactor = exp(-T_horizon / 2) / (K * sqrt(p));
    re *= prefactor;
    im *= prefactor;
    // imaginary parts cancel pairwise between j and K-j
    long target = static_cast<long>(Real::default_precision());
    if (abs(im) > (abs(re) + 1) * pow10(-(target - 3)))
        throw InternalError("transition_amplitude: imaginary part failed to cancel");
    return re;
}

}  // namespace qpend
