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

#include "qpend/series.hpp"

#include <algorithm>

namespace qpend {

namespace {

void sort_descending(std::vector<RatioSample>& samples) {
    std::sort(samples.begin(), samples.end(),
              [](const RatioSample& a, const RatioSample& b) { return a.g > b.g; });
}

void validate_samples(const std::vector<RatioSample>& samples, int m) {
    if (m < 1)
        throw InvalidArgument("extract_coefficients: order must be >= 1");
    if (static_cast<long>(samples.size()) < m + 2)
        throw InvalidArgument("extract_coefficients: need at least m + 2 samples");
    for (const auto& s : samples)
        if (!(s.g > 0))
            throw InvalidArgument("extract_coefficients: sample g must be positive");
    for (size_t i = 1; i < samples.size(); ++i)
        if (samples[i].g == samples[i - 1].g)
            throw InvalidArgument("extract_coefficients: sample g values must be distinct");
}

// Polynomial extrapolation to g = 0 (Neville), eliminating g^1..g^depth.
// Returns the smallest-g tableau entry; *spread gets the distance to its
// neighbor, the usual convergence proxy of the final column.
Real neville_at_zero(const std::vector<Real>& g, const std::vector<Real>& v, int depth, Real* spread) {
    std::vector<Real> col = v;
    for (int j = 1; j <= depth; ++j) {
        for (size_t i = 0; i + static_cast<size_t>(j) < col.size(); ++i)
            col[i] = (g[i] * col[i + 1] - g[i + static_cast<size_t>(j)] * col[i]) /
                     (g[i] - g[i + static_cast<size_t>(j)]);
        col.pop_back();
    }
    if (spread)
        *spread = col.size() > 1 ? abs(col[col.size() - 1] - col[col.size() - 2]) : Real(0);
    return col.back();
}

// One full elimination pass; linear in the sample values.
std::vector<Real> eliminate(const std::vector<Real>& g, std::vector<Real> v, int m,
                            std::vector<Real>* spreads) {
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        int depth = std::min<int>(m - 1 - k, static_cast<int>(v.size()) - 1);
        Real spread;
        Real bk = neville_at_zero(g, v, depth, &spread);
        if (spreads)
            spreads->push_back(spread);
        out.push_back(bk);
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = (v[i] - bk) / g[i];
    }
    return out;
}

}  // namespace

SeriesFit extract_coefficients(std::vector<RatioSample> samples, int m) {
    validate_samples(samples, m);
    sort_descending(samples);
    const size_t n = samples.size();

    std::vector<Real> g(n), v(n);
    for (size_t i = 0; i < n; ++i) {
        g[i] = samples[i].g;
        v[i] = samples[i].ratio;
    }

    std::vector<Real> spreads;
    std::vector<Real> primary = eliminate(g, v, m, &spreads);

    // consecutive-order comparison: m+1 when the sample count allows, m-1 otherwise
    int m_cmp = (static_cast<long>(n) >= m + 3) ? m + 1 : m - 1;
    std::vector<Real> comparison;
    if (m_cmp >= 1)
        comparison = eliminate(g, v, m_cmp, nullptr);

    // the stage map is linear in the samples, so per-sample weights come from
    // unit-vector passes
    std::vector<Real> propagated(static_cast<size_t>(m), Real(0));
    for (size_t i = 0; i < n; ++i) {
        Real eps_i = abs(samples[i].ratio) * pow10(-samples[i].achieved_digits);
        if (eps_i == 0)
            continue;
        std::vector<Real> unit(n, Real(0));
        unit[i] = 1;
        std::vector<Real> w = eliminate(g, unit, m, nullptr);
        for (int k = 0; k < m; ++k)
            propagated[static_cast<size_t>(k)] += abs(w[static_cast<size_t>(k)]) * eps_i;
    }

    SeriesFit fit;
    fit.order = m;
    fit.coefficients.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        CoefficientEstimate c;
        c.value = primary[static_cast<size_t>(k)];
        Real order_diff = k < static_cast<int>(comparison.size())
                              ? abs(c.value - comparison[static_cast<size_t>(k)])
                              : spreads[static_cast<size_t>(k)];
        c.uncertainty = order_diff + propagated[static_cast<size_t>(k)];
        c.determined = c.uncertainty < abs(c.value);
        fit.coefficients.push_back(std::move(c));
    }
    return fit;
}

std::vector<Real> vandermonde_coefficients(std::vector<RatioSample> samples, int m) {
    validate_samples(samples, m);
    sort_descending(samples);
    // square system on the m smallest-g samples
    std::vector<RatioSample> tail(samples.end() - m, samples.end());

    const size_t dim = static_cast<size_t>(m);
    std::vector<std::vector<Real>> a(dim, std::vector<Real>(dim + 1));
    for (size_t i = 0; i < dim; ++i) {
        Real p = 1;
        for (size_t k = 0; k < dim; ++k) {
            a[i][k] = p;
            p *= tail[i].g;
        }
        a[i][dim] = tail[i].ratio;
    }
    // Gaussian elimination with partial pivoting
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < dim; ++r)
            if (abs(a[r][col]) > abs(a[piv][col]))
                piv = r;
        std::swap(a[col], a[piv]);
        if (a[col][col] == 0)
            throw SolverError("vandermonde_coefficients: singular system");
        for (size_t r = col + 1; r < dim; ++r) {
            Real f = a[r][col] / a[col][col];
            for (size_t c = col; c <= dim; ++c)
                a[r][c] -= f * a[col][c];
        }
    }
    std::vector<Real> b(dim);
    for (size_t r = dim; r-- > 0;) {
        Real s = a[r][dim];
        for (size_t c = r + 1; c < dim; ++c)
            s -= a[r][c] * b[c];
        b[r] = s / a[r][r];
    }
    return b;
}

std::vector<NormalizedRow> normalize_to_integers(const SeriesFit& fit) {
    std::vector<NormalizedRow> rows;
    rows.reserve(fit.coefficients.size());
    const Real p = pi();
    Real scale = 1;  // 2^{5k} / pi^{2k}
    for (int k = 0; k < fit.order; ++k) {
        const CoefficientEstimate& c = fit.coefficients[static_cast<size_t>(k)];
        NormalizedRow row;
        row.k = k;
        row.normalized = c.value * scale;
        Real nearest = round(row.normalized);
        std::string digits = nearest.str(0, std::ios_base::fixed);
        if (auto dot = digits.find('.'); dot != std::string::npos)
            digits.erase(dot);
        row.nearest = BigInt(digits.empty() || digits == "-" ? "0" : digits);
        row.residual = row.normalized - nearest;
        row.uncertainty = c.uncertainty * scale;
        row.integer_consistent = abs(row.residual) < row.uncertainty;
        row.determined = c.determined;
        rows.push_back(std::move(row));
        scale *= 32 / (p * p);
    }
    return rows;
}

GrowthFit growth_fit(const std::vector<Real>& values, int k_first) {
    // usable region: k >= 3 only
    std::vector<std::pair<int, Real>> usable;
    for (size_t i = 0; i < values.size(); ++i) {
        int k = k_first + static_cast<int>(i);
        if (k >= 3)
            usable.emplace_back(k, values[i]);
    }
    if (usable.size() < 4)
        throw InvalidArgument("growth_fit: need at least four coefficients beyond k = 2");
    // fit the asymptotic tail: the last four
    std::vector<std::pair<int, Real>> window(usable.end() - 4, usable.end());

    int sign = window.front().second > 0 ? 1 : -1;
    for (const auto& [k, b] : window) {
        if (b == 0 || (b > 0 ? 1 : -1) != sign)
            throw SolverError("growth_fit: sign change among fitted coefficients; model invalid");
    }

    std::vector<Real> ys;
    Real kbar = 0, ybar = 0;
    for (const auto& [k, b] : window) {
        Real fact = 1;
        for (int i = 2; i <= k; ++i)
            fact *= i;
        Real y = log(abs(b) / fact);
        ys.push_back(y);
        kbar += k;
        ybar += y;
    }
    kbar /= static_cast<int>(window.size());
    ybar /= static_cast<int>(window.size());
    Real num = 0, den = 0;
    for (size_t i = 0; i < window.size(); ++i) {
        Real dk = window[i].first - kbar;
        num += dk * (ys[i] - ybar);
        den += dk * dk;
    }
    Real slope = num / den;
    Real intercept = ybar - slope * kbar;

    GrowthFit out;
    out.B = exp(slope);
    out.A = sign * exp(intercept);
    out.k_min_used = window.front().first;
    out.k_max_used = window.back().first;
    return out;
}

}  // namespace qpend
