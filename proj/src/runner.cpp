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

#include "qpend/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpend/gelfand_yaglom.hpp"
#include "qpend/perturbation.hpp"
#include "qpend/series.hpp"
#include "qpend/version.hpp"
#include "qpend/wkb.hpp"

namespace qpend {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------- utilities

class OutputFile {
public:
    explicit OutputFile(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw IoError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    void finish() {
        stream().flush();
        if (file_.is_open() && !file_.good())
            throw IoError("short write to output file");
    }

private:
    std::ofstream file_;
};

void run_tasks(std::vector<std::function<void()>> tasks, int workers) {
    if (workers <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks)
            t();
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<std::thread> pool;
    size_t n_threads = std::min<size_t>(static_cast<size_t>(workers), tasks.size());
    for (size_t w = 0; w < n_threads; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                try {
                    tasks[i]();
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

struct StderrTimer {
    explicit StderrTimer(std::string label)
        : label_(std::move(label)), start_(std::chrono::steady_clock::now()) {}
    ~StderrTimer() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        std::cerr << "qpend: " << label_ << " took " << ms << " ms\n";
    }
    std::string label_;
    std::chrono::steady_clock::time_point start_;
};

Real auto_eps(const Real& g, unsigned target_digits, const std::string& eps_override) {
    if (!eps_override.empty())
        return parse_real(eps_override);
    return delta_wkb(g) * pow10(-static_cast<long>(target_digits));
}

}  // namespace

PrecisionPolicy band_precision(const Real& g, unsigned target_digits) {
    long exponent = delta_wkb_exponent(g);
    unsigned scale = exponent < 0 ? static_cast<unsigned>(-exponent) : 0u;
    return PrecisionPolicy::for_target_with_scale(target_digits, scale);
}

EigenResult solve_sector_cached(const ModelSpec& model, int j, int m, const Real& eps,
                                const PrecisionPolicy& precision, const ConvergeOptions& options,
                                const ResultCache* cache) {
    CacheKey key;
    if (cache) {
        key.command = "sector";
        key.params = {
            {"g", to_decimal(model.g)},
            {"K", std::to_string(model.K)},
            {"j", std::to_string(j)},
            {"m", std::to_string(m)},
            {"eps", to_decimal(eps)},
            {"working_digits", std::to_string(precision.working_digits)},
            {"initial_cutoff", std::to_string(options.initial_cutoff)},
            {"hard_cap", std::to_string(options.hard_cap)},
        };
        if (auto hit = cache->get(key)) {
            PrecisionScope scope(precision);
            EigenResult r;
            for (const auto& e : (*hit)["energies"])
                r.energies.push_back(parse_real(e.get<std::string>()));
            r.N_used = (*hit)["N_used"].get<long>();
            r.achieved_tolerance = parse_real((*hit)["achieved_tolerance"].get<std::string>());
            r.iterations = (*hit)["iterations"].get<long>();
            return r;
        }
    }
    EigenResult r = converge_cutoff(SectorSpec(model, j), m, eps, precision, nullptr, options);
    if (cache) {
        json payload;
        payload["energies"] = json::array();
        for (const Real& e : r.energies)
            payload["energies"].push_back(to_decimal(e));
        payload["N_used"] = r.N_used;
        payload["achieved_tolerance"] = to_decimal(r.achieved_tolerance);
        payload["iterations"] = r.iterations;
        cache->put(key, payload);
    }
    return r;
}

BandSpectrum band_cached(const ModelSpec& model, const Real& eps, const PrecisionPolicy& precision,
                         int workers, const ConvergeOptions& options, const ResultCache* cache) {
    BandOptions opts;
    opts.workers = workers;
    opts.converge = options;
    if (cache) {
        opts.lookup = [&, cache](int j, EigenResult& out) {
            // lookup and store share solve_sector_cached's key through a probe:
            // ask the cache first, compute nothing here
            CacheKey key;
            key.command = "sector";
            key.params = {
                {"g", to_decimal(model.g)},
                {"K", std::to_string(model.K)},
                {"j", std::to_string(j)},
                {"m", "1"},
                {"eps", to_decimal(eps)},
                {"working_digits", std::to_string(precision.working_digits)},
                {"initial_cutoff", std::to_string(options.initial_cutoff)},
                {"hard_cap", std::to_string(options.hard_cap)},
            };
            auto hit = cache->get(key);
            if (!hit)
                return false;
            for (const auto& e : (*hit)["energies"])
                out.energies.push_back(parse_real(e.get<std::string>()));
            out.N_used = (*hit)["N_used"].get<long>();
            out.achieved_tolerance = parse_real((*hit)["achieved_tolerance"].get<std::string>());
            out.iterations = (*hit)["iterations"].get<long>();
            return true;
        };
        opts.store = [&, cache](int j, const EigenResult& r) {
            CacheKey key;
            key.command = "sector";
            key.params = {
                {"g", to_decimal(model.g)},
                {"K", std::to_string(model.K)},
                {"j", std::to_string(j)},
                {"m", "1"},
                {"eps", to_decimal(eps)},
                {"working_digits", std::to_string(precision.working_digits)},
                {"initial_cutoff", std::to_string(options.initial_cutoff)},
                {"hard_cap", std::to_string(options.hard_cap)},
            };
            json payload;
            payload["energies"] = json::array();
            for (const Real& e : r.energies)
                payload["energies"].push_back(to_decimal(e));
            payload["N_used"] = r.N_used;
            payload["achieved_tolerance"] = to_decimal(r.achieved_tolerance);
            payload["iterations"] = r.iterations;
            cache->put(key, payload);
        };
    }
    return band(model, eps, precision, opts);
}

namespace {

// ------------------------------------------------------------- subcommands

ConvergeOptions converge_options(const RunConfig& c) {
    ConvergeOptions o;
    o.initial_cutoff = c.initial_cutoff;
    o.hard_cap = c.hard_cap;
    return o;
}

std::unique_ptr<ResultCache> open_cache(const RunConfig& c) {
    if (c.cache_dir.empty())
        return nullptr;
    return std::make_unique<ResultCache>(c.cache_dir);
}

std::string require_one_g(const RunConfig& c) {
    if (c.g_values.size() != 1)
        throw InvalidArgument("this command needs exactly one --g");
    return c.g_values.front();
}

json band_to_json(const BandSpectrum& s) {
    json out;
    out["schema_version"] = kSchemaVersion;
    out["model"] = {{"g", to_decimal(s.model.g)}, {"K", s.model.K}};
    out["precision"] = {{"target_digits", s.precision.target_digits},
                        {"working_digits", s.precision.working_digits}};
    out["eps"] = to_decimal(s.eps);
    out["entries"] = json::array();
    for (const BandEntry& e : s.entries)
        out["entries"].push_back({{"j", e.j},
                                  {"theta", to_decimal(e.theta)},
                                  {"energy", to_decimal(e.energy)},
                                  {"N_used", e.N_used},
                                  {"achieved_tolerance", to_decimal(e.achieved_tolerance)}});
    out["delta"] = to_decimal(s.delta);
    out["half_open_delta"] = s.half_open_delta;
    out["ebar"] = to_decimal(s.ebar);
    if (s.e_quarter)
        out["ebar_quarter"] = to_decimal(*s.e_quarter);
    out["cosine_fit_residual"] = to_decimal(cosine_fit_residual(s), 6);
    out["theta_table"] = json::array();
    for (const ThetaRow& r : theta_spectrum_table(s))
        out["theta_table"].push_back({{"j", r.j},
                                      {"theta", to_decimal(r.theta)},
                                      {"energy", to_decimal(r.energy)},
                                      {"degeneracy", r.degeneracy}});
    return out;
}

void emit_psi_samples(const RunConfig& c, const ModelSpec& model, const Real& eps,
                      const PrecisionPolicy& precision, const BandSpectrum& spectrum) {
    PrecisionScope scope(precision);
    if (c.psi_sector < 0 || c.psi_sector >= model.K)
        throw InvalidArgument("psi-sector out of range");
    const BandEntry& entry = spectrum.entries[static_cast<size_t>(c.psi_sector)];
    // final ladder rung was twice the certified cutoff
    SectorMatrix matrix(SectorSpec(model, c.psi_sector), 2 * entry.N_used, precision);
    std::vector<Real> coeffs = eigenvector(matrix, entry.energy, eps);

    OutputFile out(c.psi_out);
    out.stream() << "x,psi_re,psi_im\n";
    Real L = model.circle_length();
    for (long i = 0; i < c.psi_points; ++i) {
        Real x = L * i / c.psi_points;
        Complex v = wavefunction(model, c.psi_sector, coeffs, x);
        out.stream() << to_decimal(x, precision.target_digits) << ","
                     << to_decimal(v.re, precision.target_digits) << ","
                     << to_decimal(v.im, precision.target_digits) << "\n";
    }
    out.finish();
}

void cmd_band(const RunConfig& c) {
    Real g0;
    {
        PrecisionScope parse_scope(40);
        g0 = parse_real(require_one_g(c));
    }
    PrecisionPolicy precision = band_precision(g0, c.target_digits);
    PrecisionScope scope(precision);
    ModelSpec model(parse_real(require_one_g(c)), c.K);
    Real eps = auto_eps(model.g, c.target_digits, c.eps);
    auto cache = open_cache(c);

    BandSpectrum s = band_cached(model, eps, precision, c.workers, converge_options(c), cache.get());
    OutputFile out(c.out_path);
    out.stream() << band_to_json(s).dump(1) << "\n";
    out.finish();
    if (!c.psi_out.empty())
        emit_psi_samples(c, model, eps, precision, s);
}

void cmd_wkb(const RunConfig& c) {
    PrecisionPolicy precision = PrecisionPolicy::for_target(c.target_digits);
    PrecisionScope scope(precision);
    ModelSpec model(parse_real(require_one_g(c)), c.K);
    WkbPrediction p = wkb_predict(model);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["g"] = to_decimal(p.g);
    out["K"] = p.K;
    out["S0"] = to_decimal(p.S0, c.target_digits);
    out["kappa"] = to_decimal(p.kappa);
    out["delta_wkb"] = to_decimal(p.delta_wkb, c.target_digits);
    out["energies"] = json::array();
    for (int j = 0; j < p.K; ++j)
        out["energies"].push_back({{"j", j},
                                   {"theta", to_decimal(p.energies[static_cast<size_t>(j)].first, c.target_digits)},
                                   {"energy", to_decimal(p.energies[static_cast<size_t>(j)].second, c.target_digits)}});
    OutputFile f(c.out_path);
    f.stream() << out.dump(1) << "\n";
    f.finish();
}

void cmd_counts(const RunConfig& c) {
    InstantonCountTable table = instanton_count_table(c.n_max, c.K);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["K"] = table.K;
    out["n_max"] = table.n_max;
    out["rows"] = json::array();
    for (const auto& row : table.rows) {
        json r = json::array();
        for (const BigInt& v : row)
            r.push_back(v.str());
        out["rows"].push_back(std::move(r));
    }
    OutputFile f(c.out_path);
    f.stream() << out.dump(1) << "\n";
    f.finish();
}

void cmd_detratio(const RunConfig& c) {
    PrecisionScope scope(c.gy_digits);
    Real t = parse_real(c.T_min);
    Real t_max = parse_real(c.T_max);
    Real step = parse_real(c.T_step);
    if (!(step > 0))
        throw InvalidArgument("detratio: T-step must be positive");
    OutputFile f(c.out_path);
    f.stream() << "T,lambda0_eT,kappa\n";
    for (; t <= t_max + step / 1000; t += step) {
        DetRatioResult r = det_ratio_result(t, c.gy_steps);
        f.stream() << to_decimal(t, 10) << "," << to_decimal(r.lambda0 * exp(t), 12) << ","
                   << to_decimal(r.kappa, 12) << "\n";
    }
    f.finish();
}

void cmd_perturb(const RunConfig& c) {
    PrecisionScope scope(PrecisionPolicy::for_target(c.target_digits));
    PerturbationSeries s = rs_ground_energy(c.fit_order);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["order"] = s.order();
    out["a"] = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        const PiRational& a = s.a[static_cast<size_t>(k)];
        out["a"].push_back({{"k", k},
                            {"numerator", numerator(a.coeff).str()},
                            {"denominator", denominator(a.coeff).str()},
                            {"pi_power", a.pi_power},
                            {"value", to_decimal(a.value(), c.target_digits)}});
    }
    OutputFile f(c.out_path);
    f.stream() << out.dump(1) << "\n";
    f.finish();
}

struct DeltaPoint {
    Real g;
    Real delta_num;
    Real delta_wkb_value;
    Real ratio;
    long achieved_digits;
};

// Delta needs only the two band-edge sectors. All grid points run under one
// (maximal) working precision so tasks can share worker threads.
std::vector<DeltaPoint> compute_deltas(const RunConfig& c, const std::vector<Real>& gs,
                                       const PrecisionPolicy& precision, const ResultCache* cache) {
    if (c.K % 2 != 0)
        throw InvalidArgument("band-width commands need even K");
    std::vector<DeltaPoint> points(gs.size());
    std::vector<std::function<void()>> tasks;
    std::mutex mutex;
    for (size_t i = 0; i < gs.size(); ++i) {
        tasks.push_back([&, i] {
            PrecisionScope scope(precision);
            ModelSpec model(gs[i], c.K);
            Real eps = auto_eps(model.g, c.target_digits, c.eps);
            EigenResult r0 = solve_sector_cached(model, 0, 1, eps, precision, converge_options(c), cache);
            EigenResult rh = solve_sector_cached(model, c.K / 2, 1, eps, precision, converge_options(c), cache);
            DeltaPoint p;
            p.g = gs[i];
            p.delta_num = rh.energies[0] - r0.energies[0];
            p.delta_wkb_value = delta_wkb(model.g);
            p.ratio = p.delta_num / p.delta_wkb_value;
            p.achieved_digits = static_cast<long>(c.target_digits) - 2;
            std::lock_guard<std::mutex> lock(mutex);
            points[i] = std::move(p);
        });
    }
    run_tasks(std::move(tasks), c.workers);
    return points;
}

void cmd_fig2(const RunConfig& c) {
    if (c.g_values.empty())
        throw InvalidArgument("fig2 needs at least one --g");
    PrecisionScope seed_scope(40);
    std::vector<Real> gs;
    for (const auto& s : c.g_values)
        gs.push_back(parse_real(s));
    std::sort(gs.begin(), gs.end(), std::greater<Real>());
    PrecisionPolicy precision = band_precision(gs.back(), c.target_digits);
    PrecisionScope scope(precision);
    for (auto& g : gs)
        g = Real(g);  // re-round to working precision

    auto cache = open_cache(c);
    std::vector<DeltaPoint> points = compute_deltas(c, gs, precision, cache.get());

    OutputFile f(c.out_path);
    f.stream() << "g,delta_num,delta_wkb,ratio_minus_1\n";
    for (const DeltaPoint& p : points)
        f.stream() << to_decimal(p.g, 12) << "," << to_decimal(p.delta_num, c.target_digits) << ","
                   << to_decimal(p.delta_wkb_value, c.target_digits) << ","
                   << to_decimal(p.ratio - 1, c.target_digits) << "\n";
    f.finish();
}

std::vector<RatioSample> load_ratio_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("fitseries: cannot open ratio CSV " + path);
    std::vector<RatioSample> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("g,", 0) == 0)
            continue;
        std::istringstream row(line);
        std::string g, ratio, digits;
        if (!std::getline(row, g, ',') || !std::getline(row, ratio, ','))
            throw IoError("fitseries: malformed CSV row: " + line);
        std::getline(row, digits, ',');
        RatioSample s;
        s.g = parse_real(g);
        s.ratio = parse_real(ratio);
        s.achieved_digits = digits.empty() ? 40 : std::stol(digits);
        samples.push_back(std::move(s));
    }
    return samples;
}

json fit_to_json(const SeriesFit& fit) {
    json out;
    out["order"] = fit.order;
    out["coefficients"] = json::array();
    for (int k = 0; k < fit.order; ++k) {
        const CoefficientEstimate& ce = fit.coefficients[static_cast<size_t>(k)];
        out["coefficients"].push_back({{"k", k},
                                       {"value", to_decimal(ce.value, 20)},
                                       {"uncertainty", to_decimal(ce.uncertainty, 3)},
                                       {"determined", ce.determined}});
    }
    out["normalized"] = json::array();
    for (const NormalizedRow& row : normalize_to_integers(fit))
        out["normalized"].push_back({{"k", row.k},
                                     {"value", to_decimal(row.normalized, 20)},
                                     {"nearest_integer", row.nearest.str()},
                                     {"residual", to_decimal(row.residual, 3)},
                                     {"uncertainty", to_decimal(row.uncertainty, 3)},
                                     {"integer_consistent", row.integer_consistent},
                                     {"determined", row.determined}});
    return out;
}

void cmd_fitseries(const RunConfig& c) {
    std::vector<RatioSample> samples;
    PrecisionPolicy precision = PrecisionPolicy::for_target(60);
    if (!c.ratios_csv.empty()) {
        PrecisionScope scope(precision);
        samples = load_ratio_csv(c.ratios_csv);
    } else {
        PrecisionScope seed_scope(40);
        Real g_min = parse_real(c.grid_g_min);
        if (c.grid_points < c.fit_order + 2)
            throw InvalidArgument("fitseries: grid_points must be at least order + 2");
        precision = band_precision(g_min, c.target_digits);
        PrecisionScope scope(precision);
        std::vector<Real> gs;
        Real g = Real(parse_real(c.grid_g_min)) * pow(Real(2), c.grid_points - 1);
        for (int i = 0; i < c.grid_points; ++i, g /= 2)
            gs.push_back(g);
        auto cache = open_cache(c);
        for (const DeltaPoint& p : compute_deltas(c, gs, precision, cache.get()))
            samples.push_back(RatioSample{p.g, p.ratio, p.achieved_digits});
    }

    PrecisionScope scope(precision);
    SeriesFit fit = extract_coefficients(samples, c.fit_order);
    json out;
    out["schema_version"] = kSchemaVersion;
    out["samples"] = json::array();
    for (const RatioSample& s : samples)
        out["samples"].push_back({{"g", to_decimal(s.g, 12)},
                                  {"ratio", to_decimal(s.ratio, 40)},
                                  {"achieved_digits", s.achieved_digits}});
    out["fit"] = fit_to_json(fit);

    // growth model over the determined coefficients, when enough of them
    // reach beyond k = 2
    std::vector<Real> values;
    for (const CoefficientEstimate& ce : fit.coefficients)
        values.push_back(ce.value);
    if (fit.order >= 7) {
        try {
            GrowthFit growth = growth_fit(values, 0);
            out["growth"] = {{"A", to_decimal(growth.A, 6)},
                             {"B", to_decimal(growth.B, 6)},
                             {"k_min_used", growth.k_min_used},
                             {"k_max_used", growth.k_max_used}};
        } catch (const Error& e) {
            out["growth"] = {{"skipped", e.what()}};
        }
    }
    OutputFile f(c.out_path);
    f.stream() << out.dump(1) << "\n";
    f.finish();
}

void cmd_fig1(const RunConfig& c) {
    PrecisionPolicy precision = PrecisionPolicy::for_target(c.target_digits);
    PrecisionScope scope(precision);
    ModelSpec model(parse_real(require_one_g(c)), c.K);
    Real eps = c.eps.empty() ? pow10(-static_cast<long>(c.target_digits) / 2) : parse_real(c.eps);

    OutputFile f(c.out_path);
    f.stream() << "# columns: cutoff N, then K*levels energies ordered by (level, sector)\n";
    f.stream() << "N";
    for (int lvl = 0; lvl < c.levels; ++lvl)
        for (int j = 0; j < c.K; ++j)
            f.stream() << ",E_l" << lvl << "_j" << j;
    f.stream() << "\n";

    std::vector<std::vector<Real>> prev;
    for (long N = 4; N <= c.hard_cap; N *= 2) {
        std::vector<std::vector<Real>> cur(static_cast<size_t>(c.K));
        std::vector<std::function<void()>> tasks;
        for (int j = 0; j < c.K; ++j)
            tasks.push_back([&, j] {
                PrecisionScope inner(precision);
                SectorMatrix matrix(SectorSpec(model, j), N, precision);
                cur[static_cast<size_t>(j)] =
                    lowest_eigenvalues(matrix, c.levels, eps / 16).energies;
            });
        run_tasks(std::move(tasks), c.workers);

        f.stream() << N;
        for (int lvl = 0; lvl < c.levels; ++lvl)
            for (int j = 0; j < c.K; ++j)
                f.stream() << "," << to_decimal(cur[static_cast<size_t>(j)][static_cast<size_t>(lvl)],
                                                c.target_digits);
        f.stream() << "\n";

        if (!prev.empty()) {
            Real worst = 0;
            for (int j = 0; j < c.K; ++j)
                for (int lvl = 0; lvl < c.levels; ++lvl) {
                    Real d = abs(cur[static_cast<size_t>(j)][static_cast<size_t>(lvl)] -
                                 prev[static_cast<size_t>(j)][static_cast<size_t>(lvl)]);
                    if (d > worst)
                        worst = d;
                }
            if (worst < eps)
                break;
        }
        prev = std::move(cur);
    }
    f.finish();
}

void cmd_fig3(const RunConfig& c) {
    Real g0;
    {
        PrecisionScope parse_scope(40);
        g0 = parse_real(require_one_g(c));
    }
    PrecisionPolicy precision = band_precision(g0, c.target_digits);
    PrecisionScope scope(precision);
    ModelSpec model(parse_real(require_one_g(c)), c.K);
    Real eps = auto_eps(model.g, c.target_digits, c.eps);
    auto cache = open_cache(c);
    BandSpectrum s = band_cached(model, eps, precision, c.workers, converge_options(c), cache.get());

    OutputFile f(c.out_path);
    f.stream() << "# cosine overlay: E(theta) = ebar - delta/2 * cos(theta)\n";
    f.stream() << "# ebar_mid = " << to_decimal(s.ebar, c.target_digits) << "\n";
    if (s.e_quarter)
        f.stream() << "# ebar_quarter = " << to_decimal(*s.e_quarter, c.target_digits) << "\n";
    f.stream() << "# delta = " << to_decimal(s.delta, c.target_digits) << "\n";
    f.stream() << "j,theta,E_j\n";
    for (const BandEntry& e : s.entries)
        f.stream() << e.j << "," << to_decimal(e.theta, 16) << ","
                   << to_decimal(e.energy, c.target_digits) << "\n";
    f.finish();
}

}  // namespace

void run(const RunConfig& config) {
    StderrTimer timer(config.command);
    if (config.command == "band")
        cmd_band(config);
    else if (config.command == "wkb")
        cmd_wkb(config);
    else if (config.command == "counts")
        cmd_counts(config);
    else if (config.command == "detratio")
        cmd_detratio(config);
    else if (config.command == "perturb")
        cmd_perturb(config);
    else if (config.command == "fitseries")
        cmd_fitseries(config);
    else if (config.command == "fig1")
        cmd_fig1(config);
    else if (config.command == "fig2")
        cmd_fig2(config);
    else if (config.command == "fig3")
        cmd_fig3(config);
    else
        throw InvalidArgument("unknown command: " + config.command);
}

int run_cli(int argc, const char* const* argv) {
    RunConfig config;
    CLI::App app{"High-precision band structure of the quantum pendulum"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "", "Config file (key = value, # comments); flags override");
    app.require_subcommand(1);

    app.add_option("--cache-dir", config.cache_dir, "Result cache directory")
        ->envname("QPEND_CACHE_DIR");
    app.add_option("--workers", config.workers, "Worker threads for independent (sector, g) tasks");
    app.add_option("--out", config.out_path, "Output file (default: stdout)");
    app.add_option("--target-digits", config.target_digits, "Significant digits of final answers");
    app.add_option("--eps", config.eps, "Cutoff-convergence tolerance (default: auto from delta_wkb)");
    app.add_option("--initial-cutoff", config.initial_cutoff, "First cutoff of the doubling ladder");
    app.add_option("--hard-cap", config.hard_cap, "Largest cutoff the ladder may reach");

    auto add_g = [&](CLI::App* cmd, bool multiple) {
        auto* opt = cmd->add_option("--g", config.g_values, "Coupling constant (decimal string)");
        if (!multiple)
            opt->expected(1);
        return opt;
    };
    auto add_K = [&](CLI::App* cmd) { cmd->add_option("--K", config.K, "Number of potential minima"); };

    auto* band_cmd = app.add_subcommand("band", "Band spectrum: per-sector energies, delta, ebar");
    add_g(band_cmd, false)->required();
    add_K(band_cmd);
    band_cmd->add_option("--psi-out", config.psi_out, "Also emit wavefunction samples CSV here");
    band_cmd->add_option("--psi-sector", config.psi_sector, "Sector for wavefunction samples");
    band_cmd->add_option("--psi-points", config.psi_points, "Sample count for wavefunction CSV");

    auto* wkb_cmd = app.add_subcommand("wkb", "Closed-form WKB prediction");
    add_g(wkb_cmd, false)->required();
    add_K(wkb_cmd);

    auto* counts_cmd = app.add_subcommand("counts", "Instanton counting table c_{n,k}");
    add_K(counts_cmd);
    counts_cmd->add_option("--n-max", config.n_max, "Largest instanton number");

    auto* det_cmd = app.add_subcommand("detratio", "Gel'fand-Yaglom sweep: (T, lambda0*e^T, kappa)");
    det_cmd->add_option("--T-min", config.T_min, "Smallest horizon");
    det_cmd->add_option("--T-max", config.T_max, "Largest horizon");
    det_cmd->add_option("--T-step", config.T_step, "Horizon step");
    det_cmd->add_option("--steps", config.gy_steps, "Integrator steps");
    det_cmd->add_option("--digits", config.gy_digits, "Integrator working digits");

    auto* fit_cmd = app.add_subcommand("fitseries", "Extract b_k from band-width ratios");
    fit_cmd->add_option("--ratios", config.ratios_csv, "CSV of (g, ratio, achieved_digits); omit to compute");
    fit_cmd->add_option("--order", config.fit_order, "Number of coefficients to fit");
    fit_cmd->add_option("--points", config.grid_points, "Fresh-grid sample count");
    fit_cmd->add_option("--g-min", config.grid_g_min, "Fresh-grid smallest coupling");
    add_K(fit_cmd);

    auto* perturb_cmd = app.add_subcommand("perturb", "Rayleigh-Schrodinger a_k table");
    perturb_cmd->add_option("--order", config.fit_order, "Highest order k");

    auto* fig1_cmd = app.add_subcommand("fig1", "Convergence trace CSV (N, energies)");
    add_g(fig1_cmd, false)->required();
    add_K(fig1_cmd);
    fig1_cmd->add_option("--levels", config.levels, "Energies per sector");

    auto* fig2_cmd = app.add_subcommand("fig2", "Band width vs WKB CSV over a g list");
    add_g(fig2_cmd, true)->required();
    add_K(fig2_cmd);

    auto* fig3_cmd = app.add_subcommand("fig3", "Energies vs sector CSV with cosine overlay data");
    add_g(fig3_cmd, false)->required();
    add_K(fig3_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // 0 for --help/--version, nonzero otherwise
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        run(config);
        return 0;
    } catch (const Error& e) {
        std::cerr << "qpend: error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "qpend: internal error: " << e.what() << "\n";
        return static_cast<int>(errc::internal);
    }
}

}  // namespace qpend
