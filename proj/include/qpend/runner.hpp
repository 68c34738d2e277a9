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

#ifndef QPEND_RUNNER_HPP
#define QPEND_RUNNER_HPP

#include <string>
#include <vector>

#include "qpend/cache.hpp"
#include "qpend/eigensolver.hpp"
#include "qpend/real.hpp"
#include "qpend/spectrum.hpp"

namespace qpend {

/// Everything a run needs, as parsed from the config file and command line.
/// Numeric parameters stay decimal strings until a precision scope is open,
/// so nothing is rounded through double on the way in.
struct RunConfig {
    std::string command;

    std::vector<std::string> g_values;
    int K = 4;
    unsigned target_digits = 40;
    std::string eps;  // empty = auto: delta_wkb(g) * 10^{-target_digits}

    std::string cache_dir;
    std::string out_path;  // empty = stdout
    int workers = 1;

    long initial_cutoff = 32;
    long hard_cap = 1 << 20;

    // detratio sweep
    std::string T_min = "30";
    std::string T_max = "30";
    std::string T_step = "5";
    long gy_steps = 100000;
    unsigned gy_digits = 50;

    // counts
    int n_max = 20;

    // fitseries
    std::string ratios_csv;  // input samples; empty = compute the grid fresh
    int fit_order = 6;
    int grid_points = 8;
    std::string grid_g_min = "5e-4";

    // fig1
    int levels = 4;

    // wavefunction samples
    std::string psi_out;
    int psi_sector = 0;
    long psi_points = 256;
};

/// Executes one subcommand; writes artifacts to config.out_path (stdout when
/// empty) and run metadata (timings) to stderr. Throws qpend::Error on
/// failure; exit-code mapping happens in run_cli.
void run(const RunConfig& config);

/// Full command-line entry: parses flags and the optional config file
/// (key = value lines, # comments; flags override the file), runs, and maps
/// errors to distinct nonzero exit codes.
int run_cli(int argc, const char* const* argv);

/// Per-sector ground-state solve with optional caching; the unit every
/// expensive command is built from. Cache keys carry (g, K, j, m, eps,
/// working_digits, cutoff ladder) plus the code version.
EigenResult solve_sector_cached(const ModelSpec& model, int j, int m, const Real& eps,
                                const PrecisionPolicy& precision, const ConvergeOptions& options,
                                const ResultCache* cache);

/// Band assembled through solve_sector_cached (resumable per sector).
BandSpectrum band_cached(const ModelSpec& model, const Real& eps, const PrecisionPolicy& precision,
                         int workers, const ConvergeOptions& options, const ResultCache* cache);

/// Working precision for resolving the band of the given coupling to
/// target_digits: the target, the band-width exponent, and the guard.
PrecisionPolicy band_precision(const Real& g, unsigned target_digits);

}  // namespace qpend

#endif
