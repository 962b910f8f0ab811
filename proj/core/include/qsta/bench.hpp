// Copyright 2026 The qsta authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSTA_BENCH_HPP
#define QSTA_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qsta/propagator.hpp"

namespace qsta {

enum class Scheme { StaBaseline, Nhqc, StaOptimized };

std::string to_string(Scheme s);

struct SweepOptions {
    double omega_a = 2.0 * 3.14159265358979323846 * 2e6;  // rad/s
    double duration_t = 0.5e-6;                           // seconds
    int n_steps = 10000;
    // Pulse-family coefficients, used by Scheme::StaOptimized.
    std::vector<double> family_params;
    // When false, the amplitude error leaves the counterdiabatic term alone.
    bool alpha_scales_counterdiabatic = true;
};

struct SweepResult {
    Scheme scheme = Scheme::StaBaseline;
    GateSpec gate;
    std::vector<double> alphas;
    std::vector<double> fidelities;       // NaN where a point failed
    std::vector<std::string> point_errors;  // empty string where ok
    bool noise_enabled = false;
};

// Fidelity versus control error alpha: average gate fidelity against the
// closed-form holonomy in the noiseless case, process fidelity of the
// Lindblad channel otherwise. Points are independent and run concurrently;
// a failing point records an error entry and the sweep continues.
// Requires every alpha in (-0.5, 0.5).
SweepResult sweep_alpha(Scheme scheme, const GateSpec& gate,
                        const std::vector<double>& alphas, const NoiseModel& noise,
                        const SweepOptions& opts = {});

// CSV export: scheme,gate,alpha,fidelity,noise_enabled
void write_sweep_csv(std::ostream& os, const SweepResult& r);

struct OptimizationHistoryEntry {
    int evaluation = 0;
    double objective = 0.0;
    std::vector<double> params;
};

struct OptimizationOutcome {
    std::vector<double> params;
    double objective_before = 0.0;
    double objective_after = 0.0;
    int evaluations = 0;
    std::vector<OptimizationHistoryEntry> history;
};

// Minimizes the mean noiseless infidelity over alpha_grid within the
// endpoint-preserving mixing-angle family (see OptimizedStaSchedule) by a
// deterministic Nelder-Mead simplex search. family_dim <= 8 coefficients;
// budget >= 100 objective evaluations. Best-so-far semantics: the outcome
// never regresses below the baseline.
OptimizationOutcome optimize_schedule(const GateSpec& gate,
                                      const std::vector<double>& alpha_grid,
                                      int family_dim, int budget,
                                      const SweepOptions& opts = {});

// JSON-lines log: one {"evaluation":..,"objective":..,"params":[..]} per line.
void write_optimization_log(std::ostream& os, const OptimizationOutcome& o);

}  // namespace qsta

#endif
