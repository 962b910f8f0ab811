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

#include "qsta/bench.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "qsta/errors.hpp"
#include "qsta/holonomy.hpp"
#include "qsta/linalg.hpp"
#include "qsta/tomography.hpp"

namespace qsta {

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::StaBaseline: return "sta";
        case Scheme::Nhqc: return "nhqc";
        case Scheme::StaOptimized: return "sta-optimized";
    }
    return "?";
}

namespace {

ScheduleVariant build_schedule(Scheme scheme, const GateSpec& gate,
                               const SweepOptions& opts) {
    switch (scheme) {
        case Scheme::StaBaseline:
            return StaSchedule::for_gate(gate, opts.omega_a, opts.duration_t);
        case Scheme::Nhqc:
            return NhqcSchedule::for_gate(gate, opts.omega_a, opts.duration_t);
        case Scheme::StaOptimized:
            return OptimizedStaSchedule::from(
                StaSchedule::for_gate(gate, opts.omega_a, opts.duration_t),
                opts.family_params);
    }
    throw InvalidInput("unknown scheme");
}

double point_fidelity(Scheme scheme, const GateSpec& gate, double alpha,
                      const NoiseModel& noise, const SweepOptions& opts) {
    ErrorModel err;
    err.alpha_rabi = alpha;
    err.scale_counterdiabatic = opts.alpha_scales_counterdiabatic;
    const ScheduleVariant schedule = build_schedule(scheme, gate, opts);
    const Eigen::Matrix2cd target = holonomy_matrix(gate);
    if (noise.enabled) {
        const ChiMatrix chi = process_chi(
            lindblad_channel(schedule, HamiltonianKind::Sta, err, noise, opts.n_steps));
        return process_fidelity(chi, target);
    }
    const UnitaryResult u =
        evolve_unitary(schedule, HamiltonianKind::Sta, err, opts.n_steps);
    const ExtractedGate g = extract_qubit_gate(u.final_unitary, target);
    if (!g.unitarized) {
        // High leakage: score the projected block against the target anyway.
        const Complex tr = (target.adjoint() * g.qubit_unitary).trace();
        return (std::norm(tr) + 2.0) / 6.0;
    }
    return average_gate_fidelity(g.qubit_unitary, target);
}

}  // namespace

SweepResult sweep_alpha(Scheme scheme, const GateSpec& gate,
                        const std::vector<double>& alphas, const NoiseModel& noise,
                        const SweepOptions& opts) {
    for (double a : alphas) {
        if (!(a > -0.5 && a < 0.5)) {
            throw InvalidInput("sweep_alpha: alpha outside (-0.5, 0.5)");
        }
    }
    SweepResult r;
    r.scheme = scheme;
    r.gate = gate;
    r.alphas = alphas;
    r.noise_enabled = noise.enabled;
    r.fidelities.resize(alphas.size());
    r.point_errors.resize(alphas.size());

    std::vector<std::future<double>> jobs;
    jobs.reserve(alphas.size());
    for (double a : alphas) {
        jobs.push_back(std::async(std::launch::async, point_fidelity, scheme, gate,
                                  a, noise, opts));
    }
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        try {
            r.fidelities[k] = jobs[k].get();
        } catch (const std::exception& ex) {
            r.fidelities[k] = std::numeric_limits<double>::quiet_NaN();
            r.point_errors[k] = ex.what();
        }
    }
    return r;
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
    os << "scheme,gate,alpha,fidelity,noise_enabled\n";
    os.precision(10);
    for (std::size_t k = 0; k < r.alphas.size(); ++k) {
        os << to_string(r.scheme) << ",(" << r.gate.theta << ';' << r.gate.phi_rel
           << ';' << r.gate.gamma << ")," << r.alphas[k] << ',' << r.fidelities[k]
           << ',' << (r.noise_enabled ? 1 : 0) << '\n';
    }
}

namespace {

// Deterministic Nelder-Mead with standard coefficients. One restart from the
// best vertex with halved initial steps when the simplex collapses before
// the budget is spent.
struct NelderMead {
    std::function<double(const std::vector<double>&)> f;
    int budget = 0;
    int evaluations = 0;
    std::vector<OptimizationHistoryEntry>* history = nullptr;

    double eval(const std::vector<double>& x) {
        const double v = f(x);
        ++evaluations;
        if (history != nullptr) {
            history->push_back({evaluations, v, x});
        }
        return v;
    }

    std::pair<std::vector<double>, double> minimize(const std::vector<double>& x0,
                                                    double step) {
        const std::size_t dim = x0.size();
        std::vector<std::vector<double>> xs(dim + 1, x0);
        std::vector<double> fs(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) xs[i + 1][i] += step;
        for (std::size_t i = 0; i <= dim; ++i) fs[i] = eval(xs[i]);

        auto order = [&] {
            std::vector<std::size_t> idx(dim + 1);
            for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(),
                      [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
            std::vector<std::vector<double>> xs2;
            std::vector<double> fs2;
            for (auto i : idx) {
                xs2.push_back(xs[i]);
                fs2.push_back(fs[i]);
            }
            xs.swap(xs2);
            fs.swap(fs2);
        };

        while (evaluations < budget) {
            order();
            if (std::fabs(fs[dim] - fs[0]) < 1e-14) break;
            std::vector<double> centroid(dim, 0.0);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) centroid[j] += xs[i][j] / dim;
            auto blend = [&](double coef) {
                std::vector<double> p(dim);
                for (std::size_t j = 0; j < dim; ++j)
                    p[j] = centroid[j] + coef * (xs[dim][j] - centroid[j]);
                return p;
            };
            const std::vector<double> xr = blend(-1.0);
            const double fr = eval(xr);
            if (fr < fs[0]) {
                const std::vector<double> xe = blend(-2.0);
                const double fe = eval(xe);
                if (fe < fr) {
                    xs[dim] = xe;
                    fs[dim] = fe;
                } else {
                    xs[dim] = xr;
                    fs[dim] = fr;
                }
            } else if (fr < fs[dim - 1]) {
                xs[dim] = xr;
                fs[dim] = fr;
            } else {
                const bool outside = fr < fs[dim];
                const std::vector<double> xc = blend(outside ? -0.5 : 0.5);
                const double fc = eval(xc);
                if (fc < std::min(fr, fs[dim])) {
                    xs[dim] = xc;
                    fs[dim] = fc;
                } else {
                    for (std::size_t i = 1; i <= dim; ++i) {
                        for (std::size_t j = 0; j < dim; ++j)
                            xs[i][j] = xs[0][j] + 0.5 * (xs[i][j] - xs[0][j]);
                        fs[i] = eval(xs[i]);
                        if (evaluations >= budget) break;
                    }
                }
            }
        }
        order();
        return {xs[0], fs[0]};
    }
};

}  // namespace

OptimizationOutcome optimize_schedule(const GateSpec& gate,
                                      const std::vector<double>& alpha_grid,
                                      int family_dim, int budget,
                                      const SweepOptions& opts) {
    if (family_dim < 1 || family_dim > 8) {
        throw InvalidInput("optimize_schedule: family_dim must be in [1, 8]");
    }
    if (budget < 100) {
        throw InvalidInput("optimize_schedule: budget must be >= 100 evaluations");
    }
    for (double a : alpha_grid) {
        if (!(a > -0.5 && a < 0.5)) {
            throw InvalidInput("optimize_schedule: alpha outside (-0.5, 0.5)");
        }
    }
    const StaSchedule base =
        StaSchedule::for_gate(gate, opts.omega_a, opts.duration_t);
    const Eigen::Matrix2cd target = holonomy_matrix(gate);

    auto objective = [&](const std::vector<double>& coeffs) {
        const OptimizedStaSchedule sched = OptimizedStaSchedule::from(base, coeffs);
        // Keep the mixing angle inside its validity window [0, pi/2]:
        // outside it the recomputed Rabi amplitude would turn negative.
        const double half = base.duration_t / 2.0;
        double violation = 0.0;
        for (int k = 0; k <= 64; ++k) {
            const double phi = sched.mixing_angle_local(half * k / 64.0);
            violation += std::max(0.0, -phi) +
                         std::max(0.0, phi - 3.14159265358979323846 / 2.0);
        }
        if (violation > 0.0) return 1.0 + violation;
        double infid = 0.0;
        for (double a : alpha_grid) {
            ErrorModel err;
            err.alpha_rabi = a;
            err.scale_counterdiabatic = opts.alpha_scales_counterdiabatic;
            const UnitaryResult u = evolve_unitary(ScheduleVariant(sched),
                                                   HamiltonianKind::Sta, err,
                                                   opts.n_steps);
            const ExtractedGate gq = extract_qubit_gate(u.final_unitary, target);
            const Complex tr = (target.adjoint() * gq.qubit_unitary).trace();
            infid += 1.0 - (std::norm(tr) + 2.0) / 6.0;
        }
        return infid / static_cast<double>(alpha_grid.size());
    };

    OptimizationOutcome out;
    NelderMead nm;
    nm.f = objective;
    nm.budget = budget;
    nm.history = &out.history;

    const std::vector<double> x0(family_dim, 0.0);
    out.objective_before = nm.eval(x0);

    auto [x1, f1] = nm.minimize(x0, 0.05);
    std::vector<double> best_x = x1;
    double best_f = f1;
    if (nm.evaluations < nm.budget) {
        auto [x2, f2] = nm.minimize(best_x, 0.025);
        if (f2 < best_f) {
            best_x = x2;
            best_f = f2;
        }
    }
    if (best_f <= out.objective_before) {
        out.params = best_x;
        out.objective_after = best_f;
    } else {
        out.params = x0;
        out.objective_after = out.objective_before;
    }
    out.evaluations = nm.evaluations;
    return out;
}

void write_optimization_log(std::ostream& os, const OptimizationOutcome& o) {
    for (const auto& h : o.history) {
        nlohmann::json j;
        j["evaluation"] = h.evaluation;
        j["objective"] = h.objective;
        j["params"] = h.params;
        os << j.dump() << '\n';
    }
}

}  // namespace qsta
