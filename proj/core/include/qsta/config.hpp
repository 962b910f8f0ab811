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

#ifndef QSTA_CONFIG_HPP
#define QSTA_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qsta/bench.hpp"
#include "qsta/propagator.hpp"

namespace qsta {

// Run configuration with device defaults. Frequencies are accepted in Hz
// and converted to angular units internally.
struct RunConfig {
    std::optional<std::string> gate_name;  // named gate, or explicit triple:
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<double> gamma;

    double omega_a_hz = 2e6;
    double duration_t_s = 0.5e-6;
    int n_steps = 10000;

    bool noise_enabled = true;
    double t1_e_s = 29e-6;
    double t1_f_s = 9e-6;
    double t2_ge_s = 5.9e-6;
    double t2_ef_s = 5.8e-6;

    std::string scheme = "sta";
    std::vector<double> alphas;
    double alpha = 0.0;
    int family_dim = 4;
    int budget = 500;
    int samples = 1000;            // pulse-export grid
    int trajectory_points = 200;
    bool gate_based_prep = false;  // tomography preparation path
    std::string output;

    double omega_a_rad() const;
    GateSpec gate() const;  // throws ConfigError when no gate is specified
    NoiseModel noise() const;
    Scheme scheme_enum() const;
    SweepOptions sweep_options() const;
};

// Parse a JSON config file; unknown keys are rejected, defaults fill the
// rest. Throws ConfigError naming the offending key.
RunConfig load_config(const std::string& path);
RunConfig load_config_text(const std::string& json_text);

}  // namespace qsta

#endif
