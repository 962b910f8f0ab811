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

#include "qsta/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include <json.hpp>

#include "qsta/errors.hpp"
#include "qsta/holonomy.hpp"

namespace qsta {

double RunConfig::omega_a_rad() const { return 2.0 * std::numbers::pi * omega_a_hz; }

GateSpec RunConfig::gate() const {
    if (gate_name.has_value()) {
        try {
            return named_gate(*gate_name);
        } catch (const NotFound& e) {
            throw ConfigError("gate", e.what());
        }
    }
    if (theta && phi && gamma) {
        try {
            return GateSpec::checked(*theta, *phi, *gamma);
        } catch (const InvalidInput& e) {
            throw ConfigError("theta/phi/gamma", e.what());
        }
    }
    throw ConfigError("gate", "no gate name or (theta, phi, gamma) triple given");
}

NoiseModel RunConfig::noise() const {
    try {
        return NoiseModel::checked(t1_e_s, t1_f_s, t2_ge_s, t2_ef_s, noise_enabled);
    } catch (const InvalidNoiseModel& e) {
        throw ConfigError("noise", e.what());
    }
}

Scheme RunConfig::scheme_enum() const {
    if (scheme == "sta") return Scheme::StaBaseline;
    if (scheme == "nhqc") return Scheme::Nhqc;
    if (scheme == "sta-optimized") return Scheme::StaOptimized;
    throw ConfigError("scheme", "expected sta | nhqc | sta-optimized");
}

SweepOptions RunConfig::sweep_options() const {
    SweepOptions o;
    o.omega_a = omega_a_rad();
    o.duration_t = duration_t_s;
    o.n_steps = n_steps;
    return o;
}

namespace {

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "gate",        "theta",      "phi",        "gamma",
        "omega_a_hz",  "duration_t_s", "n_steps",  "noise_enabled",
        "t1_e_s",      "t1_f_s",     "t2_ge_s",    "t2_ef_s",
        "scheme",      "alphas",     "alpha",      "family_dim",
        "budget",      "samples",    "trajectory_points",
        "gate_based_prep", "output"};
    return keys;
}

template <typename T>
T get_checked(const nlohmann::json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(key, e.what());
    }
}

void require_positive(double v, const std::string& key) {
    if (!(v > 0.0)) throw ConfigError(key, "must be positive");
}

RunConfig from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("<root>", "config must be a JSON object");
    for (const auto& item : j.items()) {
        if (known_keys().count(item.key()) == 0) {
            throw ConfigError(item.key(), "unknown key");
        }
    }
    RunConfig c;
    if (j.contains("gate")) c.gate_name = get_checked<std::string>(j, "gate", "");
    if (j.contains("theta")) c.theta = get_checked<double>(j, "theta", 0.0);
    if (j.contains("phi")) c.phi = get_checked<double>(j, "phi", 0.0);
    if (j.contains("gamma")) c.gamma = get_checked<double>(j, "gamma", 0.0);
    c.omega_a_hz = get_checked<double>(j, "omega_a_hz", c.omega_a_hz);
    c.duration_t_s = get_checked<double>(j, "duration_t_s", c.duration_t_s);
    c.n_steps = get_checked<int>(j, "n_steps", c.n_steps);
    c.noise_enabled = get_checked<bool>(j, "noise_enabled", c.noise_enabled);
    c.t1_e_s = get_checked<double>(j, "t1_e_s", c.t1_e_s);
    c.t1_f_s = get_checked<double>(j, "t1_f_s", c.t1_f_s);
    c.t2_ge_s = get_checked<double>(j, "t2_ge_s", c.t2_ge_s);
    c.t2_ef_s = get_checked<double>(j, "t2_ef_s", c.t2_ef_s);
    c.scheme = get_checked<std::string>(j, "scheme", c.scheme);
    c.alphas = get_checked<std::vector<double>>(j, "alphas", c.alphas);
    c.alpha = get_checked<double>(j, "alpha", c.alpha);
    c.family_dim = get_checked<int>(j, "family_dim", c.family_dim);
    c.budget = get_checked<int>(j, "budget", c.budget);
    c.samples = get_checked<int>(j, "samples", c.samples);
    c.trajectory_points = get_checked<int>(j, "trajectory_points", c.trajectory_points);
    c.gate_based_prep = get_checked<bool>(j, "gate_based_prep", c.gate_based_prep);
    c.output = get_checked<std::string>(j, "output", c.output);

    require_positive(c.omega_a_hz, "omega_a_hz");
    require_positive(c.duration_t_s, "duration_t_s");
    require_positive(c.t1_e_s, "t1_e_s");
    require_positive(c.t1_f_s, "t1_f_s");
    require_positive(c.t2_ge_s, "t2_ge_s");
    require_positive(c.t2_ef_s, "t2_ef_s");
    if (c.n_steps < 100) throw ConfigError("n_steps", "must be >= 100");
    return c;
}

}  // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("<file>", std::string("malformed JSON: ") + e.what());
    }
    return from_json(j);
}

RunConfig load_config_text(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("<text>", std::string("malformed JSON: ") + e.what());
    }
    return from_json(j);
}

}  // namespace qsta
