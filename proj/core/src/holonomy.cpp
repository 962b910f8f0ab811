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

#include "qsta/holonomy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qsta/errors.hpp"
#include "qsta/hamiltonian.hpp"
#include "qsta/linalg.hpp"

namespace qsta {

namespace {
constexpr double kPi = std::numbers::pi;
}

Eigen::Matrix2cd holonomy_matrix(const GateSpec& g) {
    const double c = std::cos(g.gamma / 2.0);
    const double s = std::sin(g.gamma / 2.0);
    const double ct = std::cos(g.theta);
    const double st = std::sin(g.theta);
    const Complex eip = std::exp(kI * g.phi_rel);
    Eigen::Matrix2cd u;
    u(0, 0) = Complex(c, 0.0) - kI * s * ct;
    u(0, 1) = -kI * s * st * eip;
    u(1, 0) = -kI * s * st * std::conj(eip);
    u(1, 1) = Complex(c, 0.0) + kI * s * ct;
    return std::exp(kI * g.gamma / 2.0) * u;
}

GateSpec named_gate(NamedGate name) {
    switch (name) {
        case NamedGate::I:
            return GateSpec{0.0, 0.0, 0.0};
        case NamedGate::Z:
            return GateSpec{kPi, 0.0, kPi};
        case NamedGate::X:
            return GateSpec{kPi / 2.0, 0.0, kPi};
        case NamedGate::H:
            return GateSpec{kPi / 4.0, 0.0, kPi};
        case NamedGate::Xhalf:
            return GateSpec{kPi / 2.0, 0.0, kPi / 2.0};
    }
    throw NotFound("unknown gate");
}

GateSpec named_gate(std::string_view name) {
    if (name == "I") return named_gate(NamedGate::I);
    if (name == "Z") return named_gate(NamedGate::Z);
    if (name == "X") return named_gate(NamedGate::X);
    if (name == "H") return named_gate(NamedGate::H);
    if (name == "Xhalf") return named_gate(NamedGate::Xhalf);
    throw NotFound("unknown gate name: " + std::string(name));
}

namespace {

ExtractedGate extract_impl(const Eigen::Matrix3cd& u3, const Eigen::Matrix2cd* ref) {
    if (!is_unitary(u3, 1e-8)) {
        throw InvalidInput("extract_qubit_gate: input not unitary within 1e-8");
    }
    ExtractedGate out;
    Eigen::Matrix2cd block = u3.topLeftCorner<2, 2>();
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(block,
                                           Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smin = svd.singularValues().minCoeff();
    out.leakage = std::max(0.0, 1.0 - smin * smin);
    if (out.leakage < 1e-3) {
        block = svd.matrixU() * svd.matrixV().adjoint();  // polar factor
        out.unitarized = true;
    }
    if (ref != nullptr) {
        block = global_phase_align(block, *ref);
        out.global_phase_removed = true;
    }
    out.qubit_unitary = block;
    return out;
}

// Followed-eigenstate walk over the protocol grid, in the driven-loop frame.
struct BranchWalk {
    std::vector<Eigen::Vector3cd> states;  // gauge-fixed, grid t_k = k T / n
    std::vector<double> eigenvalues;
    std::vector<int> branch;  // 0 = lower block eigenvalue, 1 = upper
};

BranchWalk walk_branch(const StaSchedule& s, int n_steps) {
    if (n_steps < 1000) {
        throw InvalidInput("branch walk requires n_steps >= 1000");
    }
    const int n = n_steps + (n_steps % 2);
    const BrightDark bd = bright_dark_pair(driven_loop_spec(s.gate));
    const Eigen::Vector3cd e = Eigen::Vector3cd::Unit(2);
    BranchWalk walk;
    walk.states.reserve(n + 1);
    walk.eigenvalues.reserve(n + 1);
    walk.branch.reserve(n + 1);
    Eigen::Vector3cd prev = bd.bright;
    for (int k = 0; k <= n; ++k) {
        const double t = s.duration_t * k / n;
        const DriveSample d = drive_at(s, t, ErrorModel::none());
        const double r = std::hypot(d.delta, d.omega);
        const double phm = 0.5 * std::atan2(d.omega, d.delta);
        const Complex ephi = std::exp(-kI * applied_drive_phase(d));
        Eigen::Vector3cd cand[2];
        cand[0] = std::cos(phm) * bd.bright - std::sin(phm) * ephi * e;
        cand[1] = std::sin(phm) * bd.bright + std::cos(phm) * ephi * e;
        const double ev[2] = {(d.delta - r) / 2.0, (d.delta + r) / 2.0};
        for (auto& v : cand) {
            Complex c = bd.bright.adjoint() * v;
            if (std::abs(c) < 1e-12) c = v(2);
            v *= std::conj(c) / std::abs(c);
        }
        int best = 0;
        double best_overlap = -1.0;
        for (int c = 0; c < 2; ++c) {
            const double o = std::abs(Complex(prev.adjoint() * cand[c]));
            if (o > best_overlap) {
                best_overlap = o;
                best = c;
            }
        }
        if (best_overlap < 0.9 && k > 0) {
            throw BranchLost("followed-eigenstate overlap fell below 0.9");
        }
        walk.states.push_back(cand[best]);
        walk.eigenvalues.push_back(ev[best]);
        walk.branch.push_back(best);
        prev = cand[best];
    }
    return walk;
}

}  // namespace

ExtractedGate extract_qubit_gate(const Eigen::Matrix3cd& u3) {
    return extract_impl(u3, nullptr);
}

ExtractedGate extract_qubit_gate(const Eigen::Matrix3cd& u3,
                                 const Eigen::Matrix2cd& reference) {
    return extract_impl(u3, &reference);
}

double geometric_phase_numeric(const StaSchedule& s, int n_steps) {
    const BranchWalk walk = walk_branch(s, n_steps);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < walk.states.size(); ++k) {
        sum -= std::arg(Complex(walk.states[k].adjoint() * walk.states[k + 1]));
    }
    sum -= std::arg(Complex(walk.states.back().adjoint() * walk.states.front()));
    // A closed loop only defines the phase mod 2 pi; pure windings appear
    // when a jump overlap lands exactly on the branch cut.
    const double residue = std::remainder(sum, 2.0 * kPi);
    if (std::fabs(residue) < 1e-6) return residue;
    return sum;
}

double dynamical_phase_numeric(const StaSchedule& s, int n_steps) {
    return dynamical_phase_numeric(s, n_steps, 0.0, s.duration_t);
}

double dynamical_phase_numeric(const StaSchedule& s, int n_steps, double t0,
                               double t1) {
    if (!(t0 >= 0.0 && t1 <= s.duration_t && t0 < t1)) {
        throw OutOfRange("dynamical_phase_numeric: bad integration range");
    }
    const BranchWalk walk = walk_branch(s, n_steps);
    const int n = static_cast<int>(walk.states.size()) - 1;
    const double dt = s.duration_t / n;
    // Midpoint quadrature of the tracked branch eigenvalue on [t0, t1].
    // Midpoints never touch the mid-protocol discontinuity (n is even), and
    // the branch label of a step crossing it is taken from its right
    // endpoint so each half integrates its own eigenvalue.
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double ta = k * dt;
        const double tb = ta + dt;
        if (tb <= t0 + 1e-18 || ta >= t1 - 1e-18) continue;
        const int label = (k == n / 2) ? walk.branch[k + 1] : walk.branch[k];
        const DriveSample d = drive_at(s, 0.5 * (ta + tb), ErrorModel::none());
        const double r = std::hypot(d.delta, d.omega);
        sum += ((label == 0) ? (d.delta - r) : (d.delta + r)) * 0.5 * dt;
    }
    return sum;
}

PhaseReport phase_report(const StaSchedule& s, int n_steps) {
    PhaseReport r;
    r.geometric = geometric_phase_numeric(s, n_steps);
    r.dynamical = dynamical_phase_numeric(s, n_steps);
    r.total = r.geometric + r.dynamical;
    return r;
}

}  // namespace qsta
