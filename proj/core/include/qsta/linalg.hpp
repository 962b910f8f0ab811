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

#ifndef QSTA_LINALG_HPP
#define QSTA_LINALG_HPP

#include <Eigen/Dense>
#include <complex>

namespace qsta {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Max-norm of A - B; all tolerance checks in the library use this norm.
double max_norm_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-10);
bool is_unitary(const Eigen::MatrixXcd& m, double tol = 1e-12);

// Valid density matrix: Hermitian (1e-12), unit trace (1e-10),
// eigenvalues >= -1e-9.
bool is_density_matrix(const Eigen::MatrixXcd& rho);

// exp(-i H s) of a Hermitian generator, computed by eigendecomposition
// (exact at these dimensions, no series truncation).
// Throws InvalidInput if H is not Hermitian within 1e-10.
Eigen::MatrixXcd hermitian_exponential(const Eigen::MatrixXcd& h, double s);

// F_avg = (|Tr(U^dag V)|^2 + 2) / 6 for single-qubit unitaries.
// Invariant under a global phase of either argument.
// Throws InvalidInput unless both inputs are 2x2 unitaries (1e-10).
double average_gate_fidelity(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v);

// e^{i lambda} U with lambda maximizing Re Tr(V^dag e^{i lambda} U);
// lambda = 0 when Tr(V^dag U) = 0. Throws InvalidInput on dimension mismatch.
Eigen::MatrixXcd global_phase_align(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

// <psi|rho|psi> as a real number.
double state_fidelity(const Eigen::MatrixXcd& rho, const Eigen::VectorXcd& psi);

}  // namespace qsta

#endif
