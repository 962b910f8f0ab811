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

#include "qsta/linalg.hpp"

#include <cmath>

#include "qsta/errors.hpp"

namespace qsta {

double max_norm_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput("max_norm_diff: shape mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Eigen::MatrixXcd& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Eigen::MatrixXcd g = m.adjoint() * m;
    g -= Eigen::MatrixXcd::Identity(m.rows(), m.cols());
    return g.cwiseAbs().maxCoeff() <= tol;
}

bool is_density_matrix(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != rho.cols()) return false;
    if (!is_hermitian(rho, 1e-12)) return false;
    if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -1e-9;
}

Eigen::MatrixXcd hermitian_exponential(const Eigen::MatrixXcd& h, double s) {
    if (h.rows() != h.cols()) {
        throw InvalidInput("hermitian_exponential: matrix not square");
    }
    if (!is_hermitian(h, 1e-10)) {
        throw InvalidInput("hermitian_exponential: generator not Hermitian within 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index k = 0; k < h.rows(); ++k) {
        phases(k) = std::exp(-kI * es.eigenvalues()(k) * s);
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double average_gate_fidelity(const Eigen::Matrix2cd& u, const Eigen::Matrix2cd& v) {
    if (!is_unitary(u, 1e-10) || !is_unitary(v, 1e-10)) {
        throw InvalidInput("average_gate_fidelity: inputs must be unitary within 1e-10");
    }
    const Complex tr = (u.adjoint() * v).trace();
    return (std::norm(tr) + 2.0) / 6.0;
}

Eigen::MatrixXcd global_phase_align(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw InvalidInput("global_phase_align: dimension mismatch");
    }
    const Complex tr = (v.adjoint() * u).trace();
    if (std::abs(tr) == 0.0) return u;
    return std::exp(-kI * std::arg(tr)) * u;
}

double state_fidelity(const Eigen::MatrixXcd& rho, const Eigen::VectorXcd& psi) {
    if (rho.rows() != rho.cols() || rho.rows() != psi.size()) {
        throw InvalidInput("state_fidelity: dimension mismatch");
    }
    const Complex f = psi.adjoint() * rho * psi;
    return f.real();
}

}  // namespace qsta
