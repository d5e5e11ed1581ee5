// Copyright 2026 The passivity-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace plab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Default tolerance for every ordering/equality predicate in the library.
/// All predicates take an explicit tolerance parameter; this is the value
/// used when the caller does not care.
inline constexpr double kDefaultTol = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Largest absolute entry of a matrix (max norm).
inline double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const RMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

/// Hermitian within tol (max norm of m - m†).
inline bool is_hermitian(const CMatrix& m, double tol = kDefaultTol) {
    return m.rows() == m.cols() && max_abs(CMatrix(m - m.adjoint())) <= tol;
}

/// Positive semidefinite within tol: smallest eigenvalue of the
/// Hermitian part is >= -tol.
inline bool is_psd(const CMatrix& m, double tol = kDefaultTol) {
    if (!is_hermitian(m, tol)) return false;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

/// Valid density matrix: Hermitian, PSD, unit trace, all within tol.
inline bool is_density_matrix(const CMatrix& m, double tol = kDefaultTol) {
    return is_psd(m, tol) && std::abs(m.trace().real() - 1.0) <= tol &&
           std::abs(m.trace().imag()) <= tol;
}

}  // namespace plab
