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

#include <algorithm>
#include <numeric>
#include <vector>

#include "plab/core.hpp"

namespace plab::detail {

/// Euclidean projection of v onto the probability simplex
/// { x : x >= 0, sum x = 1 }.
inline RVector project_to_simplex(RVector v) {
    const Eigen::Index n = v.size();
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cum = 0.0;
    double theta = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        cum += u[static_cast<std::size_t>(k)];
        const double cand = (cum - 1.0) / static_cast<double>(k + 1);
        if (u[static_cast<std::size_t>(k)] - cand > 0.0) theta = cand;
    }
    for (Eigen::Index i = 0; i < n; ++i) v[i] = std::max(0.0, v[i] - theta);
    return v;
}

/// Lawson--Hanson active-set solver for min ||A x - b||_2 subject to x >= 0.
///
/// The passive-set least-squares subproblems are solved with a
/// column-pivoting QR on the selected columns. Deterministic: ties in the
/// dual pick the lowest column index.
inline RVector nnls(const RMatrix& A, const RVector& b, int max_outer = 0) {
    const Eigen::Index rows = A.rows();
    const Eigen::Index cols = A.cols();
    if (max_outer <= 0) max_outer = static_cast<int>(3 * cols + 30);

    RVector x = RVector::Zero(cols);
    std::vector<bool> passive(static_cast<std::size_t>(cols), false);
    std::vector<Eigen::Index> pidx;

    const double scale = std::max(1.0, max_abs(A) * std::max(1.0, b.cwiseAbs().maxCoeff()));
    const double dual_tol = 1e-13 * scale;

    auto solve_passive = [&](void) -> RVector {
        RMatrix Ap(rows, static_cast<Eigen::Index>(pidx.size()));
        for (std::size_t k = 0; k < pidx.size(); ++k) Ap.col(static_cast<Eigen::Index>(k)) = A.col(pidx[k]);
        return Ap.colPivHouseholderQr().solve(b);
    };

    RVector resid = b;
    for (int outer = 0; outer < max_outer; ++outer) {
        const RVector w = A.transpose() * resid;
        Eigen::Index best = -1;
        double best_w = dual_tol;
        for (Eigen::Index j = 0; j < cols; ++j) {
            if (!passive[static_cast<std::size_t>(j)] && w[j] > best_w) {
                best_w = w[j];
                best = j;
            }
        }
        if (best < 0) break;  // KKT satisfied
        passive[static_cast<std::size_t>(best)] = true;
        pidx.push_back(best);

        for (int inner = 0; inner < max_outer; ++inner) {
            RVector z = solve_passive();
            bool all_pos = true;
            for (Eigen::Index k = 0; k < z.size(); ++k) {
                if (z[k] <= 0.0) { all_pos = false; break; }
            }
            if (all_pos) {
                for (std::size_t k = 0; k < pidx.size(); ++k) x[pidx[k]] = z[static_cast<Eigen::Index>(k)];
                break;
            }
            // Step back to the feasibility boundary and drop the blocking column.
            double alpha = 1.0;
            for (std::size_t k = 0; k < pidx.size(); ++k) {
                const double zk = z[static_cast<Eigen::Index>(k)];
                if (zk <= 0.0) {
                    const double xk = x[pidx[k]];
                    const double step = xk / (xk - zk);
                    alpha = std::min(alpha, step);
                }
            }
            for (std::size_t k = 0; k < pidx.size(); ++k) {
                const double zk = z[static_cast<Eigen::Index>(k)];
                x[pidx[k]] += alpha * (zk - x[pidx[k]]);
            }
            std::vector<Eigen::Index> kept;
            for (std::size_t k = 0; k < pidx.size(); ++k) {
                if (x[pidx[k]] > 1e-14) {
                    kept.push_back(pidx[k]);
                } else {
                    x[pidx[k]] = 0.0;
                    passive[static_cast<std::size_t>(pidx[k])] = false;
                }
            }
            pidx = std::move(kept);
            if (pidx.empty()) break;
        }
        resid = b - A * x;
    }
    return x;
}

/// Projected-gradient refinement of an NNLS iterate constrained to the
/// probability simplex. Used as a fallback when the weights of a convex
/// decomposition must also sum to one exactly.
inline RVector refine_on_simplex(const RMatrix& A, const RVector& b, RVector x, int iters = 2000) {
    x = project_to_simplex(std::move(x));
    const double sigma = A.squaredNorm();  // Frobenius bound on the Lipschitz constant
    if (sigma <= 0.0) return x;
    const double step = 1.0 / sigma;
    double best_err = (A * x - b).squaredNorm();
    RVector best = x;
    for (int it = 0; it < iters; ++it) {
        const RVector grad = A.transpose() * (A * x - b);
        x = project_to_simplex(x - step * grad);
        const double err = (A * x - b).squaredNorm();
        if (err < best_err) {
            best_err = err;
            best = x;
        }
        if (err <= 1e-28) break;
    }
    return best;
}

}  // namespace plab::detail
