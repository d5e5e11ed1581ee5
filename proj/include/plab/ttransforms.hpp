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

#include <utility>

#include "plab/core.hpp"
#include "plab/majorization.hpp"
#include "plab/states.hpp"

namespace plab {

/// The 2x2 mixing block [[t, 1-t], [1-t, t]] embedded on the adjacent level
/// pair (i, i+1) of a d-level system, identity elsewhere. Passive (cone
/// preserving) exactly when t >= 1/2.
struct TTransform {
    double t = 1.0;
    int position = 0;
    int dim = 2;

    bool passive() const { return t >= 0.5; }

    RMatrix matrix() const {
        RMatrix m = RMatrix::Identity(dim, dim);
        m(position, position) = t;
        m(position, position + 1) = 1.0 - t;
        m(position + 1, position) = 1.0 - t;
        m(position + 1, position + 1) = t;
        return m;
    }
};

inline RMatrix t_transform(double t, int i, int d) {
    if (t < 0.0 || t > 1.0) throw std::invalid_argument("t_transform: t must lie in [0, 1]");
    if (i < 0 || i > d - 2) throw std::invalid_argument("t_transform: index out of range");
    return TTransform{t, i, d}.matrix();
}

/// True iff the stochastic matrix maps the non-increasing probability cone
/// into itself, decided on the extremal vectors e_k (complete by convexity).
inline bool preserves_nonincreasing_cone(const RMatrix& m, double tol = kDefaultTol) {
    const int d = static_cast<int>(m.rows());
    for (int k = 0; k < d; ++k) {
        RVector e = RVector::Zero(d);
        for (int i = 0; i <= k; ++i) e[i] = 1.0 / (k + 1);
        const RVector img = m * e;
        for (int i = 0; i + 1 < d; ++i)
            if (img[i] < img[i + 1] - tol) return false;
    }
    return true;
}

/// Cone preservation of the two ordered products T1*T2 and T2*T1 of the
/// three-level t-transforms T1 (block on levels 0,1 with parameter t) and
/// T2 (block on levels 1,2 with parameter s). Both orderings preserve the
/// cone simultaneously exactly when both transforms are passive, i.e.
/// t >= 1/2 and s >= 1/2; a single ordering can also pass on a boundary
/// sliver where the other ordering fails.
inline std::pair<bool, bool> ordered_product_passive(double t, double s, double tol = kDefaultTol) {
    const RMatrix t1 = t_transform(t, 0, 3);
    const RMatrix t2 = t_transform(s, 1, 3);
    return {preserves_nonincreasing_cone(RMatrix(t1 * t2), tol),
            preserves_nonincreasing_cone(RMatrix(t2 * t1), tol)};
}

}  // namespace plab
