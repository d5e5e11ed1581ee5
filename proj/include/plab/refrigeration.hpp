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

#include <cmath>
#include <utility>

#include "plab/core.hpp"
#include "plab/states.hpp"

namespace plab {

/// The two-level subsystem spanned by a chosen level pair of a machine
/// state, characterized by its normalization P_v = r_lo + r_hi, its bias
/// B_v = (r_lo - r_hi)/P_v and its gap E_v. beta_v is the matching inverse
/// temperature, +infinity for an empty upper level.
struct VirtualQubit {
    double p_v = 0.0;
    double b_v = 0.0;
    double e_v = 0.0;
    double beta_v = 0.0;
};

/// External resonant qubit: populations (u0, u1) over energies (f0, f1).
struct ExternalQubit {
    double f0 = 0.0;
    double f1 = 0.0;
    double u0 = 1.0;
    double u1 = 0.0;

    double bias() const { return u0 - u1; }
    double gap() const { return f1 - f0; }
    double energy() const { return u0 * f0 + u1 * f1; }
};

/// Virtual qubit of a machine state over the level pair (lo, hi); the
/// default pair is the extreme one, (0, d-1).
inline VirtualQubit virtual_qubit(const PassiveState& r, const Hamiltonian& H, int lo = 0,
                                  int hi = -1, double tol = kDefaultTol) {
    if (r.dim() != H.dim()) throw std::invalid_argument("virtual_qubit: dimension mismatch");
    if (r.dim() < 2) throw std::invalid_argument("virtual_qubit: need at least two levels");
    if (hi < 0) hi = r.dim() - 1;
    if (lo < 0 || hi >= r.dim() || lo >= hi)
        throw std::invalid_argument("virtual_qubit: invalid level pair");
    VirtualQubit vq;
    vq.p_v = r[lo] + r[hi];
    if (vq.p_v <= tol) throw std::invalid_argument("virtual_qubit: empty level pair, bias undefined");
    vq.b_v = (r[lo] - r[hi]) / vq.p_v;
    vq.e_v = H[hi] - H[lo];
    if (r[hi] <= tol) {
        vq.beta_v = kInf;
    } else if (vq.e_v <= tol) {
        vq.beta_v = (r[lo] > r[hi] + tol) ? kInf : 0.0;
    } else {
        vq.beta_v = std::log(r[lo] / r[hi]) / vq.e_v;
    }
    return vq;
}

/// Bias of the external qubit after one energy-conserving swap against the
/// virtual qubit: B_fin = P_v B_v + (1 - P_v) B_ext. Requires resonance.
inline double final_bias(const VirtualQubit& vq, const ExternalQubit& ext, double tol = kDefaultTol) {
    if (std::abs(ext.gap() - vq.e_v) > tol)
        throw std::invalid_argument("final_bias: external gap must match the virtual-qubit gap");
    return vq.p_v * vq.b_v + (1.0 - vq.p_v) * ext.bias();
}

/// Brute-force protocol oracle. Forms the joint product distribution of the
/// machine and the external qubit, exchanges the populations of
/// |lo>|excited> and |hi>|ground> (the swap is identity elsewhere), and
/// traces out the machine. Dephasing plays no role: everything is diagonal.
inline ExternalQubit swap_simulate(const PassiveState& r, const Hamiltonian& H,
                                   const ExternalQubit& ext, int lo = 0, int hi = -1,
                                   double tol = kDefaultTol) {
    if (r.dim() != H.dim()) throw std::invalid_argument("swap_simulate: dimension mismatch");
    if (hi < 0) hi = r.dim() - 1;
    if (std::abs(ext.gap() - (H[hi] - H[lo])) > tol)
        throw std::invalid_argument("swap_simulate: external gap must match the virtual-qubit gap");

    const int d = r.dim();
    // joint(i, j) = machine level i, external level j
    RMatrix joint(d, 2);
    for (int i = 0; i < d; ++i) {
        joint(i, 0) = r[i] * ext.u0;
        joint(i, 1) = r[i] * ext.u1;
    }
    std::swap(joint(lo, 1), joint(hi, 0));

    ExternalQubit out = ext;
    out.u0 = joint.col(0).sum();
    out.u1 = joint.col(1).sum();
    return out;
}

/// Side-by-side refrigeration comparison of two machine states against the
/// same external qubit. When r is virtually cooler than p the final bias
/// with r dominates and the final external energy is lower; if the order
/// does not hold the comparison is still computed, with vc_holds = false.
struct FridgeComparison {
    bool vc_holds = false;
    double bias_r = 0.0;
    double bias_p = 0.0;
    double energy_r = 0.0;
    double energy_p = 0.0;

    bool bias_ordered(double tol = kDefaultTol) const { return bias_r >= bias_p - tol; }
    bool energy_ordered(double tol = kDefaultTol) const { return energy_r <= energy_p + tol; }
};

inline FridgeComparison compare_refrigeration(const PassiveState& r, const PassiveState& p,
                                              const Hamiltonian& H, const ExternalQubit& ext,
                                              double tol = kDefaultTol) {
    FridgeComparison cmp;
    cmp.vc_holds = is_virtually_cooler(r, p, tol);
    const ExternalQubit fin_r = swap_simulate(r, H, ext, 0, -1, tol);
    const ExternalQubit fin_p = swap_simulate(p, H, ext, 0, -1, tol);
    cmp.bias_r = fin_r.bias();
    cmp.bias_p = fin_p.bias();
    cmp.energy_r = fin_r.energy();
    cmp.energy_p = fin_p.energy();
    return cmp;
}

}  // namespace plab
