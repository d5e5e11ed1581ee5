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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plab/core.hpp"
#include "plab/majorization.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// Hamiltonians and passive states
// ---------------------------------------------------------------------------

/// A finite-dimensional Hamiltonian fixed by its non-decreasing list of
/// energy eigenvalues. The labeled eigenbasis is the reference basis for
/// everything else: passivity, coherence, channel certification.
class Hamiltonian {
  public:
    explicit Hamiltonian(std::vector<double> energies) : energies_(std::move(energies)) {
        if (energies_.empty()) throw std::invalid_argument("Hamiltonian: empty");
        for (std::size_t i = 0; i + 1 < energies_.size(); ++i)
            if (energies_[i] > energies_[i + 1])
                throw std::invalid_argument("Hamiltonian: energies must be non-decreasing");
    }

    int dim() const { return static_cast<int>(energies_.size()); }
    double operator[](int i) const { return energies_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& energies() const { return energies_; }

    CMatrix matrix() const {
        CMatrix h = CMatrix::Zero(dim(), dim());
        for (int i = 0; i < dim(); ++i) h(i, i) = energies_[static_cast<std::size_t>(i)];
        return h;
    }

  private:
    std::vector<double> energies_;
};

/// A passive state: diagonal in the energy eigenbasis with non-increasing
/// populations. Wraps the populations as a ProbVector.
class PassiveState {
  public:
    explicit PassiveState(ProbVector populations) : populations_(std::move(populations)) {}
    explicit PassiveState(std::vector<double> populations, double tol = kDefaultTol)
        : populations_(ProbVector(std::move(populations), tol)) {}

    int dim() const { return populations_.dim(); }
    double operator[](int i) const { return populations_[i]; }
    const ProbVector& populations() const { return populations_; }

    CMatrix density() const {
        CMatrix rho = CMatrix::Zero(dim(), dim());
        for (int i = 0; i < dim(); ++i) rho(i, i) = populations_[i];
        return rho;
    }

    bool operator==(const PassiveState&) const = default;

  private:
    ProbVector populations_;
};

/// The k-th extremal passive state: uniform on levels 0..k, zero above.
inline PassiveState extremal_passive(int k, int d) {
    if (k < 0 || k >= d) throw std::invalid_argument("extremal_passive: k out of range");
    std::vector<double> pop(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i <= k; ++i) pop[static_cast<std::size_t>(i)] = 1.0 / (k + 1);
    return PassiveState(ProbVector(std::move(pop)));
}

/// Thermal populations exp(-beta E_i)/Z for the given Hamiltonian.
inline PassiveState thermal_state(double beta, const Hamiltonian& H) {
    if (beta < 0) throw std::invalid_argument("thermal_state: beta must be >= 0");
    std::vector<double> pop(static_cast<std::size_t>(H.dim()));
    double z = 0.0;
    for (int i = 0; i < H.dim(); ++i) {
        pop[static_cast<std::size_t>(i)] = std::exp(-beta * (H[i] - H[0]));
        z += pop[static_cast<std::size_t>(i)];
    }
    for (double& x : pop) x /= z;
    return PassiveState(ProbVector(std::move(pop)));
}

/// Passivity of a bare matrix in the labeled basis: numerically diagonal
/// with a non-increasing real diagonal. With degenerate energies the fixed
/// level labels still decide the ordering, so no energies are needed.
inline bool is_passive_matrix(const CMatrix& rho, double tol = kDefaultTol) {
    const Eigen::Index d = rho.rows();
    if (rho.cols() != d) return false;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j)
            if (i != j && std::abs(rho(i, j)) > tol) return false;
        if (std::abs(rho(i, i).imag()) > tol) return false;
    }
    for (Eigen::Index i = 0; i + 1 < d; ++i)
        if (rho(i, i).real() < rho(i + 1, i + 1).real() - tol) return false;
    return true;
}

/// Passivity test for a state of the given Hamiltonian.
inline bool is_passive(const CMatrix& rho, const Hamiltonian& H, double tol = kDefaultTol) {
    if (rho.rows() != H.dim() || rho.cols() != H.dim())
        throw std::invalid_argument("is_passive: dimension mismatch");
    return is_passive_matrix(rho, tol);
}

/// Extract the populations of a numerically diagonal state. Throws if any
/// off-diagonal entry exceeds tol or the diagonal is not a non-increasing
/// probability vector within tol.
inline PassiveState passive_from_density(const CMatrix& rho, double tol = kDefaultTol) {
    const int d = static_cast<int>(rho.rows());
    std::vector<double> pop(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            if (i != j && std::abs(rho(i, j)) > tol)
                throw std::invalid_argument("passive_from_density: state has coherence");
        pop[static_cast<std::size_t>(i)] = std::max(0.0, rho(i, i).real());
    }
    return PassiveState(ProbVector(std::move(pop), 10 * tol));
}

// ---------------------------------------------------------------------------
// Virtual temperatures and the virtually-cooler order
// ---------------------------------------------------------------------------

/// Inverse virtual temperatures beta(i,j) = ln(r_i/r_j) / (E_j - E_i) for
/// level pairs i < j. Entries with r_j = 0 < r_i are +infinity; pairs where
/// both populations vanish are omitted. For exactly degenerate energy pairs
/// the ratio convention is kept: +infinity if r_i > r_j, zero if equal.
struct VirtualTemperatureTable {
    std::map<std::pair<int, int>, double> beta;

    std::optional<double> at(int i, int j) const {
        auto it = beta.find({i, j});
        if (it == beta.end()) return std::nullopt;
        return it->second;
    }
};

inline VirtualTemperatureTable virtual_temperatures(const PassiveState& r, const Hamiltonian& H,
                                                    double tol = kDefaultTol) {
    if (r.dim() != H.dim()) throw std::invalid_argument("virtual_temperatures: dimension mismatch");
    VirtualTemperatureTable table;
    for (int i = 0; i < r.dim(); ++i) {
        for (int j = i + 1; j < r.dim(); ++j) {
            const double ri = r[i], rj = r[j];
            if (ri <= tol && rj <= tol) continue;  // undefined, omitted
            const double gap = H[j] - H[i];
            double value;
            if (rj <= tol) {
                value = kInf;
            } else if (gap <= tol) {
                value = (ri > rj + tol) ? kInf : 0.0;
            } else {
                value = std::log(ri / rj) / gap;
            }
            table.beta[{i, j}] = value;
        }
    }
    return table;
}

/// The virtually-cooler partial order r >_vc p, i.e. r is passive relative
/// to p: every population ratio r_i/r_j dominates p_i/p_j for i < j. The
/// check cross-multiplies, r_i p_j >= r_j p_i - tol, which realizes the
/// a/0 = infinity convention without dividing.
inline bool is_virtually_cooler(const PassiveState& r, const PassiveState& p,
                                double tol = kDefaultTol) {
    if (r.dim() != p.dim()) throw std::invalid_argument("is_virtually_cooler: dimension mismatch");
    for (int i = 0; i < r.dim(); ++i)
        for (int j = i + 1; j < r.dim(); ++j)
            if (r[i] * p[j] < r[j] * p[i] - tol) return false;
    return true;
}

/// Relative-passivity witness sigma^(-1/2) rho sigma^(-1/2) normalized by
/// Tr[rho sigma^(-1)], with the inverse taken on the support of sigma.
/// rho is passive relative to sigma iff the witness is a passive state.
inline CMatrix relative_passivity_witness(const CMatrix& rho, const PassiveState& sigma,
                                          double tol = kDefaultTol) {
    const int d = sigma.dim();
    if (rho.rows() != d || rho.cols() != d)
        throw std::invalid_argument("relative_passivity_witness: dimension mismatch");
    const int s = sigma.populations().support_size(tol);
    for (int i = s; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (std::abs(rho(i, j)) > tol || std::abs(rho(j, i)) > tol)
                throw std::invalid_argument("relative_passivity_witness: support of rho exceeds support of sigma");
        }
    }
    CMatrix w = CMatrix::Zero(d, d);
    double norm = 0.0;
    for (int i = 0; i < s; ++i) norm += rho(i, i).real() / sigma[i];
    if (norm <= tol) throw std::invalid_argument("relative_passivity_witness: Tr[rho sigma^-1] vanishes");
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            w(i, j) = rho(i, j) / std::sqrt(sigma[i] * sigma[j]) / norm;
    return w;
}

/// Extreme points of the convex set T_p = { r passive : r >_vc p }. For each
/// support index k, renormalize the first k+1 entries of p; the set of all
/// virtually cooler states is their convex hull.
inline std::vector<PassiveState> vc_extreme_points(const PassiveState& p, double tol = kDefaultTol) {
    const int s = p.populations().support_size(tol);
    std::vector<PassiveState> points;
    points.reserve(static_cast<std::size_t>(s));
    double head = 0.0;
    for (int k = 0; k < s; ++k) {
        head += p[k];
        std::vector<double> r(static_cast<std::size_t>(p.dim()), 0.0);
        for (int i = 0; i <= k; ++i) r[static_cast<std::size_t>(i)] = p[i] / head;
        points.emplace_back(ProbVector(std::move(r), 100 * tol));
    }
    return points;
}

// ---------------------------------------------------------------------------
// Energy, ergotropy and activity monotones
// ---------------------------------------------------------------------------

inline double energy(const CMatrix& rho, const Hamiltonian& H) {
    if (rho.rows() != H.dim() || rho.cols() != H.dim())
        throw std::invalid_argument("energy: dimension mismatch");
    double e = 0.0;
    for (int i = 0; i < H.dim(); ++i) e += rho(i, i).real() * H[i];
    return e;
}

inline double energy(const PassiveState& r, const Hamiltonian& H) {
    if (r.dim() != H.dim()) throw std::invalid_argument("energy: dimension mismatch");
    double e = 0.0;
    for (int i = 0; i < H.dim(); ++i) e += r[i] * H[i];
    return e;
}

/// Maximum work extractable by unitaries: the energy of the state minus the
/// energy of its passive version (eigenvalues sorted non-increasing against
/// the non-decreasing energy levels). Zero exactly on passive states.
inline double ergotropy(const CMatrix& rho, const Hamiltonian& H) {
    if (rho.rows() != H.dim() || rho.cols() != H.dim())
        throw std::invalid_argument("ergotropy: dimension mismatch");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
    RVector ev = es.eigenvalues();  // ascending
    double passive_energy = 0.0;
    const int d = H.dim();
    for (int i = 0; i < d; ++i) passive_energy += ev[d - 1 - i] * H[i];
    return energy(rho, H) - passive_energy;
}

// ---------------------------------------------------------------------------
// The set D of pure active states with non-increasing amplitude profile
// ---------------------------------------------------------------------------

/// A pure state whose squared amplitudes form a non-increasing probability
/// vector in the energy basis: |psi> = sum_i sqrt(p_i) e^{i theta_i} |i>.
struct PureStateD {
    ProbVector probs;
    std::vector<double> phases;

    PureStateD(ProbVector pr, std::vector<double> ph) : probs(std::move(pr)), phases(std::move(ph)) {
        if (static_cast<int>(phases.size()) != probs.dim())
            throw std::invalid_argument("PureStateD: phase list length mismatch");
    }

    explicit PureStateD(ProbVector pr)
        : probs(std::move(pr)), phases(static_cast<std::size_t>(probs.dim()), 0.0) {}

    int dim() const { return probs.dim(); }

    CVector vector() const {
        CVector v(dim());
        for (int i = 0; i < dim(); ++i)
            v[i] = std::sqrt(probs[i]) * std::exp(Complex(0.0, phases[static_cast<std::size_t>(i)]));
        return v;
    }

    CMatrix density() const {
        const CVector v = vector();
        return v * v.adjoint();
    }
};

/// Canonicalize a normalized amplitude vector as a member of the set D, or
/// nullopt if its probability profile is not non-increasing. Phases of
/// vanishing amplitudes are fixed to zero.
inline std::optional<PureStateD> in_set_D(const CVector& psi, double tol = kDefaultTol) {
    const double n2 = psi.squaredNorm();
    if (std::abs(n2 - 1.0) > tol) throw std::invalid_argument("in_set_D: vector is not normalized");
    std::vector<double> probs(static_cast<std::size_t>(psi.size()));
    std::vector<double> phases(static_cast<std::size_t>(psi.size()), 0.0);
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        probs[static_cast<std::size_t>(i)] = std::norm(psi[i]);
        if (std::abs(psi[i]) > tol) phases[static_cast<std::size_t>(i)] = std::arg(psi[i]);
    }
    auto pv = ProbVector::try_make(std::move(probs), tol);
    if (!pv) return std::nullopt;
    return PureStateD(std::move(*pv), std::move(phases));
}

/// Split a member of D into its phase-free representative and the diagonal
/// phase unitary U with U |stripped> = |original>. U is itself an allowed
/// operation in every relative-passivity class, so the two states are
/// interconvertible for free.
inline std::pair<PureStateD, CMatrix> strip_phases(const PureStateD& psi) {
    const int d = psi.dim();
    CMatrix u = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i)
        u(i, i) = std::exp(Complex(0.0, psi.phases[static_cast<std::size_t>(i)]));
    return {PureStateD(psi.probs), u};
}

/// Activity monotone E_0^(-alpha) - sum_i p_i^2 E_i^(-alpha). Requires a
/// strictly positive spectrum.
inline double monotone_A(const PureStateD& psi, const Hamiltonian& H, double alpha) {
    if (psi.dim() != H.dim()) throw std::invalid_argument("monotone_A: dimension mismatch");
    if (alpha <= 0) throw std::invalid_argument("monotone_A: alpha must be positive");
    for (int i = 0; i < H.dim(); ++i)
        if (H[i] <= 0) throw std::invalid_argument("monotone_A: requires all energies positive");
    double acc = 0.0;
    for (int i = 0; i < H.dim(); ++i) acc += psi.probs[i] * psi.probs[i] * std::pow(H[i], -alpha);
    return std::pow(H[0], -alpha) - acc;
}

/// Activity monotone e^(-alpha E_0) - sum_i p_i^2 e^(-alpha E_i).
inline double monotone_B(const PureStateD& psi, const Hamiltonian& H, double alpha) {
    if (psi.dim() != H.dim()) throw std::invalid_argument("monotone_B: dimension mismatch");
    if (alpha <= 0) throw std::invalid_argument("monotone_B: alpha must be positive");
    double acc = 0.0;
    for (int i = 0; i < H.dim(); ++i) acc += psi.probs[i] * psi.probs[i] * std::exp(-alpha * H[i]);
    return std::exp(-alpha * H[0]) - acc;
}

}  // namespace plab
