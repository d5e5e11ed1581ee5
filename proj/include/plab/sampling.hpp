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
#include <array>
#include <optional>
#include <random>
#include <vector>

#include "plab/channels.hpp"
#include "plab/core.hpp"
#include "plab/majorization.hpp"
#include "plab/states.hpp"

namespace plab {

/// Deterministic generators for every randomized cross-check in the test
/// suite and CLI. The same seed reproduces the same stream.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed = 0x5eed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    int uniform_int(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    /// Random point of the simplex sorted non-increasing; min_entry bounds
    /// every coordinate away from zero when positive.
    ProbVector nonincreasing(int d, double min_entry = 0.0) {
        std::vector<double> v(static_cast<std::size_t>(d));
        double sum = 0.0;
        std::exponential_distribution<double> exp1(1.0);
        for (double& x : v) {
            x = exp1(rng_);
            sum += x;
        }
        const double squeeze = 1.0 - min_entry * d;
        for (double& x : v) x = min_entry + squeeze * (x / sum);
        std::sort(v.begin(), v.end(), std::greater<double>());
        return ProbVector(std::move(v));
    }

    /// Random Hoffman matrix: convex mixture of a few partition matrices.
    RMatrix random_hoffman(int d, int terms = 3) {
        const auto parts = enumerate_partitions(d);
        RMatrix acc = RMatrix::Zero(d, d);
        std::vector<double> w(static_cast<std::size_t>(terms));
        double sum = 0.0;
        for (double& x : w) {
            x = uniform(0.05, 1.0);
            sum += x;
        }
        for (int k = 0; k < terms; ++k) {
            const auto& tau = parts[static_cast<std::size_t>(uniform_int(0, static_cast<int>(parts.size()) - 1))];
            acc += (w[static_cast<std::size_t>(k)] / sum) * partition_matrix(tau);
        }
        return acc;
    }

    /// Hoffman-ordered pair: q sampled on the sorted simplex, p = R q for a
    /// random Hoffman R, so p <_h q holds by construction.
    std::pair<ProbVector, ProbVector> hoffman_pair(int d, double min_entry = 1e-3) {
        const ProbVector q = nonincreasing(d, min_entry);
        const RMatrix R = random_hoffman(d);
        std::vector<double> p(static_cast<std::size_t>(d), 0.0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) p[static_cast<std::size_t>(i)] += R(i, j) * q[j];
        return {ProbVector(std::move(p)), q};
    }

    /// Random state virtually cooler than p: a convex mixture of the
    /// extreme points of T_p.
    PassiveState vc_cooler(const PassiveState& p) {
        const auto pts = vc_extreme_points(p);
        std::vector<double> w(pts.size());
        double sum = 0.0;
        for (double& x : w) {
            x = uniform(0.0, 1.0);
            sum += x;
        }
        std::vector<double> r(static_cast<std::size_t>(p.dim()), 0.0);
        for (std::size_t k = 0; k < pts.size(); ++k)
            for (int i = 0; i < p.dim(); ++i) r[static_cast<std::size_t>(i)] += (w[k] / sum) * pts[k][i];
        return PassiveState(ProbVector(std::move(r)));
    }

    /// Random non-decreasing energy list starting at e0 with gaps in
    /// (0, max_gap].
    Hamiltonian hamiltonian(int d, double e0 = 0.0, double max_gap = 2.0) {
        std::vector<double> e(static_cast<std::size_t>(d));
        double cur = e0;
        for (int i = 0; i < d; ++i) {
            e[static_cast<std::size_t>(i)] = cur;
            cur += uniform(1e-3, max_gap);
        }
        return Hamiltonian(std::move(e));
    }

    /// Haar-random pure state vector.
    CVector pure(int d) {
        std::normal_distribution<double> g(0.0, 1.0);
        CVector v(d);
        for (int i = 0; i < d; ++i) v[i] = Complex(g(rng_), g(rng_));
        return v / v.norm();
    }

    /// Random full-rank density matrix (Ginibre ensemble).
    CMatrix density(int d) {
        std::normal_distribution<double> g(0.0, 1.0);
        CMatrix a(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng_), g(rng_));
        CMatrix rho = a * a.adjoint();
        return rho / rho.trace().real();
    }

    /// Random member of the set D (optionally with nonzero phases).
    PureStateD pure_in_D(int d, bool with_phases = true, double min_entry = 1e-3) {
        ProbVector probs = nonincreasing(d, min_entry);
        std::vector<double> phases(static_cast<std::size_t>(d), 0.0);
        if (with_phases)
            for (double& th : phases) th = uniform(-3.141592653589793, 3.141592653589793);
        return PureStateD(std::move(probs), std::move(phases));
    }

  private:
    std::mt19937_64 rng_;
};

/// Parameter set of the canonical five-operator incoherent qubit family.
struct QubitCanonicalParams {
    std::array<double, 5> a;
    std::array<Complex, 4> b;

    bool passivity_ok() const {
        const double lhs = a[0] * a[0] + a[2] * a[2] + a[4] * a[4];
        const double rhs = a[1] * a[1] + a[3] * a[3];
        if (lhs < rhs) return false;
        return lhs + std::norm(b[0]) + std::norm(b[3]) >= rhs + std::norm(b[1]) + std::norm(b[2]);
    }
};

/// Random parameters satisfying the trace-preservation constraints
/// (sum a^2 = 1, sum |b|^2 = 1, a1 b1 + a2 b2 = 0); passivity is left to
/// the caller, who can filter on passivity_ok().
inline QubitCanonicalParams random_qubit_canonical(Sampler& s) {
    std::normal_distribution<double> g(0.0, 1.0);
    while (true) {
        QubitCanonicalParams prm{};
        double na = 0.0;
        for (double& x : prm.a) {
            x = g(s.rng());
            na += x * x;
        }
        if (na < 1e-12) continue;
        for (double& x : prm.a) x /= std::sqrt(na);
        for (Complex& x : prm.b) x = Complex(g(s.rng()), g(s.rng()));
        // project the bilinear constraint a1 b1 + a2 b2 = 0 away
        const double c2 = prm.a[0] * prm.a[0] + prm.a[1] * prm.a[1];
        if (c2 > 1e-12) {
            const Complex dot = prm.a[0] * prm.b[0] + prm.a[1] * prm.b[1];
            prm.b[0] -= prm.a[0] * dot / c2;
            prm.b[1] -= prm.a[1] * dot / c2;
        }
        double nb = 0.0;
        for (Complex x : prm.b) nb += std::norm(x);
        if (nb < 1e-12) continue;
        for (Complex& x : prm.b) x /= std::sqrt(nb);
        return prm;
    }
}

// ---------------------------------------------------------------------------
// Randomized cross-validation of the extremal-state certifiers
// ---------------------------------------------------------------------------

/// Fuzz a PPO verdict with random passive inputs; returns a violating input
/// if one is found.
inline std::optional<CMatrix> fuzz_ppo(const KrausChannel& phi, int samples, Sampler& s,
                                       double tol = kDefaultTol) {
    for (int n = 0; n < samples; ++n) {
        const PassiveState in(s.nonincreasing(phi.in_dim));
        if (!is_passive_matrix(phi.apply(in), tol)) return in.density();
    }
    return std::nullopt;
}

/// Fuzz an RPPO verdict with random states virtually cooler than p.
inline std::optional<CMatrix> fuzz_rppo(const KrausChannel& phi, const PassiveState& p,
                                        const PassiveState& q, int samples, Sampler& s,
                                        double tol = kDefaultTol) {
    for (int n = 0; n < samples; ++n) {
        const PassiveState in = s.vc_cooler(p);
        const CMatrix out = phi.apply(in);
        if (!is_passive_matrix(out, tol)) return in.density();
        std::vector<double> pop(static_cast<std::size_t>(phi.out_dim));
        for (int i = 0; i < phi.out_dim; ++i)
            pop[static_cast<std::size_t>(i)] = std::max(0.0, out(i, i).real());
        auto pv = ProbVector::try_make(std::move(pop), 100 * tol);
        if (!pv || !is_virtually_cooler(PassiveState(*pv), q, tol)) return in.density();
    }
    return std::nullopt;
}

/// Fuzz an ABO verdict with random (generally coherent) inputs.
inline std::optional<CMatrix> fuzz_abo(const KrausChannel& phi, int samples, Sampler& s,
                                       double tol = kDefaultTol) {
    for (int n = 0; n < samples; ++n) {
        const CMatrix in = s.density(phi.in_dim);
        if (!is_passive_matrix(phi.apply(in), tol)) return in;
    }
    return std::nullopt;
}

/// Fuzz an incoherence verdict with random diagonal inputs.
inline std::optional<CMatrix> fuzz_incoherent(const KrausChannel& phi, int samples, Sampler& s,
                                              double tol = kDefaultTol) {
    for (int n = 0; n < samples; ++n) {
        CMatrix in = CMatrix::Zero(phi.in_dim, phi.in_dim);
        double sum = 0.0;
        std::vector<double> w(static_cast<std::size_t>(phi.in_dim));
        for (double& x : w) {
            x = s.uniform(0.0, 1.0);
            sum += x;
        }
        for (int i = 0; i < phi.in_dim; ++i) in(i, i) = w[static_cast<std::size_t>(i)] / sum;
        const CMatrix out = phi.apply(in);
        for (int r = 0; r < phi.out_dim; ++r)
            for (int c = 0; c < phi.out_dim; ++c)
                if (r != c && std::abs(out(r, c)) > tol) return in;
    }
    return std::nullopt;
}

}  // namespace plab
