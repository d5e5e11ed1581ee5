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

// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "plab/passivity.hpp"

using namespace plab;

namespace {

int g_failures = 0;

double run_criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
    return secs;
}

bool states_match(const CMatrix& a, const CMatrix& b, double tol) {
    return max_abs(CMatrix(a - b)) <= tol;
}

struct PairSample {
    ProbVector p;
    ProbVector q;
};

std::vector<PairSample> g_transformation_pairs;  // collected in criterion 2, reused in criterion 10

}  // namespace

int main() {
    // 1. Worked qutrit transformation: the generic construction reproduces
    //    the two-operator channel exactly (Choi distance 1e-10) and carries
    //    all three certificates.
    run_criterion(1, "qutrit fixture channel matches the two-operator construction", [](std::string& detail) {
        const auto t0 = std::chrono::steady_clock::now();
        const ProbVector q({0.5, 0.3, 0.2});
        const auto ex = qutrit_example(q);
        const KrausChannel generic = build_rppo_pure(ex.p, q);
        const double choi_err = max_abs(CMatrix(choi(generic) - choi(ex.channel)));
        const bool certs = is_trace_preserving(generic, 1e-10) && is_strictly_incoherent(generic, 1e-12) &&
                           is_rppo(generic, PassiveState(ex.p), PassiveState(q), 1e-10);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        detail = "choi error " + std::to_string(choi_err);
        return choi_err <= 1e-10 && certs && secs < 1.0;
    });

    // 2. Pure-state transformation channels across dimensions 2..6:
    //    psi -> phi and sigma(p) -> sigma(q) at 1e-9, certified RPPO and
    //    strictly incoherent, under 60 s in total.
    run_criterion(2, "random pure-state transformations build and certify", [](std::string& detail) {
        const auto t0 = std::chrono::steady_clock::now();
        Sampler s(20260811);
        int built = 0;
        for (int d = 2; d <= 6; ++d) {
            for (int n = 0; n < 200; ++n) {
                const auto [p, q] = s.hoffman_pair(d);
                const KrausChannel ch = build_rppo_pure(p, q);
                if (!states_match(ch.apply(PureStateD(p).density()), PureStateD(q).density(), 1e-9)) return false;
                if (!states_match(ch.apply(PassiveState(p).density()), PassiveState(q).density(), 1e-9)) return false;
                if (!is_rppo(ch, PassiveState(p), PassiveState(q), 1e-9)) return false;
                if (!is_strictly_incoherent(ch, 1e-12)) return false;
                g_transformation_pairs.push_back({p, q});
                ++built;
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        detail = std::to_string(built) + " channels";
        return built == 1000 && secs < 60.0;
    });

    // 3. Hoffman round trip: random convex mixtures of partition matrices
    //    pass the matrix conditions and decompose back within 1e-8.
    run_criterion(3, "hoffman decomposition round trip d=3..8", [](std::string& detail) {
        const auto t0 = std::chrono::steady_clock::now();
        Sampler s(303);
        double worst = 0.0;
        for (int d = 3; d <= 8; ++d) {
            for (int n = 0; n < 200; ++n) {
                const RMatrix r = s.random_hoffman(d, s.uniform_int(1, 6));
                if (!is_hoffman_matrix(r, 1e-9)) return false;
                const auto dec = decompose_hoffman(r, 1e-9);
                worst = std::max(worst, max_abs(RMatrix(dec.reconstruct() - r)));
                if (worst > 1e-8) return false;
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        detail = "worst reconstruction error " + std::to_string(worst);
        return secs < 30.0;
    });

    // 4. The virtually-cooler order implies majorization and energy order,
    //    1000 pairs per dimension at 1e-12; plus a frozen witness that the
    //    converse fails.
    run_criterion(4, "vc order implies majorization and energy order", [](std::string& detail) {
        Sampler s(404);
        for (int d = 2; d <= 6; ++d) {
            for (int n = 0; n < 1000; ++n) {
                const PassiveState p(s.nonincreasing(d, 1e-5));
                const PassiveState r = s.vc_cooler(p);
                if (!is_virtually_cooler(r, p, 1e-12)) return false;
                if (!majorizes(r.populations().entries(), p.populations().entries(), 1e-12)) return false;
                const Hamiltonian h = s.hamiltonian(d);
                if (energy(r, h) > energy(p, h) + 1e-12) return false;
            }
        }
        const PassiveState r_wit({0.5, 0.4, 0.1});
        const PassiveState p_wit({0.45, 0.45, 0.1});
        detail = "converse witness r=(0.5,0.4,0.1), p=(0.45,0.45,0.1)";
        return hoffman_majorizes(r_wit.populations(), p_wit.populations()) &&
               !is_virtually_cooler(r_wit, p_wit);
    });

    // 5. Qubit channels: the canonical five-operator family certifies as
    //    passivity preserving exactly on its constraint region, and the
    //    two-operator pure-state builder maps psi -> phi at 1e-10.
    run_criterion(5, "qubit five-operator family and pure-state builder", [](std::string& detail) {
        Sampler s(505);
        int good = 0, bad = 0;
        while (good < 500 || bad < 500) {
            const QubitCanonicalParams prm = random_qubit_canonical(s);
            if (prm.passivity_ok()) {
                if (good >= 500) continue;
                ++good;
                const KrausChannel ch = qubit_ppo_canonical(prm.a, prm.b, 1e-9);
                if (!is_ppo(ch, 1e-9)) return false;
            } else {
                if (bad >= 500) continue;
                ++bad;
                const KrausChannel ch = qubit_canonical_kraus(prm.a, prm.b, 1e-9);
                const CertReport rep = certify_ppo(ch, 1e-9);
                if (rep.verdict || rep.witnesses.empty()) return false;
                if (is_passive_matrix(rep.witnesses.front().output, 1e-9)) return false;
            }
        }
        for (int n = 0; n < 200; ++n) {
            const auto [p, q] = s.hoffman_pair(2);
            const KrausChannel ch = build_qubit_ppo_pure(p, q);
            if (!states_match(ch.apply(PureStateD(p).density()), PureStateD(q).density(), 1e-10)) return false;
            if (!is_ppo(ch, 1e-10)) return false;
        }
        detail = "500 satisfying, 500 violating, 200 pure builds";
        return true;
    });

    // 6. Energy-preserving dilations: random qubit dilations with a passive
    //    environment certify PPO; the qutrit swap dilation reproduces
    //    diag(q0+q1, 0, q2) and fails certification whenever q2 > 0.
    run_criterion(6, "stinespring dilations: qubit preserves, qutrit breaks", [](std::string& detail) {
        Sampler s(606);
        for (int n = 0; n < 200; ++n) {
            const Complex alpha = std::polar(s.uniform(0.0, 1.0), s.uniform(-3.141592, 3.141592));
            const KrausChannel ch = qubit_stinespring_ppo(alpha, s.uniform(0.5, 1.0));
            if (!is_ppo(ch, 1e-10)) return false;
        }
        int broken = 0;
        for (int n = 0; n < 200; ++n) {
            const ProbVector q = s.nonincreasing(3, 1e-3);  // q2 > 0 strictly
            const auto [ch, witness] = qutrit_stinespring_counterexample(q);
            CMatrix expected = CMatrix::Zero(3, 3);
            expected(0, 0) = q[0] + q[1];
            expected(2, 2) = q[2];
            if (!states_match(witness, expected, 1e-14)) return false;
            if (witness(1, 1).real() >= witness(2, 2).real()) return false;  // ordering broken at level 1
            if (is_ppo(ch, 1e-10)) return false;
            ++broken;
        }
        detail = std::to_string(broken) + " counterexamples reproduced";
        return true;
    });

    // 7. Products of adjacent mixing blocks on three levels: over the full
    //    21 x 21 grid, both orderings preserve the non-increasing cone
    //    exactly when both blocks are passive.
    run_criterion(7, "ordered t-transform products across the grid", [](std::string& detail) {
        int checked = 0;
        for (int ti = 0; ti <= 20; ++ti) {
            for (int si = 0; si <= 20; ++si) {
                const double t = 0.05 * ti;
                const double sv = 0.05 * si;
                const auto [fwd, rev] = ordered_product_passive(t, sv);
                const bool both_passive = (t >= 0.5) && (sv >= 0.5);
                if ((fwd && rev) != both_passive) return false;
                ++checked;
            }
        }
        detail = std::to_string(checked) + " grid points, zero exceptions";
        return checked == 441;
    });

    // 8. Refrigeration: the closed-form final bias matches the swap oracle
    //    at 1e-12, and virtually cooler machines never do worse.
    run_criterion(8, "virtual-qubit refrigeration ordering", [](std::string& detail) {
        Sampler s(808);
        for (int n = 0; n < 1000; ++n) {
            const int d = s.uniform_int(2, 6);
            const PassiveState r(s.nonincreasing(d));
            const Hamiltonian h = s.hamiltonian(d);
            ExternalQubit ext{0.0, h[d - 1] - h[0], 0.0, 0.0};
            ext.u0 = s.uniform();
            ext.u1 = 1.0 - ext.u0;
            const double closed = final_bias(virtual_qubit(r, h), ext);
            if (std::abs(swap_simulate(r, h, ext).bias() - closed) > 1e-12) return false;
        }
        for (int d = 2; d <= 6; ++d) {
            for (int n = 0; n < 500; ++n) {
                const PassiveState p(s.nonincreasing(d, 1e-5));
                const PassiveState r = s.vc_cooler(p);
                const Hamiltonian h = s.hamiltonian(d);
                ExternalQubit ext{0.0, h[d - 1] - h[0], 0.0, 0.0};
                ext.u0 = s.uniform();
                ext.u1 = 1.0 - ext.u0;
                const auto cmp = compare_refrigeration(r, p, h, ext);
                if (!cmp.vc_holds || !cmp.bias_ordered(1e-12) || !cmp.energy_ordered(1e-12)) return false;
            }
        }
        detail = "1000 oracle matches, 2500 ordered pairs";
        return true;
    });

    // 9. Ergotropy: mean energy above the ground level on the pure
    //    non-increasing family, zero on passive states, and equal to the
    //    exhaustive assignment oracle on random mixed states.
    run_criterion(9, "ergotropy closed form and brute-force oracle", [](std::string& detail) {
        Sampler s(909);
        for (int n = 0; n < 200; ++n) {
            const int d = s.uniform_int(2, 6);
            const Hamiltonian h = s.hamiltonian(d, s.uniform(0.0, 1.0));
            const PureStateD psi = s.pure_in_D(d);
            double expect = -h[0];
            for (int i = 0; i < d; ++i) expect += psi.probs[i] * h[i];
            if (std::abs(ergotropy(psi.density(), h) - expect) > 1e-12) return false;
        }
        for (int n = 0; n < 200; ++n) {
            const int d = s.uniform_int(2, 6);
            const Hamiltonian h = s.hamiltonian(d);
            if (std::abs(ergotropy(PassiveState(s.nonincreasing(d)).density(), h)) > 1e-12) return false;
        }
        // exhaustive assignment oracle, dimensions two and three
        for (int n = 0; n < 100; ++n) {
            const int d = s.uniform_int(2, 3);
            const Hamiltonian h = s.hamiltonian(d);
            const CMatrix rho = s.density(d);
            Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
            std::vector<double> lambda(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) lambda[static_cast<std::size_t>(i)] = es.eigenvalues()[i];
            std::sort(lambda.begin(), lambda.end());
            double best = kInf;
            std::vector<int> perm(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
            do {
                double e = 0.0;
                for (int i = 0; i < d; ++i) e += lambda[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] * h[i];
                best = std::min(best, e);
            } while (std::next_permutation(perm.begin(), perm.end()));
            if (std::abs(ergotropy(rho, h) - (energy(rho, h) - best)) > 1e-9) return false;
        }
        detail = "200 pure, 200 passive, 100 oracle states";
        return true;
    });

    // 10. Both activity monotones decrease along every transformation
    //     sampled in criterion 2, for alpha in {0.5, 1, 2}, slack 1e-10.
    run_criterion(10, "activity monotones decrease along transformations", [](std::string& detail) {
        if (g_transformation_pairs.empty()) {
            detail = "criterion 2 produced no transformations";
            return false;
        }
        Sampler s(1010);
        for (const auto& [p, q] : g_transformation_pairs) {
            const Hamiltonian h = s.hamiltonian(p.dim(), s.uniform(0.1, 1.0));  // positive spectrum
            const PureStateD psi(p);
            const PureStateD phi(q);
            for (const double alpha : {0.5, 1.0, 2.0}) {
                if (monotone_A(phi, h, alpha) > monotone_A(psi, h, alpha) + 1e-10) return false;
                if (monotone_B(phi, h, alpha) > monotone_B(psi, h, alpha) + 1e-10) return false;
            }
        }
        detail = std::to_string(g_transformation_pairs.size()) + " transformations x 3 alphas";
        return true;
    });

    std::printf("%s: %d/10 criteria passed\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
