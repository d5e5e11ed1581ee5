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

#include "plab/states.hpp"

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "plab/sampling.hpp"

using namespace plab;
using Catch::Matchers::WithinAbs;

TEST_CASE("is_passive", "[states]") {
    const Hamiltonian h({0.0, 1.0, 2.0});
    CHECK(is_passive(extremal_passive(0, 3).density(), h));
    CHECK(is_passive(CMatrix::Identity(3, 3) / 3.0, h));

    const Hamiltonian h2({0.0, 1.0});
    CMatrix plus = CMatrix::Constant(2, 2, 0.5);
    CHECK_FALSE(is_passive(plus, h2));
    CMatrix active = CMatrix::Zero(2, 2);
    active(0, 0) = 0.3;
    active(1, 1) = 0.7;
    CHECK_FALSE(is_passive(active, h2));
    CHECK_THROWS_AS(is_passive(plus, h), std::invalid_argument);
}

TEST_CASE("extremal passive states", "[states]") {
    CHECK(extremal_passive(0, 3).populations().entries() == std::vector<double>{1, 0, 0});
    CHECK(extremal_passive(1, 2).populations().entries() == std::vector<double>{0.5, 0.5});
    const auto s2 = extremal_passive(2, 3);
    for (int i = 0; i < 3; ++i) CHECK_THAT(s2[i], WithinAbs(1.0 / 3, 1e-15));
    CHECK_THROWS_AS(extremal_passive(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(extremal_passive(-1, 3), std::invalid_argument);
}

TEST_CASE("virtual temperatures", "[states]") {
    const Hamiltonian h({0.0, 1.0, 2.0});
    const PassiveState r({0.7, 0.2, 0.1});
    const auto table = virtual_temperatures(r, h);
    CHECK_THAT(*table.at(0, 1), WithinAbs(std::log(3.5), 1e-12));
    CHECK_THAT(*table.at(1, 2), WithinAbs(std::log(2.0), 1e-12));
    CHECK_THAT(*table.at(0, 2), WithinAbs(0.5 * std::log(7.0), 1e-12));

    // thermal state: every pair reports the same inverse temperature
    const double beta = 0.8;
    const auto th = virtual_temperatures(thermal_state(beta, h), h);
    for (const auto& [pair, value] : th.beta) CHECK_THAT(value, WithinAbs(beta, 1e-10));

    const auto gnd = virtual_temperatures(PassiveState({1.0, 0.0}), Hamiltonian({0.0, 1.5}));
    CHECK(*gnd.at(0, 1) == kInf);

    // degenerate gap conventions
    const auto deg = virtual_temperatures(PassiveState({0.6, 0.4}), Hamiltonian({1.0, 1.0}));
    CHECK(*deg.at(0, 1) == kInf);
    const auto deg2 = virtual_temperatures(PassiveState({0.5, 0.5}), Hamiltonian({1.0, 1.0}));
    CHECK(*deg2.at(0, 1) == 0.0);
}

TEST_CASE("is_virtually_cooler", "[states]") {
    const PassiveState p({0.5, 0.3, 0.2});
    CHECK(is_virtually_cooler(PassiveState({1.0, 0.0, 0.0}), p));
    CHECK(is_virtually_cooler(PassiveState({0.7, 0.2, 0.1}), p));
    CHECK_FALSE(is_virtually_cooler(p, PassiveState({0.7, 0.2, 0.1})));

    Sampler s(31);
    for (int n = 0; n < 100; ++n) {
        const int d = s.uniform_int(2, 6);
        const PassiveState any(s.nonincreasing(d));
        CHECK(is_virtually_cooler(any, PassiveState(ProbVector::uniform(d))));
        CHECK(is_virtually_cooler(PassiveState(ProbVector::ground(d)), any));
        CHECK(is_virtually_cooler(any, any));  // reflexive
    }

    // support condition: positive population over an empty reference level
    CHECK_FALSE(is_virtually_cooler(PassiveState({0.5, 0.3, 0.2}), PassiveState({0.7, 0.3, 0.0})));
}

TEST_CASE("vc order is transitive and antisymmetric on samples", "[states]") {
    Sampler s(32);
    for (int n = 0; n < 100; ++n) {
        const int d = s.uniform_int(2, 5);
        const PassiveState p(s.nonincreasing(d, 1e-3));
        const PassiveState q = s.vc_cooler(p);
        const PassiveState r = s.vc_cooler(q);
        CHECK(is_virtually_cooler(r, p));  // transitivity through q
        if (is_virtually_cooler(p, q)) {   // antisymmetry
            for (int i = 0; i < d; ++i) CHECK_THAT(p[i], WithinAbs(q[i], 1e-7));
        }
    }
}

TEST_CASE("vc order implies majorization and energy order", "[states]") {
    Sampler s(33);
    for (int n = 0; n < 300; ++n) {
        const int d = s.uniform_int(2, 6);
        const PassiveState p(s.nonincreasing(d, 1e-4));
        const PassiveState r = s.vc_cooler(p);
        REQUIRE(is_virtually_cooler(r, p, 1e-10));
        CHECK(majorizes(r.populations().entries(), p.populations().entries(), 1e-10));
        const Hamiltonian h = s.hamiltonian(d);
        CHECK(energy(r, h) <= energy(p, h) + 1e-10);
    }

    // converse failure: Hoffman-ordered but not vc-ordered
    const PassiveState r({0.5, 0.4, 0.1});
    const PassiveState p({0.45, 0.45, 0.1});
    CHECK(hoffman_majorizes(r.populations(), p.populations()));
    CHECK_FALSE(is_virtually_cooler(r, p));
}

TEST_CASE("convexity of the virtually-cooler set", "[states]") {
    Sampler s(34);
    for (int n = 0; n < 100; ++n) {
        const int d = s.uniform_int(2, 6);
        const PassiveState p(s.nonincreasing(d, 1e-4));
        const PassiveState a = s.vc_cooler(p);
        const PassiveState b = s.vc_cooler(p);
        const double t = s.uniform();
        std::vector<double> mixv(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) mixv[static_cast<std::size_t>(i)] = t * a[i] + (1 - t) * b[i];
        CHECK(is_virtually_cooler(PassiveState(ProbVector(std::move(mixv))), p, 1e-10));
    }
}

TEST_CASE("relative passivity witness", "[states]") {
    const PassiveState sigma({0.5, 0.3, 0.2});

    // rho = sigma: uniform on the support
    const CMatrix w_same = relative_passivity_witness(sigma.density(), sigma);
    for (int i = 0; i < 3; ++i) CHECK_THAT(w_same(i, i).real(), WithinAbs(1.0 / 3, 1e-12));

    const PassiveState rho({0.7, 0.2, 0.1});
    const CMatrix w = relative_passivity_witness(rho.density(), sigma);
    const double norm = 1.4 + 0.2 / 0.3 + 0.5;
    CHECK_THAT(w(0, 0).real(), WithinAbs(1.4 / norm, 1e-12));
    CHECK_THAT(w(1, 1).real(), WithinAbs((0.2 / 0.3) / norm, 1e-12));
    CHECK_THAT(w(2, 2).real(), WithinAbs(0.5 / norm, 1e-12));
    CHECK_THAT(w.trace().real(), WithinAbs(1.0, 1e-12));

    // a coherent input keeps its off-diagonals through the conjugation
    CMatrix coh = CMatrix::Zero(2, 2);
    coh << 0.5, 0.5, 0.5, 0.5;
    const CMatrix wc = relative_passivity_witness(coh, PassiveState({0.6, 0.4}));
    CHECK(std::abs(wc(0, 1)) > 0.1);
    CHECK_FALSE(is_passive_matrix(wc));

    // support violation and vanishing overlap are rejected
    CHECK_THROWS_AS(relative_passivity_witness(PassiveState({0.5, 0.3, 0.2}).density(),
                                               PassiveState({0.7, 0.3, 0.0})),
                    std::invalid_argument);

    // witness passivity coincides with the vc order for diagonal inputs
    Sampler s(35);
    for (int n = 0; n < 200; ++n) {
        const int d = s.uniform_int(2, 6);
        const PassiveState p(s.nonincreasing(d, 1e-4));
        const PassiveState r(s.nonincreasing(d, 1e-4));
        const CMatrix wit = relative_passivity_witness(r.density(), p);
        CHECK(is_passive_matrix(wit, 1e-10) == is_virtually_cooler(r, p, 1e-10));
    }
}

TEST_CASE("vc extreme points", "[states]") {
    const auto pts = vc_extreme_points(PassiveState({0.5, 0.3, 0.2}));
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].populations().entries() == std::vector<double>{1, 0, 0});
    CHECK_THAT(pts[1][0], WithinAbs(0.625, 1e-12));
    CHECK_THAT(pts[1][1], WithinAbs(0.375, 1e-12));
    CHECK_THAT(pts[1][2], WithinAbs(0.0, 1e-15));
    CHECK_THAT(pts[2][0], WithinAbs(0.5, 1e-12));

    // uniform reference: the extreme points are the extremal passive states
    const auto unif_pts = vc_extreme_points(PassiveState(ProbVector::uniform(4)));
    REQUIRE(unif_pts.size() == 4);
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
            CHECK_THAT(unif_pts[static_cast<std::size_t>(k)][i], WithinAbs(extremal_passive(k, 4)[i], 1e-12));

    const auto gnd_pts = vc_extreme_points(PassiveState({1.0, 0.0, 0.0}));
    REQUIRE(gnd_pts.size() == 1);
    CHECK(gnd_pts[0].populations().entries() == std::vector<double>{1, 0, 0});

    // every extreme point is itself virtually cooler than the reference,
    // and every sampled vc state is a convex combination of them
    Sampler s(36);
    for (int n = 0; n < 100; ++n) {
        const int d = s.uniform_int(2, 6);
        const PassiveState p(s.nonincreasing(d, 1e-4));
        const auto points = vc_extreme_points(p);
        std::vector<std::vector<double>> raw;
        for (const auto& pt : points) {
            CHECK(is_virtually_cooler(pt, p, 1e-10));
            raw.push_back(pt.populations().entries());
        }
        const PassiveState r = s.vc_cooler(p);
        CHECK(oracle::in_convex_hull(raw, r.populations().entries(), 1e-9));
    }
}

TEST_CASE("energy and ergotropy", "[states]") {
    const Hamiltonian h({0.0, 1.0, 2.0});
    CHECK_THAT(energy(PassiveState({1.0, 0.0, 0.0}), h), WithinAbs(0.0, 1e-15));
    CHECK_THAT(energy(PassiveState(ProbVector::uniform(3)), h), WithinAbs(1.0, 1e-12));
    CHECK_THAT(energy(PassiveState({0.5, 0.3, 0.2}), h), WithinAbs(0.7, 1e-12));

    // zero on passive states
    Sampler s(37);
    for (int n = 0; n < 100; ++n) {
        const int d = s.uniform_int(2, 5);
        const Hamiltonian hr = s.hamiltonian(d);
        CHECK_THAT(ergotropy(PassiveState(s.nonincreasing(d)).density(), hr), WithinAbs(0.0, 1e-12));
    }

    // hand value: qubit populations out of order
    CMatrix rho = CMatrix::Zero(2, 2);
    rho(0, 0) = 0.3;
    rho(1, 1) = 0.7;
    CHECK_THAT(ergotropy(rho, Hamiltonian({0.0, 1.0})), WithinAbs(0.4, 1e-12));

    // pure states: ergotropy equals mean energy above the ground level
    for (int n = 0; n < 100; ++n) {
        const int d = s.uniform_int(2, 5);
        const Hamiltonian hr = s.hamiltonian(d, 0.3);
        const PureStateD psi = s.pure_in_D(d);
        const CMatrix dm = psi.density();
        double expect = -hr[0];
        for (int i = 0; i < d; ++i) expect += psi.probs[i] * hr[i];
        CHECK_THAT(ergotropy(dm, hr), WithinAbs(expect, 1e-12));
    }

    // brute-force assignment oracle on random mixed states
    for (int n = 0; n < 100; ++n) {
        const int d = s.uniform_int(2, 3);
        const Hamiltonian hr = s.hamiltonian(d);
        const CMatrix rho2 = s.density(d);
        CHECK_THAT(ergotropy(rho2, hr),
                   WithinAbs(oracle::ergotropy_bruteforce(rho2, hr.energies()), 1e-9));
        CHECK(ergotropy(rho2, hr) >= -1e-12);
    }

    // invariant under diagonal phase unitaries
    for (int n = 0; n < 50; ++n) {
        const int d = s.uniform_int(2, 4);
        const Hamiltonian hr = s.hamiltonian(d);
        const CMatrix rho3 = s.density(d);
        CMatrix u = CMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i) u(i, i) = std::exp(Complex(0.0, s.uniform(-3.0, 3.0)));
        CHECK_THAT(ergotropy(CMatrix(u * rho3 * u.adjoint()), hr), WithinAbs(ergotropy(rho3, hr), 1e-10));
    }
}

TEST_CASE("set D membership and phases", "[states]") {
    CVector v(3);
    v << std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2);
    const auto psi = in_set_D(v);
    REQUIRE(psi.has_value());
    CHECK_THAT(psi->probs[0], WithinAbs(0.5, 1e-12));
    for (double th : psi->phases) CHECK_THAT(th, WithinAbs(0.0, 1e-12));

    CVector inc(2);
    inc << std::sqrt(0.2), std::sqrt(0.8);
    CHECK_FALSE(in_set_D(inc).has_value());

    CVector unnorm(2);
    unnorm << 1.0, 1.0;
    CHECK_THROWS_AS(in_set_D(unnorm), std::invalid_argument);

    // thermal amplitude profiles are members
    const Hamiltonian h({0.0, 0.7, 1.9});
    const PassiveState th = thermal_state(1.1, h);
    CVector tv(3);
    for (int i = 0; i < 3; ++i) tv[i] = std::sqrt(th[i]);
    CHECK(in_set_D(tv).has_value());

    // strip_phases round trip
    Sampler s(38);
    for (int n = 0; n < 50; ++n) {
        const PureStateD full = s.pure_in_D(s.uniform_int(2, 5));
        const auto [stripped, u] = strip_phases(full);
        for (double th2 : stripped.phases) CHECK(th2 == 0.0);
        const CVector back = u * stripped.vector();
        CHECK((back - full.vector()).cwiseAbs().maxCoeff() < 1e-12);
    }

    const PureStateD flat(ProbVector({0.5, 0.5}), {0.0, 3.141592653589793});
    const auto [strp, u] = strip_phases(flat);
    CHECK_THAT(u(1, 1).real(), WithinAbs(-1.0, 1e-12));
}

TEST_CASE("activity monotones", "[states]") {
    const PureStateD ground(ProbVector::ground(3));
    CHECK_THAT(monotone_A(ground, Hamiltonian({1.0, 2.0, 3.0}), 1.0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(monotone_B(ground, Hamiltonian({0.0, 1.0, 2.0}), 1.0), WithinAbs(0.0, 1e-12));

    const PureStateD unif2(ProbVector::uniform(2));
    CHECK_THAT(monotone_A(unif2, Hamiltonian({1.0, 2.0}), 1.0), WithinAbs(0.625, 1e-12));
    CHECK_THAT(monotone_B(unif2, Hamiltonian({0.0, 1.0}), 1.0),
               WithinAbs(1.0 - 0.25 * (1.0 + std::exp(-1.0)), 1e-12));

    // alpha -> 0 limit of the exponential family approaches the purity gap
    const PureStateD psi(ProbVector({0.5, 0.3, 0.2}));
    double purity = 0.0;
    for (int i = 0; i < 3; ++i) purity += psi.probs[i] * psi.probs[i];
    CHECK_THAT(monotone_B(psi, Hamiltonian({0.0, 1.0, 2.0}), 1e-8), WithinAbs(1.0 - purity, 1e-6));

    CHECK_THROWS_AS(monotone_A(psi, Hamiltonian({0.0, 1.0, 2.0}), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(monotone_A(psi, Hamiltonian({1.0, 2.0, 3.0}), 0.0), std::invalid_argument);
}
