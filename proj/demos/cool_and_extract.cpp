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

// Walkthrough: order two passive states, build the channel that moves a
// pure state between their amplitude profiles, certify it, and compare the
// two states as refrigerators for an external qubit.

#include <cstdio>

#include "plab/passivity.hpp"

using namespace plab;

int main() {
    const ProbVector q({0.5, 0.3, 0.2});
    const ProbVector p({0.4, 0.4, 0.2});

    std::printf("p <_h q            : %s\n", hoffman_majorizes(q, p) ? "yes" : "no");

    const RMatrix witness = find_hoffman_matrix(p, q);
    std::printf("witness R(0,0)     : %.6f\n", witness(0, 0));

    const KrausChannel channel = build_rppo_pure(p, q);
    std::printf("kraus operators    : %zu\n", channel.kraus.size());
    std::printf("trace preserving   : %s\n", is_trace_preserving(channel) ? "yes" : "no");
    std::printf("strictly incoherent: %s\n", is_strictly_incoherent(channel) ? "yes" : "no");
    std::printf("relative passivity : %s\n",
                is_rppo(channel, PassiveState(p), PassiveState(q)) ? "preserved" : "broken");

    const CMatrix image = channel.apply(PureStateD(p).density());
    std::printf("|<phi|Phi(psi)|phi>| error: %.2e\n",
                max_abs(CMatrix(image - PureStateD(q).density())));

    const Hamiltonian h({0.0, 1.0, 2.0});
    const PureStateD psi(p);
    std::printf("ergotropy of psi   : %.6f\n", ergotropy(psi.density(), h));

    const PassiveState cooler({0.7, 0.2, 0.1});
    ExternalQubit ext{0.0, 2.0, 0.5, 0.5};
    const auto cmp = compare_refrigeration(cooler, PassiveState(q), h, ext);
    std::printf("fridge bias %.3f (cooler machine) vs %.3f -- ordering %s\n", cmp.bias_r, cmp.bias_p,
                cmp.bias_ordered() ? "holds" : "violated");
    return 0;
}
