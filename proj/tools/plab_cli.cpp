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

// Command-line front end: JSON in, JSON/CSV out, stable exit codes.
//   0  predicate true / build succeeded
//   1  predicate false / certification failed
//   2  input or usage error

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "plab/json_io.hpp"
#include "plab/passivity.hpp"

using namespace plab;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

/// Inline vectors accept plain numbers and exact fractions like "1/3",
/// parsed before float conversion: "[1/3, 1/3, 1/3]".
std::vector<double> parse_inline_vector(const std::string& text) {
    std::string body = text;
    auto trim = [](std::string& s) {
        const auto a = s.find_first_not_of(" \t\n\r");
        const auto b = s.find_last_not_of(" \t\n\r");
        s = (a == std::string::npos) ? std::string{} : s.substr(a, b - a + 1);
    };
    trim(body);
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw std::invalid_argument("expected an inline vector like [0.5, 0.3, 0.2]");
    body = body.substr(1, body.size() - 2);
    std::vector<double> out;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        trim(tok);
        if (tok.empty()) throw std::invalid_argument("empty vector entry");
        const auto slash = tok.find('/');
        std::size_t used = 0;
        if (slash != std::string::npos) {
            std::string num = tok.substr(0, slash), den = tok.substr(slash + 1);
            trim(num);
            trim(den);
            const double n = std::stod(num, &used);
            if (used != num.size()) throw std::invalid_argument("bad fraction numerator: " + tok);
            const double d = std::stod(den, &used);
            if (used != den.size() || d == 0.0) throw std::invalid_argument("bad fraction: " + tok);
            out.push_back(n / d);
        } else {
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("bad number: " + tok);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty vector");
    return out;
}

/// Structured arguments are inline JSON when they start with '[' or '{',
/// otherwise a path to a JSON file.
json load_json_arg(const std::string& arg) {
    std::string text = arg;
    const auto first = text.find_first_not_of(" \t\n\r");
    if (first == std::string::npos) throw std::invalid_argument("empty JSON argument");
    if (text[first] != '[' && text[first] != '{') {
        std::ifstream in(arg);
        if (!in) throw std::invalid_argument("cannot open file: " + arg);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return json::parse(text);  // parse_error carries position diagnostics
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json base_report(const std::string& command) {
    return json{{"schema", kSchemaTag}, {"command", command}};
}

json witness_list(const CertReport& rep) {
    json arr = json::array();
    for (const auto& w : rep.witnesses)
        arr.push_back(json{{"label", w.label}, {"input", to_json(w.input)}, {"output", to_json(w.output)}});
    return arr;
}

struct CliState {
    double tol = kDefaultTol;
    std::uint64_t seed = 1;
    int fuzz = 100;
    std::function<int()> run;
};

int run_certify(CliState& st, const std::string& what, const std::string& channel_arg,
                const std::string& p_arg, const std::string& q_arg) {
    const KrausChannel ch = channel_from_json(load_json_arg(channel_arg));
    Sampler sampler(st.seed);
    json rep = base_report("certify " + what);
    rep["trace_preserving"] = is_trace_preserving(ch, st.tol);
    bool verdict = false;

    if (what == "ppo") {
        const CertReport c = certify_ppo(ch, st.tol);
        verdict = c.verdict;
        rep["witnesses"] = witness_list(c);
        if (verdict && st.fuzz > 0) {
            const auto bad = fuzz_ppo(ch, st.fuzz, sampler, st.tol);
            rep["fuzz"] = json{{"samples", st.fuzz}, {"violation", bad ? to_json(*bad) : json(nullptr)}};
            verdict = verdict && !bad;
        }
    } else if (what == "rppo") {
        const PassiveState p(ProbVector(parse_inline_vector(p_arg), st.tol));
        const PassiveState q(ProbVector(parse_inline_vector(q_arg), st.tol));
        const CertReport c = certify_rppo(ch, p, q, st.tol);
        verdict = c.verdict;
        rep["witnesses"] = witness_list(c);
        if (verdict && st.fuzz > 0) {
            const auto bad = fuzz_rppo(ch, p, q, st.fuzz, sampler, st.tol);
            rep["fuzz"] = json{{"samples", st.fuzz}, {"violation", bad ? to_json(*bad) : json(nullptr)}};
            verdict = verdict && !bad;
        }
    } else if (what == "abo") {
        const auto povm = is_abo(ch, st.tol);
        verdict = povm.has_value();
        if (povm) rep["povm"] = to_json(*povm);
        if (verdict && st.fuzz > 0) {
            const auto bad = fuzz_abo(ch, st.fuzz, sampler, st.tol);
            rep["fuzz"] = json{{"samples", st.fuzz}, {"violation", bad ? to_json(*bad) : json(nullptr)}};
            verdict = verdict && !bad;
        }
    } else if (what == "incoherent") {
        const CertReport c = certify_incoherent(ch, st.tol);
        verdict = c.verdict;
        rep["witnesses"] = witness_list(c);
        if (verdict && st.fuzz > 0) {
            const auto bad = fuzz_incoherent(ch, st.fuzz, sampler, st.tol);
            rep["fuzz"] = json{{"samples", st.fuzz}, {"violation", bad ? to_json(*bad) : json(nullptr)}};
            verdict = verdict && !bad;
        }
    } else {  // strict
        const CertReport c = certify_strictly_incoherent(ch, st.tol);
        verdict = c.verdict;
        rep["witnesses"] = witness_list(c);
    }
    rep["property"] = what;
    rep["verdict"] = verdict;
    emit(rep);
    return verdict ? kExitTrue : kExitFalse;
}

/// Shared epilogue of the channel builders: emit the channel with its
/// certification verdicts.
int emit_built_channel(const std::string& command, const KrausChannel& ch, double tol,
                       const json& extra = json::object()) {
    json rep = base_report(command);
    rep["channel"] = to_json(ch);
    rep["verdicts"] = json{{"trace_preserving", is_trace_preserving(ch, tol)},
                           {"incoherent", is_incoherent(ch, tol)},
                           {"strictly_incoherent", is_strictly_incoherent(ch, tol)}};
    for (auto it = extra.begin(); it != extra.end(); ++it) rep["verdicts"][it.key()] = it.value();
    emit(rep);
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"passivity-lab: verification and synthesis of passive states and the channels that preserve them"};
    app.require_subcommand(1);

    CliState st;
    app.add_option("--tol", st.tol, "numerical tolerance for all predicates")->capture_default_str();
    app.add_option("--seed", st.seed, "seed for randomized cross-validation")->capture_default_str();
    app.add_option("--fuzz", st.fuzz, "random cross-check samples for certifiers (0 disables)")
        ->capture_default_str();

    // --- check ---------------------------------------------------------
    auto* check = app.add_subcommand("check", "order and property predicates");
    check->require_subcommand(1);

    {
        auto* c = check->add_subcommand("passive", "is the state passive for the given energies?");
        auto rho = std::make_shared<std::string>();
        auto energies = std::make_shared<std::string>();
        c->add_option("--rho", *rho, "density matrix JSON {re, im} or file")->required();
        c->add_option("--energies", *energies, "energy list, e.g. [0,1,2]")->required();
        c->callback([&st, rho, energies] {
            st.run = [&st, rho, energies] {
                const Hamiltonian h{parse_inline_vector(*energies)};
                const CMatrix m = cmatrix_from_json(load_json_arg(*rho));
                const bool verdict = is_passive(m, h, st.tol);
                json rep = base_report("check passive");
                rep["verdict"] = verdict;
                emit(rep);
                return verdict ? kExitTrue : kExitFalse;
            };
        });
    }
    {
        auto* c = check->add_subcommand("vc", "is r virtually cooler than p?");
        auto r = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        c->add_option("--r", *r, "candidate cooler populations")->required();
        c->add_option("--p", *p, "reference populations")->required();
        c->callback([&st, r, p] {
            st.run = [&st, r, p] {
                const PassiveState rs(ProbVector(parse_inline_vector(*r), st.tol));
                const PassiveState ps(ProbVector(parse_inline_vector(*p), st.tol));
                const bool verdict = is_virtually_cooler(rs, ps, st.tol);
                json rep = base_report("check vc");
                rep["verdict"] = verdict;
                emit(rep);
                return verdict ? kExitTrue : kExitFalse;
            };
        });
    }
    {
        auto* c = check->add_subcommand("hoffman", "is p Hoffman-majorized by q?");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto witness = std::make_shared<bool>(false);
        c->add_option("--p", *p)->required();
        c->add_option("--q", *q)->required();
        c->add_flag("--witness", *witness, "also produce a Hoffman matrix R with R q = p");
        c->callback([&st, p, q, witness] {
            st.run = [&st, p, q, witness] {
                const ProbVector pv(parse_inline_vector(*p), st.tol);
                const ProbVector qv(parse_inline_vector(*q), st.tol);
                const bool verdict = hoffman_majorizes(qv, pv, st.tol);
                json rep = base_report("check hoffman");
                rep["verdict"] = verdict;
                if (verdict && *witness) rep["witness"] = to_json(find_hoffman_matrix(pv, qv, st.tol));
                emit(rep);
                return verdict ? kExitTrue : kExitFalse;
            };
        });
    }
    {
        auto* c = check->add_subcommand("asym-hoffman", "does a cone-preserving doubly-stochastic witness map q to p?");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        c->add_option("--p", *p)->required();
        c->add_option("--q", *q)->required();
        c->callback([&st, p, q] {
            st.run = [&st, p, q] {
                const ProbVector pv(parse_inline_vector(*p), st.tol);
                const ProbVector qv(parse_inline_vector(*q), st.tol);
                const auto d = asymmetric_hoffman_majorizes(qv, pv, st.tol);
                json rep = base_report("check asym-hoffman");
                rep["verdict"] = d.has_value();
                if (d) rep["witness"] = to_json(*d);
                emit(rep);
                return d ? kExitTrue : kExitFalse;
            };
        });
    }

    // --- decompose -----------------------------------------------------
    auto* decompose = app.add_subcommand("decompose", "convex decompositions");
    decompose->require_subcommand(1);
    {
        auto* c = decompose->add_subcommand("hoffman", "weights over partition matrices");
        auto matrix = std::make_shared<std::string>();
        c->add_option("--matrix", *matrix, "square matrix as JSON rows or file")->required();
        c->callback([&st, matrix] {
            st.run = [&st, matrix] {
                const RMatrix m = rmatrix_from_json(load_json_arg(*matrix));
                const auto dec = decompose_hoffman(m, st.tol);
                json rep = base_report("decompose hoffman");
                rep["decomposition"] = to_json(dec);
                rep["reconstruction_error"] = max_abs(RMatrix(dec.reconstruct() - m));
                emit(rep);
                return kExitTrue;
            };
        });
    }

    // --- build ---------------------------------------------------------
    auto* build = app.add_subcommand("build", "constructive channel factories");
    build->require_subcommand(1);
    {
        auto* c = build->add_subcommand("rppo", "pure-state transformation channel for p -> q");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        c->add_option("--p", *p)->required();
        c->add_option("--q", *q)->required();
        c->callback([&st, p, q] {
            st.run = [&st, p, q] {
                const ProbVector pv(parse_inline_vector(*p), st.tol);
                const ProbVector qv(parse_inline_vector(*q), st.tol);
                const KrausChannel ch = build_rppo_pure(pv, qv, st.tol);
                return emit_built_channel("build rppo", ch, st.tol,
                                          json{{"rppo", is_rppo(ch, PassiveState(pv), PassiveState(qv), st.tol)}});
            };
        });
    }
    {
        auto* c = build->add_subcommand("qubit-ppo", "two-operator qubit channel for p -> q");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        c->add_option("--p", *p)->required();
        c->add_option("--q", *q)->required();
        c->callback([&st, p, q] {
            st.run = [&st, p, q] {
                const ProbVector pv(parse_inline_vector(*p), st.tol);
                const ProbVector qv(parse_inline_vector(*q), st.tol);
                const KrausChannel ch = build_qubit_ppo_pure(pv, qv, st.tol);
                return emit_built_channel("build qubit-ppo", ch, st.tol, json{{"ppo", is_ppo(ch, st.tol)}});
            };
        });
    }
    {
        auto* c = build->add_subcommand("abo", "measure-and-prepare channel from an ordered POVM");
        auto povm = std::make_shared<std::string>();
        c->add_option("--povm", *povm, "POVM JSON {elements: [...]} or file")->required();
        c->callback([&st, povm] {
            st.run = [&st, povm] {
                const PovmSet set = povm_from_json(load_json_arg(*povm));
                const KrausChannel ch = build_abo(set, st.tol);
                return emit_built_channel("build abo", ch, st.tol, json{{"ppo", is_ppo(ch, st.tol)},
                                                                        {"abo", is_abo(ch, st.tol).has_value()}});
            };
        });
    }
    {
        auto* c = build->add_subcommand("athermal", "channel preparing the thermal state for every input");
        auto beta = std::make_shared<double>(1.0);
        auto energies = std::make_shared<std::string>();
        c->add_option("--beta", *beta, "inverse temperature")->required();
        c->add_option("--energies", *energies)->required();
        c->callback([&st, beta, energies] {
            st.run = [&st, beta, energies] {
                const Hamiltonian h{parse_inline_vector(*energies)};
                const KrausChannel ch = build_abo(athermal_povm(*beta, h), st.tol);
                return emit_built_channel("build athermal", ch, st.tol, json{{"abo", is_abo(ch, st.tol).has_value()}});
            };
        });
    }
    {
        auto* c = build->add_subcommand("stinespring", "qubit dilation with an energy-preserving unitary and passive environment");
        auto are = std::make_shared<double>(1.0);
        auto aim = std::make_shared<double>(0.0);
        auto qenv = std::make_shared<double>(1.0);
        c->add_option("--alpha-re", *are, "real part of the transmission amplitude")->required();
        c->add_option("--alpha-im", *aim, "imaginary part of the transmission amplitude");
        c->add_option("--q-env", *qenv, "environment ground population, in [1/2, 1]")->required();
        c->callback([&st, are, aim, qenv] {
            st.run = [&st, are, aim, qenv] {
                const KrausChannel ch = qubit_stinespring_ppo(Complex(*are, *aim), *qenv, st.tol);
                return emit_built_channel("build stinespring", ch, st.tol, json{{"ppo", is_ppo(ch, st.tol)}});
            };
        });
    }

    // --- certify -------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "channel property certification with random cross-checks");
    certify->require_subcommand(1);
    for (const std::string what : {"ppo", "rppo", "abo", "incoherent", "strict"}) {
        auto* c = certify->add_subcommand(what);
        auto channel = std::make_shared<std::string>();
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        c->add_option("--channel", *channel, "channel JSON {in_dim, out_dim, kraus} or file")->required();
        if (what == "rppo") {
            c->add_option("--p", *p, "input reference populations")->required();
            c->add_option("--q", *q, "output reference populations")->required();
        }
        c->callback([&st, what, channel, p, q] {
            st.run = [&st, what, channel, p, q] { return run_certify(st, what, *channel, *p, *q); };
        });
    }

    // --- scalar reports --------------------------------------------------
    {
        auto* c = app.add_subcommand("ergotropy", "unitary extractable work of a state");
        auto rho = std::make_shared<std::string>();
        auto energies = std::make_shared<std::string>();
        c->add_option("--rho", *rho, "density matrix JSON {re, im} or file")->required();
        c->add_option("--energies", *energies)->required();
        c->callback([&st, rho, energies] {
            st.run = [&st, rho, energies] {
                const Hamiltonian h{parse_inline_vector(*energies)};
                const CMatrix m = cmatrix_from_json(load_json_arg(*rho));
                json rep = base_report("ergotropy");
                rep["ergotropy"] = ergotropy(m, h);
                rep["energy"] = energy(m, h);
                emit(rep);
                return kExitTrue;
            };
        });
    }
    {
        auto* c = app.add_subcommand("monotone", "activity monotones of a pure state with non-increasing profile");
        auto probs = std::make_shared<std::string>();
        auto energies = std::make_shared<std::string>();
        auto alpha = std::make_shared<double>(1.0);
        c->add_option("--probs", *probs)->required();
        c->add_option("--energies", *energies)->required();
        c->add_option("--alpha", *alpha)->capture_default_str();
        c->callback([&st, probs, energies, alpha] {
            st.run = [&st, probs, energies, alpha] {
                const Hamiltonian h{parse_inline_vector(*energies)};
                const PureStateD psi{ProbVector(parse_inline_vector(*probs), st.tol)};
                json rep = base_report("monotone");
                rep["alpha"] = *alpha;
                rep["monotone_B"] = monotone_B(psi, h, *alpha);
                bool positive = true;
                for (int i = 0; i < h.dim(); ++i) positive = positive && h[i] > 0;
                if (positive)
                    rep["monotone_A"] = monotone_A(psi, h, *alpha);
                else
                    rep["monotone_A"] = nullptr;  // undefined for non-positive spectra
                emit(rep);
                return kExitTrue;
            };
        });
    }

    // --- fridge sweep ----------------------------------------------------
    auto* fridge = app.add_subcommand("fridge", "virtual-qubit refrigeration protocols");
    fridge->require_subcommand(1);
    {
        auto* c = fridge->add_subcommand("sweep", "random vc-ordered machine pairs, CSV output");
        auto d = std::make_shared<int>(3);
        auto trials = std::make_shared<int>(100);
        auto bext = std::make_shared<double>(0.0);
        auto bext_set = std::make_shared<bool>(false);
        c->add_option("--d", *d, "machine dimension")->capture_default_str();
        c->add_option("--trials", *trials)->capture_default_str();
        c->add_option("--b-ext", *bext, "fixed external bias (random when omitted)")
            ->each([bext_set](const std::string&) { *bext_set = true; });
        c->callback([&st, d, trials, bext, bext_set] {
            st.run = [&st, d, trials, bext, bext_set] {
                if (*d < 2) throw std::invalid_argument("fridge sweep: d must be >= 2");
                Sampler sampler(st.seed);
                std::cout << "d";
                for (int i = 0; i < *d; ++i) std::cout << ",r" << i;
                for (int i = 0; i < *d; ++i) std::cout << ",p" << i;
                std::cout << ",B_ext,B_fin_r,B_fin_p,F_r,F_p,vc_holds\n";
                for (int n = 0; n < *trials; ++n) {
                    const PassiveState p(sampler.nonincreasing(*d, 1e-4));
                    const PassiveState r = sampler.vc_cooler(p);
                    const Hamiltonian h = sampler.hamiltonian(*d);
                    ExternalQubit ext;
                    ext.f0 = 0.0;
                    ext.f1 = h[*d - 1] - h[0];
                    ext.u0 = *bext_set ? (1.0 + *bext) / 2.0 : sampler.uniform();
                    ext.u1 = 1.0 - ext.u0;
                    const auto cmp = compare_refrigeration(r, p, h, ext, st.tol);
                    std::cout << *d;
                    for (int i = 0; i < *d; ++i) std::cout << "," << r[i];
                    for (int i = 0; i < *d; ++i) std::cout << "," << p[i];
                    std::cout << "," << ext.bias() << "," << cmp.bias_r << "," << cmp.bias_p << ","
                              << cmp.energy_r << "," << cmp.energy_p << "," << (cmp.vc_holds ? 1 : 0)
                              << "\n";
                }
                return kExitTrue;
            };
        });
    }

    // --- fixtures --------------------------------------------------------
    auto* fixtures = app.add_subcommand("fixtures", "worked qutrit constructions");
    fixtures->require_subcommand(1);
    {
        auto* c = fixtures->add_subcommand("qutrit-example", "two-operator channel averaging the top pair of q");
        auto q = std::make_shared<std::string>();
        c->add_option("--q", *q, "positive non-increasing qutrit profile")->required();
        c->callback([&st, q] {
            st.run = [&st, q] {
                const ProbVector qv(parse_inline_vector(*q), st.tol);
                const auto ex = qutrit_example(qv, st.tol);
                json rep = base_report("fixtures qutrit-example");
                rep["p"] = ex.p.entries();
                rep["channel"] = to_json(ex.channel);
                rep["verdicts"] =
                    json{{"trace_preserving", is_trace_preserving(ex.channel, st.tol)},
                         {"strictly_incoherent", is_strictly_incoherent(ex.channel, st.tol)},
                         {"rppo", is_rppo(ex.channel, PassiveState(ex.p), PassiveState(qv), st.tol)}};
                emit(rep);
                return kExitTrue;
            };
        });
    }
    {
        auto* c = fixtures->add_subcommand("qutrit-counterexample",
                                           "energy-preserving dilation that breaks passivity preservation");
        auto q = std::make_shared<std::string>();
        c->add_option("--q", *q, "environment populations")->required();
        c->callback([&st, q] {
            st.run = [&st, q] {
                const ProbVector qv(parse_inline_vector(*q), st.tol);
                const auto [ch, witness] = qutrit_stinespring_counterexample(qv, st.tol);
                json rep = base_report("fixtures qutrit-counterexample");
                rep["channel"] = to_json(ch);
                rep["witness_output"] = to_json(witness);
                rep["verdicts"] = json{{"trace_preserving", is_trace_preserving(ch, st.tol)},
                                       {"witness_passive", is_passive_matrix(witness, st.tol)},
                                       {"ppo", is_ppo(ch, st.tol)}};
                emit(rep);
                return kExitTrue;
            };
        });
    }

    // let the global --tol/--seed/--fuzz options appear after the subcommand
    std::function<void(CLI::App*)> enable_fallthrough = [&enable_fallthrough](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        return st.run ? st.run() : kExitError;
    } catch (const json::exception& e) {
        std::cerr << json{{"schema", kSchemaTag}, {"error", e.what()}}.dump(2) << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << json{{"schema", kSchemaTag}, {"error", e.what()}}.dump(2) << "\n";
        return kExitError;
    }
}
