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

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plab/core.hpp"
#include "plab/majorization.hpp"
#include "plab/states.hpp"

namespace plab {

// ---------------------------------------------------------------------------
// Kraus channels
// ---------------------------------------------------------------------------

/// A quantum channel as a finite list of Kraus operators (out_dim x in_dim
/// each). The list may represent a non-trace-preserving map; use
/// is_trace_preserving to certify.
struct KrausChannel {
    std::vector<CMatrix> kraus;
    int in_dim = 0;
    int out_dim = 0;

    static KrausChannel from_ops(std::vector<CMatrix> ops) {
        if (ops.empty()) throw std::invalid_argument("KrausChannel: empty operator list");
        KrausChannel ch;
        ch.out_dim = static_cast<int>(ops.front().rows());
        ch.in_dim = static_cast<int>(ops.front().cols());
        for (const auto& k : ops)
            if (k.rows() != ch.out_dim || k.cols() != ch.in_dim)
                throw std::invalid_argument("KrausChannel: inconsistent operator shapes");
        ch.kraus = std::move(ops);
        return ch;
    }

    CMatrix apply(const CMatrix& rho) const {
        if (rho.rows() != in_dim || rho.cols() != in_dim)
            throw std::invalid_argument("KrausChannel::apply: dimension mismatch");
        CMatrix out = CMatrix::Zero(out_dim, out_dim);
        for (const auto& k : kraus) out += k * rho * k.adjoint();
        return out;
    }

    CMatrix apply(const PassiveState& r) const { return apply(r.density()); }
};

inline KrausChannel identity_channel(int d) {
    return KrausChannel::from_ops({CMatrix::Identity(d, d)});
}

inline bool is_trace_preserving(const KrausChannel& phi, double tol = kDefaultTol) {
    CMatrix acc = CMatrix::Zero(phi.in_dim, phi.in_dim);
    for (const auto& k : phi.kraus) acc += k.adjoint() * k;
    return max_abs(CMatrix(acc - CMatrix::Identity(phi.in_dim, phi.in_dim))) <= tol;
}

/// Composition second . first (apply first, then second).
inline KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
    if (second.in_dim != first.out_dim) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<CMatrix> ops;
    ops.reserve(second.kraus.size() * first.kraus.size());
    for (const auto& s : second.kraus)
        for (const auto& f : first.kraus) ops.push_back(s * f);
    return KrausChannel::from_ops(std::move(ops));
}

/// Convex mixture sum_i w_i Phi_i of channels with matching dimensions.
inline KrausChannel mix(const std::vector<KrausChannel>& channels, const std::vector<double>& weights) {
    if (channels.empty() || channels.size() != weights.size())
        throw std::invalid_argument("mix: channel/weight count mismatch");
    std::vector<CMatrix> ops;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (channels[i].in_dim != channels.front().in_dim ||
            channels[i].out_dim != channels.front().out_dim)
            throw std::invalid_argument("mix: dimension mismatch");
        if (weights[i] < 0) throw std::invalid_argument("mix: negative weight");
        for (const auto& k : channels[i].kraus) ops.push_back(std::sqrt(weights[i]) * k);
    }
    return KrausChannel::from_ops(std::move(ops));
}

/// Choi fingerprint C = sum_ij |i><j| (x) Phi(|i><j|), unnormalized so that
/// the partial trace over the output block equals the identity for a
/// trace-preserving channel. Kraus-gauge invariant.
inline CMatrix choi(const KrausChannel& phi) {
    const int di = phi.in_dim, dout = phi.out_dim;
    CMatrix c = CMatrix::Zero(di * dout, di * dout);
    for (const auto& k : phi.kraus) {
        CVector v(di * dout);
        for (int i = 0; i < di; ++i)
            for (int r = 0; r < dout; ++r) v[i * dout + r] = k(r, i);
        c += v * v.adjoint();
    }
    return c;
}

inline bool channels_equal(const KrausChannel& a, const KrausChannel& b, double tol = kDefaultTol) {
    if (a.in_dim != b.in_dim || a.out_dim != b.out_dim)
        throw std::invalid_argument("channels_equal: dimension mismatch");
    return max_abs(CMatrix(choi(a) - choi(b))) <= tol;
}

// ---------------------------------------------------------------------------
// Property certification
// ---------------------------------------------------------------------------

/// A failed certification carries the offending input and its image.
struct CertWitness {
    std::string label;
    CMatrix input;
    CMatrix output;
};

struct CertReport {
    std::string property;
    bool verdict = false;
    std::vector<CertWitness> witnesses;
};

/// Incoherent operation: maps every diagonal state to a diagonal state.
/// Checking the basis projectors |i><i| is complete by linearity.
inline CertReport certify_incoherent(const KrausChannel& phi, double tol = kDefaultTol) {
    CertReport rep{"incoherent", true, {}};
    for (int i = 0; i < phi.in_dim; ++i) {
        CMatrix in = CMatrix::Zero(phi.in_dim, phi.in_dim);
        in(i, i) = 1.0;
        const CMatrix out = phi.apply(in);
        bool diagonal = true;
        for (int r = 0; r < phi.out_dim && diagonal; ++r)
            for (int c = 0; c < phi.out_dim && diagonal; ++c)
                if (r != c && std::abs(out(r, c)) > tol) diagonal = false;
        if (!diagonal) {
            rep.verdict = false;
            rep.witnesses.push_back({"basis state " + std::to_string(i), in, out});
        }
    }
    return rep;
}

inline bool is_incoherent(const KrausChannel& phi, double tol = kDefaultTol) {
    return certify_incoherent(phi, tol).verdict;
}

/// Strictly incoherent operation: every Kraus operator individually maps
/// diagonal states to diagonal states, i.e. has at most one entry above tol
/// per column.
inline CertReport certify_strictly_incoherent(const KrausChannel& phi, double tol = kDefaultTol) {
    CertReport rep{"strictly-incoherent", true, {}};
    for (std::size_t mu = 0; mu < phi.kraus.size(); ++mu) {
        const CMatrix& k = phi.kraus[mu];
        for (int c = 0; c < phi.in_dim; ++c) {
            int nonzero = 0;
            for (int r = 0; r < phi.out_dim; ++r)
                if (std::abs(k(r, c)) > tol) ++nonzero;
            if (nonzero > 1) {
                rep.verdict = false;
                rep.witnesses.push_back({"kraus " + std::to_string(mu) + " column " + std::to_string(c), k, k});
            }
        }
    }
    return rep;
}

inline bool is_strictly_incoherent(const KrausChannel& phi, double tol = kDefaultTol) {
    return certify_strictly_incoherent(phi, tol).verdict;
}

/// Passivity-preserving operation, certified on the extremal passive states
/// sigma_k. Complete: the passive set is their convex hull and the channel
/// is linear.
inline CertReport certify_ppo(const KrausChannel& phi, double tol = kDefaultTol) {
    CertReport rep{"ppo", true, {}};
    if (phi.in_dim != phi.out_dim)
        throw std::invalid_argument("certify_ppo: requires a square channel");
    for (int k = 0; k < phi.in_dim; ++k) {
        const CMatrix in = extremal_passive(k, phi.in_dim).density();
        const CMatrix out = phi.apply(in);
        if (!is_passive_matrix(out, tol)) {
            rep.verdict = false;
            rep.witnesses.push_back({"extremal passive state k=" + std::to_string(k), in, out});
        }
    }
    return rep;
}

inline bool is_ppo(const KrausChannel& phi, double tol = kDefaultTol) {
    return certify_ppo(phi, tol).verdict;
}

/// Relative passivity-preserving operation with respect to input/output
/// reference profiles p and q: every state virtually cooler than sigma(p)
/// must land on a passive state virtually cooler than sigma(q). Certified
/// on the extreme points of T_p, complete by convexity of T_q.
inline CertReport certify_rppo(const KrausChannel& phi, const PassiveState& p, const PassiveState& q,
                               double tol = kDefaultTol) {
    CertReport rep{"rppo", true, {}};
    if (phi.in_dim != p.dim() || phi.out_dim != q.dim())
        throw std::invalid_argument("certify_rppo: dimension mismatch");
    for (const PassiveState& r : vc_extreme_points(p, tol)) {
        const CMatrix in = r.density();
        const CMatrix out = phi.apply(in);
        bool ok = is_passive_matrix(out, tol);
        if (ok) {
            std::vector<double> pop(static_cast<std::size_t>(phi.out_dim));
            for (int i = 0; i < phi.out_dim; ++i)
                pop[static_cast<std::size_t>(i)] = std::max(0.0, out(i, i).real());
            auto pv = ProbVector::try_make(std::move(pop), 100 * tol);
            ok = pv.has_value() && is_virtually_cooler(PassiveState(*pv), q, tol);
        }
        if (!ok) {
            rep.verdict = false;
            rep.witnesses.push_back({"vc extreme point", in, out});
        }
    }
    return rep;
}

inline bool is_rppo(const KrausChannel& phi, const PassiveState& p, const PassiveState& q,
                    double tol = kDefaultTol) {
    return certify_rppo(phi, p, q, tol).verdict;
}

// ---------------------------------------------------------------------------
// Activity-breaking operations (measure-and-prepare form)
// ---------------------------------------------------------------------------

/// A positive-operator-valued measure on the input space.
struct PovmSet {
    std::vector<CMatrix> elements;
};

inline bool is_valid_povm(const PovmSet& povm, double tol = kDefaultTol) {
    if (povm.elements.empty()) return false;
    const Eigen::Index d = povm.elements.front().rows();
    CMatrix sum = CMatrix::Zero(d, d);
    for (const auto& g : povm.elements) {
        if (g.rows() != d || g.cols() != d || !is_psd(g, tol)) return false;
        sum += g;
    }
    return max_abs(CMatrix(sum - CMatrix::Identity(d, d))) <= tol;
}

/// The ordering that makes a measure-and-prepare channel activity-breaking:
/// Gamma_{k'} - Gamma_k is PSD whenever k > k'.
inline bool povm_activity_ordered(const PovmSet& povm, double tol = kDefaultTol) {
    for (std::size_t kp = 0; kp < povm.elements.size(); ++kp)
        for (std::size_t k = kp + 1; k < povm.elements.size(); ++k)
            if (!is_psd(CMatrix(povm.elements[kp] - povm.elements[k]), tol)) return false;
    return true;
}

/// Detect the activity-breaking form. The channel must produce diagonal
/// output on every matrix unit (complete by linearity); the recovered POVM
/// Gamma_k = sum_mu K+ |k><k| K must then be ordered. Returns the POVM on
/// success, nullopt otherwise.
inline std::optional<PovmSet> is_abo(const KrausChannel& phi, double tol = kDefaultTol) {
    if (phi.in_dim != phi.out_dim)
        throw std::invalid_argument("is_abo: requires a square channel");
    const int d = phi.in_dim;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            CMatrix unit = CMatrix::Zero(d, d);
            unit(i, j) = 1.0;
            const CMatrix out = phi.apply(unit);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c)
                    if (r != c && std::abs(out(r, c)) > tol) return std::nullopt;
        }
    }
    PovmSet povm;
    for (int k = 0; k < d; ++k) {
        CMatrix gamma = CMatrix::Zero(d, d);
        for (const auto& kr : phi.kraus) gamma += kr.adjoint().col(k) * kr.row(k);
        povm.elements.push_back(std::move(gamma));
    }
    if (!povm_activity_ordered(povm, tol)) return std::nullopt;
    return povm;
}

inline CertReport certify_abo(const KrausChannel& phi, double tol = kDefaultTol) {
    CertReport rep{"abo", false, {}};
    rep.verdict = is_abo(phi, tol).has_value();
    return rep;
}

/// Build the measure-and-prepare channel rho -> sum_k Tr[rho Gamma_k] |k><k|
/// from an ordered POVM, with one Kraus operator |k><v| per eigenvector of
/// each element.
inline KrausChannel build_abo(const PovmSet& povm, double tol = kDefaultTol) {
    if (!is_valid_povm(povm, tol)) throw std::invalid_argument("build_abo: invalid POVM");
    if (!povm_activity_ordered(povm, tol))
        throw std::invalid_argument("build_abo: POVM ordering condition violated");
    const int d = static_cast<int>(povm.elements.front().rows());
    std::vector<CMatrix> ops;
    for (int k = 0; k < d; ++k) {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(povm.elements[static_cast<std::size_t>(k)]);
        for (int a = 0; a < d; ++a) {
            const double lambda = es.eigenvalues()[a];
            if (lambda <= tol) continue;
            CMatrix op = CMatrix::Zero(d, d);
            op.row(k) = std::sqrt(lambda) * es.eigenvectors().col(a).adjoint();
            ops.push_back(std::move(op));
        }
    }
    if (ops.empty()) throw std::invalid_argument("build_abo: POVM has no support");
    return KrausChannel::from_ops(std::move(ops));
}

/// POVM of the athermality-breaking channel: Gamma_k = e^(-beta E_k)/Z * I.
inline PovmSet athermal_povm(double beta, const Hamiltonian& H) {
    const PassiveState th = thermal_state(beta, H);
    PovmSet povm;
    for (int k = 0; k < H.dim(); ++k)
        povm.elements.push_back(th[k] * CMatrix::Identity(H.dim(), H.dim()));
    return povm;
}

// ---------------------------------------------------------------------------
// Constructive channel builders
// ---------------------------------------------------------------------------

namespace detail {

/// Convex weights alpha_tau with sum_tau alpha_tau (M_tau q) = p. This is
/// the vector form of the Hoffman decomposition; the witness matrix is
/// sum_tau alpha_tau M_tau.
inline HoffmanDecomposition hoffman_weights_for_pair(const ProbVector& p, const ProbVector& q,
                                                     double tol, int dim_cap = kDefaultDimCap) {
    const int d = p.dim();
    const auto partitions = enumerate_partitions(d, dim_cap);
    RMatrix A(d, static_cast<Eigen::Index>(partitions.size()));
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        const RMatrix M = partition_matrix(partitions[c]);
        for (int i = 0; i < d; ++i) {
            double s = 0.0;
            for (int j = 0; j < d; ++j) s += M(i, j) * q[j];
            A(i, static_cast<Eigen::Index>(c)) = s;
        }
    }
    RVector b(d);
    for (int i = 0; i < d; ++i) b[i] = p[i];
    const RVector alpha = simplex_weights(A, b, tol);
    if ((A * alpha - b).cwiseAbs().maxCoeff() > tol)
        throw std::runtime_error("hoffman_weights_for_pair: infeasible within tolerance");
    HoffmanDecomposition dec;
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        const double w = alpha[static_cast<Eigen::Index>(c)];
        if (w > 1e-13) {
            dec.partitions.push_back(partitions[c]);
            dec.weights.push_back(w);
        }
    }
    return dec;
}

}  // namespace detail

/// Strictly incoherent channel transforming the amplitude profile p into q
/// on pure states, built from the convex decomposition of a Hoffman witness
/// for p <_h q. For every partition tau of weight alpha_tau the factory
/// emits one Kraus operator per cyclic-shift labeling of the parts,
///
///   G^tau_a = sqrt(alpha_tau / |tau|) sum_parts sum_j
///             sqrt(q[mu + (j+a) mod m] / p[mu + j]) |mu + (j+a) mod m><mu + j|,
///
/// where mu is the part offset, m its size and |tau| the product of part
/// sizes. Trailing zeros of p are handled by building the channel on the
/// support and padding each operator with 1/sqrt(N) times the identity on
/// the dead levels.
///
/// The result maps |psi(p)> to |psi(q)>, maps sigma(p) to sigma(q), and
/// preserves relative passivity with respect to (p, q).
inline KrausChannel build_rppo_pure(const ProbVector& p, const ProbVector& q,
                                    double tol = kDefaultTol, int dim_cap = kDefaultDimCap) {
    if (p.dim() != q.dim()) throw std::invalid_argument("build_rppo_pure: dimension mismatch");
    if (!hoffman_majorizes(q, p, tol))
        throw std::invalid_argument("build_rppo_pure: p is not Hoffman-majorized by q");
    const int d = p.dim();
    const int s = p.support_size(tol);

    if (s < d) {
        // p (hence q) vanishes on the trailing levels; build on the support.
        std::vector<double> ph(p.entries().begin(), p.entries().begin() + s);
        std::vector<double> qh(q.entries().begin(), q.entries().begin() + s);
        double psum = 0.0, qsum = 0.0;
        for (double x : ph) psum += x;
        for (double x : qh) qsum += x;
        for (double& x : ph) x /= psum;
        for (double& x : qh) x /= qsum;
        const KrausChannel inner =
            build_rppo_pure(ProbVector(std::move(ph), 10 * tol), ProbVector(std::move(qh), 10 * tol), tol, dim_cap);
        const double pad = 1.0 / std::sqrt(static_cast<double>(inner.kraus.size()));
        std::vector<CMatrix> ops;
        ops.reserve(inner.kraus.size());
        for (const auto& l : inner.kraus) {
            CMatrix k = CMatrix::Zero(d, d);
            k.topLeftCorner(s, s) = l;
            for (int i = s; i < d; ++i) k(i, i) = pad;
            ops.push_back(std::move(k));
        }
        return KrausChannel::from_ops(std::move(ops));
    }

    const HoffmanDecomposition dec = detail::hoffman_weights_for_pair(p, q, tol, dim_cap);
    std::vector<CMatrix> ops;
    for (std::size_t t = 0; t < dec.partitions.size(); ++t) {
        const Partition& tau = dec.partitions[t];
        const int parts = tau.num_parts();
        long total = 1;
        for (int i = 0; i < parts; ++i) total *= tau.part_size(i);
        const double coef = std::sqrt(dec.weights[t] / static_cast<double>(total));

        std::vector<int> shift(static_cast<std::size_t>(parts), 0);
        for (long n = 0; n < total; ++n) {
            CMatrix k = CMatrix::Zero(d, d);
            for (int i = 0; i < parts; ++i) {
                const int mu = tau.part_begin(i);
                const int m = tau.part_size(i);
                const int a = shift[static_cast<std::size_t>(i)];
                for (int j = 0; j < m; ++j) {
                    const int row = mu + (j + a) % m;
                    const int col = mu + j;
                    k(row, col) = coef * std::sqrt(std::max(0.0, q[row]) / p[col]);
                }
            }
            ops.push_back(std::move(k));
            for (int i = parts - 1; i >= 0; --i) {  // odometer over shift labels
                if (++shift[static_cast<std::size_t>(i)] < tau.part_size(i)) break;
                shift[static_cast<std::size_t>(i)] = 0;
            }
        }
    }
    return KrausChannel::from_ops(std::move(ops));
}

/// Two-operator passivity-preserving qubit channel mapping the amplitude
/// profile p to q, driven by the t-transform witness p = R q. Valid for
/// p <_h q on dimension two.
inline KrausChannel build_qubit_ppo_pure(const ProbVector& p, const ProbVector& q,
                                         double tol = kDefaultTol) {
    if (p.dim() != 2 || q.dim() != 2)
        throw std::invalid_argument("build_qubit_ppo_pure: qubit profiles required");
    if (!hoffman_majorizes(q, p, tol))
        throw std::invalid_argument("build_qubit_ppo_pure: p is not Hoffman-majorized by q");
    if (p[1] <= tol) {
        // p = (1,0) forces q = (1,0): the identity does the job.
        if (q[1] > tol)
            throw std::invalid_argument("build_qubit_ppo_pure: p has empty excited level but q does not");
        return identity_channel(2);
    }
    const double denom = q[0] - q[1];
    const double a = (denom <= tol) ? 1.0 : std::min(1.0, std::max(0.5, (p[0] - q[1]) / denom));
    const double abar = 1.0 - a;

    std::vector<CMatrix> ops;
    CMatrix l1 = CMatrix::Zero(2, 2);
    l1(0, 0) = std::sqrt(a * q[0] / p[0]);
    l1(1, 1) = std::sqrt(a * q[1] / p[1]);
    ops.push_back(std::move(l1));
    if (abar > tol) {
        CMatrix l2 = CMatrix::Zero(2, 2);
        l2(0, 1) = std::sqrt(abar * q[0] / p[1]);
        l2(1, 0) = std::sqrt(abar * q[1] / p[0]);
        ops.push_back(std::move(l2));
    }
    return KrausChannel::from_ops(std::move(ops));
}

/// The canonical five-operator incoherent Kraus family on a qubit:
///   K1 = [[a1, b1], [0, 0]],  K2 = [[0, 0], [a2, b2]],  K3 = diag(a3, b3),
///   K4 = [[0, b4], [a4, 0]],  K5 = [[a5, 0], [0, 0]].
/// Validates only the trace-preservation constraints
///   sum a_i^2 = 1, sum |b_i|^2 = 1, a1 b1 + a2 b2 = 0.
inline KrausChannel qubit_canonical_kraus(const std::array<double, 5>& a,
                                          const std::array<Complex, 4>& b,
                                          double tol = kDefaultTol) {
    double sa = 0.0, sb = 0.0;
    for (double x : a) sa += x * x;
    for (Complex x : b) sb += std::norm(x);
    if (std::abs(sa - 1.0) > tol)
        throw std::invalid_argument("qubit_canonical_kraus: sum a_i^2 must equal 1");
    if (std::abs(sb - 1.0) > tol)
        throw std::invalid_argument("qubit_canonical_kraus: sum |b_i|^2 must equal 1");
    if (std::abs(a[0] * b[0] + a[1] * b[1]) > tol)
        throw std::invalid_argument("qubit_canonical_kraus: a1 b1 + a2 b2 must vanish");
    std::vector<CMatrix> ops(5, CMatrix::Zero(2, 2));
    ops[0](0, 0) = a[0];
    ops[0](0, 1) = b[0];
    ops[1](1, 0) = a[1];
    ops[1](1, 1) = b[1];
    ops[2](0, 0) = a[2];
    ops[2](1, 1) = b[2];
    ops[3](0, 1) = b[3];
    ops[3](1, 0) = a[3];
    ops[4](0, 0) = a[4];
    return KrausChannel::from_ops(std::move(ops));
}

/// The same five-operator family restricted to passivity preservation. The
/// two extra inequalities are exactly the passivity of the channel images
/// of the two extremal qubit passive states:
///   a1^2 + a3^2 + a5^2 >= a2^2 + a4^2,
///   a1^2 + a3^2 + a5^2 + |b1|^2 + |b4|^2 >= a2^2 + a4^2 + |b2|^2 + |b3|^2.
inline KrausChannel qubit_ppo_canonical(const std::array<double, 5>& a,
                                        const std::array<Complex, 4>& b,
                                        double tol = kDefaultTol) {
    KrausChannel ch = qubit_canonical_kraus(a, b, tol);
    const double lhs = a[0] * a[0] + a[2] * a[2] + a[4] * a[4];
    const double rhs = a[1] * a[1] + a[3] * a[3];
    if (lhs < rhs - tol)
        throw std::invalid_argument(
            "qubit_ppo_canonical: ground-state passivity constraint violated "
            "(a1^2 + a3^2 + a5^2 < a2^2 + a4^2)");
    if (lhs + std::norm(b[0]) + std::norm(b[3]) < rhs + std::norm(b[1]) + std::norm(b[2]) - tol)
        throw std::invalid_argument(
            "qubit_ppo_canonical: maximally-mixed passivity constraint violated "
            "(a1^2 + a3^2 + a5^2 + |b1|^2 + |b4|^2 < a2^2 + a4^2 + |b2|^2 + |b3|^2)");
    return ch;
}

/// Qubit channel from the Stinespring dilation with an energy-preserving
/// two-qubit unitary and a passive environment q|0><0| + (1-q)|1><1|:
///   U|00> = |00>,  U|01> = alpha|01> + beta|10>,
///   U|10> = -beta*|01> + alpha*|10>,  U|11> = |11>,
/// with beta = sqrt(1 - |alpha|^2) chosen real. Passive environments
/// (q >= 1/2) always yield a passivity-preserving channel.
inline KrausChannel qubit_stinespring_ppo(Complex alpha, double q_env, double tol = kDefaultTol) {
    const double a2 = std::norm(alpha);
    if (a2 > 1.0 + tol) throw std::invalid_argument("qubit_stinespring_ppo: |alpha| must be <= 1");
    if (q_env < 0.5 - tol || q_env > 1.0 + tol)
        throw std::invalid_argument("qubit_stinespring_ppo: environment not passive (q_env must be in [1/2, 1])");
    const double beta = std::sqrt(std::max(0.0, 1.0 - a2));
    const double q = std::min(1.0, std::max(0.5, q_env));
    const double qb = 1.0 - q;

    std::vector<CMatrix> ops;
    CMatrix k00 = CMatrix::Zero(2, 2);  // env |0> -> <0|
    k00(0, 0) = std::sqrt(q);
    k00(1, 1) = std::sqrt(q) * std::conj(alpha);
    ops.push_back(std::move(k00));
    CMatrix k10 = CMatrix::Zero(2, 2);  // env |0> -> <1|
    k10(0, 1) = -std::sqrt(q) * beta;
    ops.push_back(std::move(k10));
    if (qb > 0.0) {
        CMatrix k01 = CMatrix::Zero(2, 2);  // env |1> -> <0|
        k01(1, 0) = std::sqrt(qb) * beta;
        ops.push_back(std::move(k01));
        CMatrix k11 = CMatrix::Zero(2, 2);  // env |1> -> <1|
        k11(0, 0) = std::sqrt(qb) * alpha;
        k11(1, 1) = std::sqrt(qb);
        ops.push_back(std::move(k11));
    }
    return KrausChannel::from_ops(std::move(ops));
}

/// Qutrit counterexample: the energy-preserving swap |02> <-> |20> with a
/// passive environment sigma(q) is NOT passivity-preserving. Returns the
/// channel together with the witness image of the ground state,
/// diag(q0 + q1, 0, q2), which is active whenever q2 > 0.
inline std::pair<KrausChannel, CMatrix> qutrit_stinespring_counterexample(const ProbVector& q,
                                                                          double tol = kDefaultTol) {
    if (q.dim() != 3) throw std::invalid_argument("qutrit_stinespring_counterexample: qutrit profile required");
    std::vector<CMatrix> ops;
    {
        CMatrix k = CMatrix::Zero(3, 3);  // env |0> kept: levels 0,1 untouched
        k(0, 0) = k(1, 1) = std::sqrt(q[0]);
        ops.push_back(std::move(k));
    }
    {
        CMatrix k = CMatrix::Zero(3, 3);  // env |0>, system |2> swapped down
        k(0, 2) = std::sqrt(q[0]);
        ops.push_back(std::move(k));
    }
    if (q[1] > tol) ops.push_back(std::sqrt(q[1]) * CMatrix::Identity(3, 3));
    if (q[2] > tol) {
        CMatrix k = CMatrix::Zero(3, 3);  // env |2>, system |0> swapped up
        k(2, 0) = std::sqrt(q[2]);
        ops.push_back(std::move(k));
        CMatrix k2 = CMatrix::Zero(3, 3);
        k2(1, 1) = k2(2, 2) = std::sqrt(q[2]);
        ops.push_back(std::move(k2));
    }
    KrausChannel ch = KrausChannel::from_ops(std::move(ops));
    CMatrix ground = CMatrix::Zero(3, 3);
    ground(0, 0) = 1.0;
    CMatrix witness = ch.apply(ground);
    return {std::move(ch), std::move(witness)};
}

/// The worked qutrit fixture: for a positive profile q, the input profile
/// p = ((q0+q1)/2, (q0+q1)/2, q2) is Hoffman-majorized by q through the
/// single block-averaging matrix on levels {0,1}, and the transformation is
/// realized by exactly two Kraus operators.
struct QutritExample {
    ProbVector p;
    KrausChannel channel;
};

inline QutritExample qutrit_example(const ProbVector& q, double tol = kDefaultTol) {
    if (q.dim() != 3) throw std::invalid_argument("qutrit_example: qutrit profile required");
    if (q[2] <= tol) throw std::invalid_argument("qutrit_example: requires q2 > 0");
    const double half = (q[0] + q[1]) / 2.0;
    ProbVector p(std::vector<double>{half, half, q[2]});
    CMatrix k1 = CMatrix::Zero(3, 3);
    k1(0, 0) = std::sqrt(q[0] / (2.0 * p[0]));
    k1(1, 1) = std::sqrt(q[1] / (2.0 * p[1]));
    k1(2, 2) = std::sqrt(q[2] / (2.0 * p[2]));
    CMatrix k2 = CMatrix::Zero(3, 3);
    k2(0, 1) = std::sqrt(q[0] / (2.0 * p[1]));
    k2(1, 0) = std::sqrt(q[1] / (2.0 * p[0]));
    k2(2, 2) = std::sqrt(q[2] / (2.0 * p[2]));
    return {std::move(p), KrausChannel::from_ops({std::move(k1), std::move(k2)})};
}

}  // namespace plab
