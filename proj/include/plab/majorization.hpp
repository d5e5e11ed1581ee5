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
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plab/core.hpp"
#include "plab/detail/nnls.hpp"

namespace plab {

/// Hard cap on the dimension of Hoffman-matrix decompositions. The vertex
/// set of the Hoffman polytope has 2^(d-1) elements, so this is inherently
/// exponential; 12 keeps it at 2048 partitions.
inline constexpr int kDefaultDimCap = 12;

// ---------------------------------------------------------------------------
// Non-increasing probability vectors
// ---------------------------------------------------------------------------

/// True iff v is a valid non-increasing probability vector: entries >= -tol,
/// sum within tol of one, and v[i] >= v[i+1] - tol for all i.
inline bool is_nonincreasing_prob(const std::vector<double>& v, double tol = kDefaultTol) {
    if (v.empty()) return false;
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i]) || v[i] < -tol) return false;
        if (i + 1 < v.size() && v[i] < v[i + 1] - tol) return false;
        sum += v[i];
    }
    return std::abs(sum - 1.0) <= tol;
}

/// A non-increasing probability vector, the common currency of every order
/// in this library. Construction validates the invariants; entries are
/// immutable afterwards.
class ProbVector {
  public:
    explicit ProbVector(std::vector<double> entries, double tol = kDefaultTol)
        : entries_(std::move(entries)) {
        if (!is_nonincreasing_prob(entries_, tol))
            throw std::invalid_argument("ProbVector: not a non-increasing probability vector");
    }

    static std::optional<ProbVector> try_make(std::vector<double> entries, double tol = kDefaultTol) {
        if (!is_nonincreasing_prob(entries, tol)) return std::nullopt;
        return ProbVector(std::move(entries), tol);
    }

    int dim() const { return static_cast<int>(entries_.size()); }
    double operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& entries() const { return entries_; }

    /// Number of leading entries larger than tol. Zeros can only trail.
    int support_size(double tol = kDefaultTol) const {
        int s = dim();
        while (s > 0 && entries_[static_cast<std::size_t>(s - 1)] <= tol) --s;
        return s;
    }

    ProbVector truncated(int new_dim, double tol = kDefaultTol) const {
        std::vector<double> head(entries_.begin(), entries_.begin() + new_dim);
        return ProbVector(std::move(head), tol);
    }

    static ProbVector uniform(int d) {
        return ProbVector(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d));
    }

    static ProbVector ground(int d) {
        std::vector<double> v(static_cast<std::size_t>(d), 0.0);
        v[0] = 1.0;
        return ProbVector(std::move(v));
    }

    bool operator==(const ProbVector&) const = default;

  private:
    std::vector<double> entries_;
};

/// Majorization x < y on arbitrary nonnegative vectors: partial sums of the
/// descending rearrangements dominate and the totals agree within tol.
inline bool majorizes(const std::vector<double>& y, const std::vector<double>& x,
                      double tol = kDefaultTol) {
    if (y.size() != x.size()) throw std::invalid_argument("majorizes: length mismatch");
    std::vector<double> ys = y, xs = x;
    std::sort(ys.begin(), ys.end(), std::greater<double>());
    std::sort(xs.begin(), xs.end(), std::greater<double>());
    double cy = 0.0, cx = 0.0;
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
        cy += ys[k];
        cx += xs[k];
        if (cx > cy + tol) return false;
    }
    cy += ys.empty() ? 0.0 : ys.back();
    cx += xs.empty() ? 0.0 : xs.back();
    return std::abs(cy - cx) <= tol;
}

/// Hoffman majorization p <_h q between non-increasing vectors: the partial
/// sums of q dominate those of p with no prior rearrangement. On the
/// non-increasing cone this coincides with plain majorization, but the
/// witnessing matrix is constrained to be a Hoffman matrix.
inline bool hoffman_majorizes(const ProbVector& q, const ProbVector& p, double tol = kDefaultTol) {
    if (q.dim() != p.dim()) throw std::invalid_argument("hoffman_majorizes: length mismatch");
    double cq = 0.0, cp = 0.0;
    for (int k = 0; k + 1 < q.dim(); ++k) {
        cq += q[k];
        cp += p[k];
        if (cp > cq + tol) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Partitions into consecutive parts and their averaging matrices
// ---------------------------------------------------------------------------

/// An ordered partition of {0,...,d-1} into consecutive index ranges,
/// stored as the list of part sizes. There are 2^(d-1) of them.
class Partition {
  public:
    explicit Partition(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
        if (sizes_.empty()) throw std::invalid_argument("Partition: empty");
        offsets_.reserve(sizes_.size());
        int off = 0;
        for (int s : sizes_) {
            if (s <= 0) throw std::invalid_argument("Partition: nonpositive part");
            offsets_.push_back(off);
            off += s;
        }
        dim_ = off;
    }

    static Partition singletons(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

    /// cuts[i] == true means a part boundary between levels i and i+1.
    static Partition from_cuts(const std::vector<bool>& cuts) {
        std::vector<int> sizes;
        int run = 1;
        for (bool c : cuts) {
            if (c) {
                sizes.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        sizes.push_back(run);
        return Partition(std::move(sizes));
    }

    int dim() const { return dim_; }
    int num_parts() const { return static_cast<int>(sizes_.size()); }
    int part_size(int t) const { return sizes_[static_cast<std::size_t>(t)]; }
    int part_begin(int t) const { return offsets_[static_cast<std::size_t>(t)]; }

    std::vector<bool> cuts() const {
        std::vector<bool> c(static_cast<std::size_t>(dim_ - 1), false);
        for (std::size_t t = 0; t + 1 < offsets_.size(); ++t)
            c[static_cast<std::size_t>(offsets_[t + 1] - 1)] = true;
        return c;
    }

    bool operator==(const Partition& o) const { return sizes_ == o.sizes_; }

  private:
    std::vector<int> sizes_;
    std::vector<int> offsets_;
    int dim_ = 0;
};

/// All 2^(d-1) consecutive partitions of {0,...,d-1} in a fixed order:
/// ascending merge mask, where bit k of the mask joins levels k and k+1.
/// Mask 0 is the all-singletons partition, the last mask is the single part.
inline std::vector<Partition> enumerate_partitions(int d, int dim_cap = kDefaultDimCap) {
    if (d < 1) throw std::invalid_argument("enumerate_partitions: d must be >= 1");
    if (d > dim_cap) throw std::invalid_argument("enumerate_partitions: dimension cap exceeded");
    const std::uint32_t count = 1u << (d - 1);
    std::vector<Partition> out;
    out.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
        std::vector<int> sizes;
        int run = 1;
        for (int k = 0; k + 1 < d; ++k) {
            if (mask & (1u << k)) {
                ++run;  // merged with the next level
            } else {
                sizes.push_back(run);
                run = 1;
            }
        }
        sizes.push_back(run);
        out.emplace_back(std::move(sizes));
    }
    return out;
}

/// Block-diagonal averaging matrix of a partition: each part of size m
/// carries the constant block with entries 1/m. Symmetric, doubly
/// stochastic and idempotent.
inline RMatrix partition_matrix(const Partition& tau) {
    const int d = tau.dim();
    RMatrix m = RMatrix::Zero(d, d);
    for (int t = 0; t < tau.num_parts(); ++t) {
        const int b = tau.part_begin(t);
        const int s = tau.part_size(t);
        for (int i = b; i < b + s; ++i)
            for (int j = b; j < b + s; ++j) m(i, j) = 1.0 / s;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Stochastic matrix predicates
// ---------------------------------------------------------------------------

enum class MatrixKind { generic, doubly_stochastic, hoffman, partition, asymmetric_hoffman };

/// A real square matrix tagged with the strongest stochasticity class its
/// producer guarantees. Plain data; the predicates below do the checking.
struct StochasticMatrix {
    RMatrix entries;
    MatrixKind kind = MatrixKind::generic;
};

inline bool is_row_stochastic(const RMatrix& m, double tol = kDefaultTol) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) < -tol) return false;
            s += m(i, j);
        }
        if (std::abs(s - 1.0) > tol) return false;
    }
    return true;
}

inline bool is_doubly_stochastic(const RMatrix& m, double tol = kDefaultTol) {
    if (!is_row_stochastic(m, tol)) return false;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (std::abs(m.col(j).sum() - 1.0) > tol) return false;
    }
    return true;
}

/// Hoffman matrix test. The defining conditions, with out-of-range entries
/// read as zero:
///   (a) the corner entry R(0, d-1) is nonnegative,
///   (b) every row sums to one,
///   (c) R is symmetric,
///   (d) R(i,j) + R(i-1,j+1) >= R(i-1,j) + R(i,j+1) for all i <= j.
/// Condition (d) at the index boundary forces the first row to be
/// non-increasing and the last column non-decreasing, which together with
/// (a)-(c) confines R to the convex hull of the partition matrices.
inline bool is_hoffman_matrix(const RMatrix& m, double tol = kDefaultTol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_hoffman_matrix: non-square input");
    const Eigen::Index d = m.rows();
    auto at = [&](Eigen::Index i, Eigen::Index j) -> double {
        return (i < 0 || i >= d || j < 0 || j >= d) ? 0.0 : m(i, j);
    };
    if (m(0, d - 1) < -tol) return false;                      // (a)
    for (Eigen::Index i = 0; i < d; ++i) {                     // (b)
        if (std::abs(m.row(i).sum() - 1.0) > tol) return false;
    }
    if (max_abs(RMatrix(m - m.transpose())) > tol) return false;  // (c)
    for (Eigen::Index i = 0; i < d; ++i) {                     // (d)
        for (Eigen::Index j = i; j < d; ++j) {
            if (at(i, j) + at(i - 1, j + 1) < at(i - 1, j) + at(i, j + 1) - tol) return false;
        }
    }
    return true;
}

/// Asymmetric Hoffman condition: doubly stochastic with the partial row
/// sums ordered top-down, sum_{i<=j} a(0,i) >= ... >= sum_{i<=j} a(n-1,i)
/// for every j (equality at j = n-1 from the row sums). Such matrices are
/// exactly the doubly-stochastic maps that preserve the non-increasing cone.
inline bool is_asymmetric_hoffman(const RMatrix& m, double tol = kDefaultTol) {
    if (!is_doubly_stochastic(m, tol)) return false;
    const Eigen::Index d = m.rows();
    for (Eigen::Index j = 0; j + 1 < d; ++j) {
        double prev = m.block(0, 0, 1, j + 1).sum();
        for (Eigen::Index k = 1; k < d; ++k) {
            const double cur = m.block(k, 0, 1, j + 1).sum();
            if (cur > prev + tol) return false;
            prev = cur;
        }
    }
    return true;
}

inline MatrixKind classify_stochastic(const RMatrix& m, double tol = kDefaultTol) {
    if (m.rows() != m.cols() || !is_row_stochastic(m, tol)) return MatrixKind::generic;
    if (!is_doubly_stochastic(m, tol)) return MatrixKind::generic;
    if (is_hoffman_matrix(m, tol)) {
        // A Hoffman matrix is a partition matrix iff it is idempotent.
        if (max_abs(RMatrix(m * m - m)) <= 10 * tol) return MatrixKind::partition;
        return MatrixKind::hoffman;
    }
    if (is_asymmetric_hoffman(m, tol)) return MatrixKind::asymmetric_hoffman;
    return MatrixKind::doubly_stochastic;
}

// ---------------------------------------------------------------------------
// Convex decomposition over partition matrices
// ---------------------------------------------------------------------------

/// Convex weights over partition matrices reproducing a Hoffman matrix.
/// The weights need not be unique; the contract is the reconstruction error.
struct HoffmanDecomposition {
    std::vector<Partition> partitions;
    std::vector<double> weights;

    RMatrix reconstruct() const {
        if (partitions.empty()) throw std::runtime_error("HoffmanDecomposition: empty");
        RMatrix acc = RMatrix::Zero(partitions.front().dim(), partitions.front().dim());
        for (std::size_t k = 0; k < partitions.size(); ++k)
            acc += weights[k] * partition_matrix(partitions[k]);
        return acc;
    }

    double weight_sum() const {
        double s = 0.0;
        for (double w : weights) s += w;
        return s;
    }
};

namespace detail {

/// Solve min ||sum_tau alpha_tau A_tau - b|| over the simplex, where the
/// columns of A stack one partition-matrix image each. NNLS first; if the
/// residual is not tight, refine with projected gradient on the simplex.
inline RVector simplex_weights(const RMatrix& A, const RVector& b, double tol) {
    RVector alpha = nnls(A, b);
    if ((A * alpha - b).cwiseAbs().maxCoeff() > 0.5 * tol)
        alpha = refine_on_simplex(A, b, std::move(alpha));
    return alpha;
}

}  // namespace detail

/// Decompose a Hoffman matrix into convex weights over partition matrices.
/// Throws if the input fails the Hoffman conditions or if no convex
/// combination reproduces it within tol.
inline HoffmanDecomposition decompose_hoffman(const RMatrix& R, double tol = kDefaultTol,
                                              int dim_cap = kDefaultDimCap) {
    if (!is_hoffman_matrix(R, tol))
        throw std::invalid_argument("decompose_hoffman: input is not a Hoffman matrix");
    const int d = static_cast<int>(R.rows());
    const auto partitions = enumerate_partitions(d, dim_cap);

    // One equation per upper-triangle entry (symmetry makes the rest redundant).
    const Eigen::Index neq = static_cast<Eigen::Index>(d) * (d + 1) / 2;
    RMatrix A(neq, static_cast<Eigen::Index>(partitions.size()));
    RVector b(neq);
    {
        Eigen::Index r = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j, ++r) b[r] = R(i, j);
    }
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        const RMatrix M = partition_matrix(partitions[c]);
        Eigen::Index r = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i; j < d; ++j, ++r) A(r, static_cast<Eigen::Index>(c)) = M(i, j);
    }

    const RVector alpha = detail::simplex_weights(A, b, tol);
    HoffmanDecomposition out;
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        const double w = alpha[static_cast<Eigen::Index>(c)];
        if (w > 1e-13) {
            out.partitions.push_back(partitions[c]);
            out.weights.push_back(w);
        }
    }
    if (out.partitions.empty() || max_abs(RMatrix(out.reconstruct() - R)) > tol)
        throw std::runtime_error("decompose_hoffman: infeasible within tolerance");
    return out;
}

/// Produce a Hoffman matrix R with R q = p, given p <_h q. The witness is
/// assembled from convex weights over partition matrices acting on q, so it
/// decomposes exactly by construction.
inline RMatrix find_hoffman_matrix(const ProbVector& p, const ProbVector& q,
                                   double tol = kDefaultTol, int dim_cap = kDefaultDimCap) {
    if (p.dim() != q.dim()) throw std::invalid_argument("find_hoffman_matrix: length mismatch");
    if (!hoffman_majorizes(q, p, tol))
        throw std::invalid_argument("find_hoffman_matrix: p is not Hoffman-majorized by q");
    const int d = p.dim();
    const auto partitions = enumerate_partitions(d, dim_cap);

    RMatrix A(d, static_cast<Eigen::Index>(partitions.size()));
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        const RMatrix M = partition_matrix(partitions[c]);
        RVector img(d);
        for (int i = 0; i < d; ++i) {
            double s = 0.0;
            for (int j = 0; j < d; ++j) s += M(i, j) * q[j];
            img[i] = s;
        }
        A.col(static_cast<Eigen::Index>(c)) = img;
    }
    RVector b(d);
    for (int i = 0; i < d; ++i) b[i] = p[i];

    const RVector alpha = detail::simplex_weights(A, b, tol);
    RMatrix R = RMatrix::Zero(d, d);
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        const double w = alpha[static_cast<Eigen::Index>(c)];
        if (w > 0.0) R += w * partition_matrix(partitions[c]);
    }
    RVector qv(d);
    for (int i = 0; i < d; ++i) qv[i] = q[i];
    if ((R * qv - b).cwiseAbs().maxCoeff() > tol)
        throw std::runtime_error("find_hoffman_matrix: no witness within tolerance");
    return R;
}

/// Decide p <_ah q by searching for a doubly-stochastic witness D with
/// p = D q whose partial row sums are ordered (the asymmetric Hoffman
/// condition). Feasibility is posed as a nonnegative least-squares problem
/// over the matrix entries plus one slack per ordering inequality; a zero
/// residual yields the witness, otherwise nullopt.
inline std::optional<RMatrix> asymmetric_hoffman_majorizes(const ProbVector& q, const ProbVector& p,
                                                           double tol = kDefaultTol) {
    if (q.dim() != p.dim()) throw std::invalid_argument("asymmetric_hoffman_majorizes: length mismatch");
    const int d = q.dim();
    if (d == 1) return RMatrix::Identity(1, 1);

    // Variables: d*d matrix entries (row-major), then (d-1)*(d-1) slacks for
    // the partial-row-sum inequalities at j = 0..d-2.
    const int nvar = d * d + (d - 1) * (d - 1);
    const int neq = 2 * d + d + (d - 1) * (d - 1);
    RMatrix A = RMatrix::Zero(neq, nvar);
    RVector b = RVector::Zero(neq);
    int r = 0;
    auto entry = [&](int i, int j) { return i * d + j; };

    for (int i = 0; i < d; ++i, ++r) {  // row sums
        for (int j = 0; j < d; ++j) A(r, entry(i, j)) = 1.0;
        b[r] = 1.0;
    }
    for (int j = 0; j < d; ++j, ++r) {  // column sums
        for (int i = 0; i < d; ++i) A(r, entry(i, j)) = 1.0;
        b[r] = 1.0;
    }
    for (int i = 0; i < d; ++i, ++r) {  // D q = p
        for (int j = 0; j < d; ++j) A(r, entry(i, j)) = q[j];
        b[r] = p[i];
    }
    int slack = d * d;
    for (int k = 0; k + 1 < d; ++k) {  // partial row sums ordered
        for (int j = 0; j + 1 < d; ++j, ++r, ++slack) {
            for (int c = 0; c <= j; ++c) {
                A(r, entry(k, c)) += 1.0;
                A(r, entry(k + 1, c)) -= 1.0;
            }
            A(r, slack) = -1.0;
        }
    }

    const RVector x = detail::nnls(A, b);
    if ((A * x - b).cwiseAbs().maxCoeff() > tol) return std::nullopt;
    RMatrix D(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) D(i, j) = x[entry(i, j)];
    if (!is_asymmetric_hoffman(D, 10 * tol)) return std::nullopt;
    return D;
}

}  // namespace plab
