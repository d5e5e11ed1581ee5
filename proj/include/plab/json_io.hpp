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

#include <string>
#include <vector>

#include <json.hpp>

#include "plab/channels.hpp"
#include "plab/core.hpp"
#include "plab/majorization.hpp"
#include "plab/states.hpp"

namespace plab {

using json = nlohmann::json;

/// Version tag carried by every CLI report.
inline constexpr const char* kSchemaTag = "passivity-lab/1";

inline json to_json(const std::vector<double>& v) { return json(v); }

inline std::vector<double> vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of numbers");
    return j.get<std::vector<double>>();
}

inline json to_json(const RMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RMatrix rmatrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a JSON array of rows");
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
    RMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<double>();
    }
    return m;
}

/// Complex matrices travel as {re: [[..]], im: [[..]]}.
inline json to_json(const CMatrix& m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json rrow = json::array(), irow = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

inline CMatrix cmatrix_from_json(const json& j) {
    const RMatrix re = rmatrix_from_json(j.at("re"));
    RMatrix im;
    if (j.contains("im")) {
        im = rmatrix_from_json(j.at("im"));
        if (im.rows() != re.rows() || im.cols() != re.cols())
            throw std::invalid_argument("re/im shape mismatch");
    } else {
        im = RMatrix::Zero(re.rows(), re.cols());
    }
    CMatrix m(re.rows(), re.cols());
    for (Eigen::Index i = 0; i < re.rows(); ++i)
        for (Eigen::Index c = 0; c < re.cols(); ++c) m(i, c) = Complex(re(i, c), im(i, c));
    return m;
}

inline json to_json(const Hamiltonian& h) { return json{{"energies", h.energies()}}; }

inline Hamiltonian hamiltonian_from_json(const json& j) {
    return Hamiltonian(vector_from_json(j.is_object() ? j.at("energies") : j));
}

inline json to_json(const PassiveState& s) { return json{{"populations", s.populations().entries()}}; }

inline PassiveState passive_from_json(const json& j, double tol = kDefaultTol) {
    return PassiveState(ProbVector(vector_from_json(j.is_object() ? j.at("populations") : j), tol));
}

inline json to_json(const PureStateD& psi) {
    return json{{"probs", psi.probs.entries()}, {"phases", psi.phases}};
}

inline PureStateD pure_state_from_json(const json& j, double tol = kDefaultTol) {
    ProbVector probs(vector_from_json(j.at("probs")), tol);
    std::vector<double> phases;
    if (j.contains("phases"))
        phases = vector_from_json(j.at("phases"));
    else
        phases.assign(static_cast<std::size_t>(probs.dim()), 0.0);
    return PureStateD(std::move(probs), std::move(phases));
}

inline json to_json(const KrausChannel& ch) {
    json ops = json::array();
    for (const auto& k : ch.kraus) ops.push_back(to_json(k));
    return json{{"in_dim", ch.in_dim}, {"out_dim", ch.out_dim}, {"kraus", std::move(ops)}};
}

inline KrausChannel channel_from_json(const json& j) {
    std::vector<CMatrix> ops;
    for (const auto& k : j.at("kraus")) ops.push_back(cmatrix_from_json(k));
    KrausChannel ch = KrausChannel::from_ops(std::move(ops));
    if (j.contains("in_dim") && j.at("in_dim").get<int>() != ch.in_dim)
        throw std::invalid_argument("in_dim does not match the operators");
    if (j.contains("out_dim") && j.at("out_dim").get<int>() != ch.out_dim)
        throw std::invalid_argument("out_dim does not match the operators");
    return ch;
}

inline json to_json(const PovmSet& povm) {
    json els = json::array();
    for (const auto& g : povm.elements) els.push_back(to_json(g));
    return json{{"elements", std::move(els)}};
}

inline PovmSet povm_from_json(const json& j) {
    PovmSet povm;
    for (const auto& g : j.at("elements")) povm.elements.push_back(cmatrix_from_json(g));
    return povm;
}

/// Decompositions serialize as one {cuts, weight} record per partition,
/// cuts[i] marking a part boundary between levels i and i+1.
inline json to_json(const HoffmanDecomposition& dec) {
    json arr = json::array();
    for (std::size_t k = 0; k < dec.partitions.size(); ++k) {
        json cuts = json::array();
        for (bool c : dec.partitions[k].cuts()) cuts.push_back(c);
        arr.push_back(json{{"cuts", std::move(cuts)}, {"weight", dec.weights[k]}});
    }
    return arr;
}

inline HoffmanDecomposition decomposition_from_json(const json& j) {
    HoffmanDecomposition dec;
    for (const auto& rec : j) {
        std::vector<bool> cuts;
        for (const auto& c : rec.at("cuts")) cuts.push_back(c.get<bool>());
        dec.partitions.push_back(Partition::from_cuts(cuts));
        dec.weights.push_back(rec.at("weight").get<double>());
    }
    return dec;
}

inline json to_json(const CertReport& rep) {
    json witnesses = json::array();
    for (const auto& w : rep.witnesses)
        witnesses.push_back(json{{"label", w.label}, {"input", to_json(w.input)}, {"output", to_json(w.output)}});
    return json{{"property", rep.property}, {"verdict", rep.verdict}, {"witnesses", std::move(witnesses)}};
}

}  // namespace plab
