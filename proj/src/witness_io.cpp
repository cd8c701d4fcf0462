// Copyright 2026 The postselect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "postselect/witness_io.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "postselect/errors.hpp"

namespace postselect {
namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidWitness("expected a [re, im] pair, got " + j.dump());
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json vector_to_json(const CVector &v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        out.push_back(complex_to_json(v(k)));
    }
    return out;
}

CVector vector_from_json(const json &j, Eigen::Index d, const char *what) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != d) {
        throw InvalidWitness(std::string(what) + " must list " + std::to_string(d) + " amplitudes");
    }
    CVector v(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        v(k) = complex_from_json(j[static_cast<std::size_t>(k)]);
    }
    return v;
}

json matrix_to_json(const CMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json &j, Eigen::Index d) {
    if (!j.is_array()) {
        throw InvalidWitness("operator must be an array");
    }
    CMatrix m(d, d);
    const auto dd = static_cast<std::size_t>(d);
    if (j.size() == dd * dd && j[0].is_array() &&
        j[0].size() == 2 && j[0][0].is_number()) {
        for (std::size_t k = 0; k < dd * dd; ++k) {
            m(static_cast<Eigen::Index>(k / dd), static_cast<Eigen::Index>(k % dd)) = complex_from_json(j[k]);
        }
        return m;
    }
    if (j.size() != dd) {
        throw InvalidWitness("operator must have " + std::to_string(d) + " rows");
    }
    for (std::size_t r = 0; r < dd; ++r) {
        if (!j[r].is_array() || j[r].size() != dd) {
            throw InvalidWitness("operator row " + std::to_string(r) + " must have " +
                                 std::to_string(d) + " entries");
        }
        for (std::size_t c = 0; c < dd; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
        }
    }
    return m;
}

} // namespace

json to_json(const WitnessFile &file) {
    json doc;
    std::visit(
        [&](const auto &w) {
            using W = std::decay_t<decltype(w)>;
            const std::vector<CMatrix> &ops = [&]() -> const std::vector<CMatrix> & {
                if constexpr (std::is_same_v<W, ProjectiveWitness>) {
                    return w.projectors;
                } else {
                    return w.kraus;
                }
            }();
            doc["kind"] = std::is_same_v<W, ProjectiveWitness> ? "projective" : "generalized";
            doc["dimension"] = w.psi.dimension();
            doc["psi"] = vector_to_json(w.psi.entries());
            doc["phi"] = vector_to_json(w.phi.entries());
            json operators = json::array();
            for (const CMatrix &op : ops) {
                operators.push_back(matrix_to_json(op));
            }
            doc["operators"] = std::move(operators);
        },
        file.witness);
    doc["metadata"] = file.metadata;
    if (const auto *g = std::get_if<GeneralizedWitness>(&file.witness); g && !g->repaired_outcomes.empty()) {
        doc["metadata"]["repaired_outcomes"] = g->repaired_outcomes;
    }
    return doc;
}

WitnessFile witness_from_json(const json &doc) {
    try {
        if (!doc.is_object()) {
            throw InvalidWitness("witness file must be a JSON object");
        }
        const std::string kind = doc.at("kind").get<std::string>();
        const auto d = doc.at("dimension").get<long long>();
        if (d < 1) {
            throw InvalidWitness("dimension must be >= 1");
        }
        const auto dim = static_cast<Eigen::Index>(d);
        AmplitudeVector psi(vector_from_json(doc.at("psi"), dim, "psi"));
        AmplitudeVector phi(vector_from_json(doc.at("phi"), dim, "phi"));
        std::vector<CMatrix> ops;
        for (const json &op : doc.at("operators")) {
            ops.push_back(matrix_from_json(op, dim));
        }

        json metadata = doc.contains("metadata") ? doc.at("metadata") : json::object();
        if (kind == "projective") {
            ProjectiveWitness w{std::move(psi), std::move(phi), std::move(ops)};
            check_invariants(w);
            return WitnessFile{std::move(w), std::move(metadata)};
        }
        if (kind == "generalized") {
            GeneralizedWitness w{std::move(psi), std::move(phi), std::move(ops), {}};
            if (metadata.is_object() && metadata.contains("repaired_outcomes")) {
                w.repaired_outcomes = metadata.at("repaired_outcomes").get<std::vector<std::size_t>>();
            }
            check_invariants(w);
            return WitnessFile{std::move(w), std::move(metadata)};
        }
        throw InvalidWitness("unknown witness kind '" + kind + "'");
    } catch (const json::exception &e) {
        throw InvalidWitness(std::string("malformed witness file: ") + e.what());
    }
}

void set_target(WitnessFile &file, const ScenarioTriple &target) {
    file.metadata["target"] = {
        {"t", target.t()},
        {"s", target.s()},
        {"p", std::vector<double>(target.dist().probs().begin(), target.dist().probs().end())},
    };
}

std::optional<ScenarioTriple> target_of(const WitnessFile &file) {
    if (!file.metadata.is_object() || !file.metadata.contains("target")) {
        return std::nullopt;
    }
    try {
        const json &t = file.metadata.at("target");
        return ScenarioTriple(t.at("t").get<double>(), t.at("s").get<double>(),
                              OutcomeDistribution(t.at("p").get<std::vector<double>>()));
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

ScenarioTriple evaluate(const WitnessFile &file) {
    return std::visit([](const auto &w) { return evaluate_witness(w); }, file.witness);
}

double max_deviation(const ScenarioTriple &a, const ScenarioTriple &b) {
    if (a.outcomes() != b.outcomes()) {
        return std::numeric_limits<double>::infinity();
    }
    double dev = std::max(std::abs(a.t() - b.t()), std::abs(a.s() - b.s()));
    for (std::size_t k = 0; k < a.outcomes(); ++k) {
        dev = std::max(dev, std::abs(a.dist()[k] - b.dist()[k]));
    }
    return dev;
}

} // namespace postselect
