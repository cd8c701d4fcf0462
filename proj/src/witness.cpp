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

#include "postselect/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "postselect/errors.hpp"

namespace postselect {
namespace {

void check_states(const AmplitudeVector &psi, const AmplitudeVector &phi, double tol) {
    if (psi.dimension() != phi.dimension()) {
        throw InvalidWitness("psi and phi have different dimensions");
    }
    if (!psi.is_unit(tol)) {
        throw InvalidWitness("psi is not a unit vector (norm " + std::to_string(psi.norm()) + ")");
    }
    if (!phi.is_unit(tol)) {
        throw InvalidWitness("phi is not a unit vector (norm " + std::to_string(phi.norm()) + ")");
    }
}

void check_shapes(std::span<const CMatrix> ops, Eigen::Index d, const char *what) {
    if (ops.empty()) {
        throw InvalidWitness(std::string("witness has no ") + what);
    }
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (ops[k].rows() != d || ops[k].cols() != d) {
            throw InvalidWitness(std::string(what) + " " + std::to_string(k) +
                                 " does not match the state dimension");
        }
    }
}

double max_abs(const CMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

} // namespace

void check_invariants(const ProjectiveWitness &w, double tol) {
    check_states(w.psi, w.phi, tol);
    const auto d = static_cast<Eigen::Index>(w.psi.dimension());
    check_shapes(w.projectors, d, "projector");

    CMatrix sum = CMatrix::Zero(d, d);
    for (std::size_t k = 0; k < w.projectors.size(); ++k) {
        const CMatrix &p = w.projectors[k];
        if (max_abs(p - p.adjoint()) > tol) {
            throw InvalidWitness("projector " + std::to_string(k) + " is not hermitian");
        }
        if (max_abs(p * p - p) > tol) {
            throw InvalidWitness("projector " + std::to_string(k) + " is not idempotent");
        }
        for (std::size_t j = k + 1; j < w.projectors.size(); ++j) {
            if (max_abs(p * w.projectors[j]) > tol) {
                throw InvalidWitness("projectors " + std::to_string(k) + " and " +
                                     std::to_string(j) + " are not orthogonal");
            }
        }
        sum += p;
    }
    if (max_abs(sum - CMatrix::Identity(d, d)) > tol) {
        throw InvalidWitness("projectors do not sum to the identity");
    }
}

void check_invariants(const GeneralizedWitness &w, double tol) {
    check_states(w.psi, w.phi, tol);
    const auto d = static_cast<Eigen::Index>(w.psi.dimension());
    check_shapes(w.kraus, d, "Kraus operator");

    CMatrix sum = CMatrix::Zero(d, d);
    for (const CMatrix &v : w.kraus) {
        sum += v.adjoint() * v;
    }
    if (max_abs(sum - CMatrix::Identity(d, d)) > tol) {
        throw InvalidWitness("Kraus operators violate completeness");
    }
}

std::vector<Complex> postselected_amplitudes(const AmplitudeVector &psi,
                                             const AmplitudeVector &phi,
                                             std::span<const CMatrix> ops) {
    std::vector<Complex> out;
    out.reserve(ops.size());
    for (const CMatrix &op : ops) {
        out.push_back(phi.entries().dot(op * psi.entries()));
    }
    return out;
}

ScenarioTriple postselected_statistics(const AmplitudeVector &psi, const AmplitudeVector &phi,
                                       std::span<const CMatrix> ops) {
    const std::vector<Complex> amps = postselected_amplitudes(psi, phi, ops);
    std::vector<double> weights(amps.size());
    double s = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        weights[k] = std::norm(amps[k]);
        s += weights[k];
    }
    if (!(s > kProbTolerance)) {
        throw DegeneratePostselection("success probability " + std::to_string(s) +
                                      " leaves the postselected ensemble empty");
    }
    for (double &p : weights) {
        p /= s;
    }
    // Rounding can push either probability a hair past one.
    const double t = std::clamp(std::norm(phi.inner(psi)), 0.0, 1.0);
    return ScenarioTriple(t, std::min(s, 1.0), OutcomeDistribution(std::move(weights)));
}

ScenarioTriple evaluate_witness(const ProjectiveWitness &w) {
    check_invariants(w);
    return postselected_statistics(w.psi, w.phi, w.projectors);
}

ScenarioTriple evaluate_witness(const GeneralizedWitness &w) {
    check_invariants(w);
    return postselected_statistics(w.psi, w.phi, w.kraus);
}

ProjectiveWitness time_reversed(const ProjectiveWitness &w) {
    return ProjectiveWitness{w.phi, w.psi, w.projectors};
}

GeneralizedWitness time_reversed(const GeneralizedWitness &w) {
    std::vector<CMatrix> adj;
    adj.reserve(w.kraus.size());
    for (const CMatrix &v : w.kraus) {
        adj.emplace_back(v.adjoint());
    }
    return GeneralizedWitness{w.phi, w.psi, std::move(adj), w.repaired_outcomes};
}

double amplitude_l1(const ProjectiveWitness &w) {
    double acc = 0.0;
    for (const Complex &a : postselected_amplitudes(w.psi, w.phi, w.projectors)) {
        acc += std::abs(a);
    }
    return acc;
}

} // namespace postselect
