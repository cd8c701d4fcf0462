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

#include "postselect/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace postselect {

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("outcome distribution needs at least one outcome");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw std::invalid_argument("outcome probability " + std::to_string(p) +
                                        " is not a non-negative real");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbTolerance) {
        throw std::invalid_argument("outcome probabilities sum to " + std::to_string(sum) +
                                    ", not 1");
    }
}

OutcomeDistribution OutcomeDistribution::uniform(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("outcome distribution needs at least one outcome");
    }
    return OutcomeDistribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

OutcomeDistribution OutcomeDistribution::point_mass(std::size_t n, std::size_t k) {
    if (k >= n) {
        throw std::invalid_argument("point mass index out of range");
    }
    std::vector<double> probs(n, 0.0);
    probs[k] = 1.0;
    return OutcomeDistribution(std::move(probs));
}

double OutcomeDistribution::max() const noexcept {
    return *std::max_element(probs_.begin(), probs_.end());
}

double OutcomeDistribution::sqrt_sum() const noexcept {
    double acc = 0.0;
    for (double p : probs_) {
        acc += std::sqrt(p);
    }
    return acc;
}

ScenarioTriple::ScenarioTriple(double t, double s, OutcomeDistribution dist)
    : t_(t), s_(s), dist_(std::move(dist)) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("transition probability must lie in [0, 1]");
    }
    if (!(s > 0.0 && s <= 1.0)) {
        throw std::invalid_argument("success probability must lie in (0, 1]");
    }
}

AmplitudeVector::AmplitudeVector(CVector entries) : entries_(std::move(entries)) {
    if (entries_.size() == 0) {
        throw std::invalid_argument("amplitude vector needs dimension >= 1");
    }
}

AmplitudeVector AmplitudeVector::basis(std::size_t d, std::size_t k) {
    if (k >= d) {
        throw std::invalid_argument("basis index out of range");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return AmplitudeVector(std::move(v));
}

bool AmplitudeVector::is_unit(double tol) const {
    return std::abs(entries_.norm() - 1.0) <= tol;
}

Complex AmplitudeVector::inner(const AmplitudeVector &other) const {
    if (other.dimension() != dimension()) {
        throw std::invalid_argument("inner product of vectors with different dimensions");
    }
    return entries_.dot(other.entries_);
}

} // namespace postselect
