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

#include "postselect/diversity.hpp"

#include <cmath>
#include <stdexcept>

namespace postselect {

double diversity(const OutcomeDistribution &dist, double q) {
    if (std::isnan(q) || q < 0.0) {
        throw std::invalid_argument("diversity order must be >= 0");
    }
    if (std::isinf(q)) {
        return 1.0 / dist.max();
    }
    if (q == 0.0) {
        double support = 0.0;
        for (double p : dist.probs()) {
            support += p > 0.0 ? 1.0 : 0.0;
        }
        return support;
    }
    if (q == 1.0) {
        double h = 0.0;
        for (double p : dist.probs()) {
            if (p > 0.0) {
                h -= p * std::log(p);
            }
        }
        return std::exp(h);
    }
    if (q == 0.5) {
        const double r = dist.sqrt_sum();
        return r * r;
    }
    double acc = 0.0;
    for (double p : dist.probs()) {
        if (p > 0.0) {
            acc += std::pow(p, q);
        }
    }
    return std::exp(std::log(acc) / (1.0 - q));
}

double renyi_entropy(const OutcomeDistribution &dist, double q) {
    return std::log(diversity(dist, q));
}

DiversityProfile diversity_profile(const OutcomeDistribution &dist) {
    const double d_half = diversity(dist, 0.5);
    const double d_inf = diversity(dist, kInfiniteOrder);
    return DiversityProfile{d_half, d_inf, std::log(d_half), std::log(d_inf)};
}

} // namespace postselect
