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

// Random scenario generators shared by the unit, property and acceptance
// suites.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "postselect/feasibility.hpp"
#include "postselect/rng.hpp"
#include "postselect/types.hpp"

namespace postselect::testing {

/// Flat Dirichlet draw on n outcomes. With probability `zero_rate` each entry
/// is dropped to exactly zero (at least one entry survives).
inline OutcomeDistribution random_distribution(std::size_t n, CounterRng &rng,
                                               double zero_rate = 0.0) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> w(n);
    double total = 0.0;
    for (double &x : w) {
        x = (rng.uniform() < zero_rate) ? 0.0 : expo(rng);
        total += x;
    }
    if (total == 0.0) {
        w[rng() % n] = 1.0;
        total = 1.0;
    }
    for (double &x : w) {
        x /= total;
    }
    // Push the rounding error onto the largest entry.
    const auto top = std::max_element(w.begin(), w.end());
    double rest = 0.0;
    for (auto it = w.begin(); it != w.end(); ++it) {
        if (it != top) {
            rest += *it;
        }
    }
    *top = 1.0 - rest;
    return OutcomeDistribution(std::move(w));
}

inline std::size_t random_outcomes(CounterRng &rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

/// S uniform on (0, 1].
inline double random_success(CounterRng &rng) { return 1.0 - rng.uniform(); }

/// Unconstrained valid triple.
inline ScenarioTriple random_scenario(CounterRng &rng, std::size_t max_n = 6) {
    const std::size_t n = random_outcomes(rng, 1, max_n);
    const OutcomeDistribution p = random_distribution(n, rng, 0.1);
    const double t = rng.uniform();
    return ScenarioTriple(t, random_success(rng), p);
}

/// Projectively realizable triple: draws P, then S and T from the interval
/// the raw inequalities leave open, so no rejection loop is needed.
inline ScenarioTriple random_feasible_scenario(CounterRng &rng, std::size_t max_n = 6) {
    for (;;) {
        const std::size_t n = random_outcomes(rng, 1, max_n);
        const OutcomeDistribution p = random_distribution(n, rng, 0.1);
        const double root = p.sqrt_sum();
        const double lower = std::max(0.0, 2.0 * std::sqrt(p.max()) - root);
        const double s = (1.0 / (root * root)) * random_success(rng);
        const double r = lower + (root - lower) * rng.uniform();
        const double t = std::min(1.0, s * r * r);
        ScenarioTriple sc(t, s, p);
        if (check_projective_raw(sc).feasible) {
            return sc;
        }
    }
}

enum class Saturate { Polygon, Upper, SBound };

/// Triple sitting on one face of the raw inequalities. Returns false when
/// the drawn P cannot touch that face (e.g. a flat P has no polygon face).
inline bool saturating_scenario(CounterRng &rng, Saturate face, std::size_t n,
                                ScenarioTriple &out) {
    const OutcomeDistribution p = random_distribution(n, rng);
    const double root = p.sqrt_sum();
    const double lower = std::max(0.0, 2.0 * std::sqrt(p.max()) - root);
    const double s_cap = 1.0 / (root * root);
    double s = s_cap * random_success(rng);
    double r = 0.0;
    switch (face) {
    case Saturate::Polygon:
        if (lower <= 0.0) {
            return false;
        }
        r = lower;
        break;
    case Saturate::Upper:
        r = root;
        break;
    case Saturate::SBound:
        s = s_cap;
        r = lower + (root - lower) * rng.uniform();
        break;
    }
    const double t = s * r * r;
    if (t > 1.0) {
        return false;
    }
    out = ScenarioTriple(t, s, p);
    return true;
}

} // namespace postselect::testing
