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

#pragma once

#include <limits>

#include "postselect/types.hpp"

namespace postselect {

inline constexpr double kInfiniteOrder = std::numeric_limits<double>::infinity();

/// Hill diversity index D_q(P) = (sum_k P(k)^q)^(1/(1-q)), the exponentiated
/// Renyi entropy of order q. q = 0 gives the support size, q = 1 the
/// exponentiated Shannon entropy, q = infinity gives 1 / max_k P(k).
/// Zero-probability outcomes contribute nothing. Throws std::invalid_argument
/// for negative or NaN q.
double diversity(const OutcomeDistribution &dist, double q);

/// log D_q(P).
double renyi_entropy(const OutcomeDistribution &dist, double q);

struct DiversityProfile {
    double d_half; // D_{1/2}
    double d_inf;  // D_infinity
    double h_half; // log D_{1/2}
    double h_inf;  // log D_infinity, the min-entropy
};

DiversityProfile diversity_profile(const OutcomeDistribution &dist);

} // namespace postselect
