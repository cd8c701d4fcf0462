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

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "postselect/types.hpp"

namespace postselect {

/// Tags for the individual inequalities a verdict can report.
///
///   MaxOutcomePolygon  sqrt P(k) <= sqrt(T/S) + sum_{j != k} sqrt P(j) for all k
///   LowerChain         2/sqrt(D_inf) - sqrt(D_half) <= sqrt(T/S)
///   UpperChain         sqrt(T/S) <= sqrt(D_half)
///   SBound             sqrt(D_half) <= 1/sqrt(S)
///   TOverN             T/n <= S
///   SHalfPlusT         S <= (T+1)/2
enum class Constraint {
    MaxOutcomePolygon,
    LowerChain,
    UpperChain,
    SBound,
    TOverN,
    SHalfPlusT,
};

std::string_view to_string(Constraint c) noexcept;
std::optional<Constraint> constraint_from_string(std::string_view name) noexcept;

/// Outcome of a feasibility check. Every evaluated constraint carries a
/// signed slack; the ones below -tolerance are listed in `violated`, in the
/// order they were evaluated.
struct FeasibilityVerdict {
    bool feasible = true;
    std::vector<Constraint> violated;
    std::map<Constraint, double> slack;

    void record(Constraint c, double value, double tol);
};

/// Projective realizability from the raw inequalities on sqrt P(k).
FeasibilityVerdict check_projective_raw(const ScenarioTriple &sc, double tol = kFeasTolerance);

/// The same question through the diversity-index chain
///   2/sqrt(D_inf) - sqrt(D_half) <= sqrt(T/S) <= sqrt(D_half) <= 1/sqrt(S).
FeasibilityVerdict check_projective_chain(const ScenarioTriple &sc,
                                          double tol = kFeasTolerance);

/// Generalized measurements realize every valid triple.
FeasibilityVerdict check_generalized(const ScenarioTriple &sc);

/// Whether (T, S) is attainable by some n-outcome projective measurement:
/// T/n <= S <= (T+1)/2.
FeasibilityVerdict check_ts_region(double t, double s, std::size_t n,
                                   double tol = kFeasTolerance);

/// Membership of a three-outcome distribution in the orthogonal-postselection
/// disk, via the cyclic quadratic inequalities with their sign conditions.
bool check_ternary_disk(const OutcomeDistribution &p, double tol = kFeasTolerance);

/// Two-outcome form with P = (p, 1-p).
FeasibilityVerdict check_dichotomic(double p, double t, double s, double tol = kFeasTolerance);

/// Coefficients of sqrt P in the extreme rays y^m_j = 1 + (2-n) delta_jm of
/// the polygon cone.
struct ConeDecomposition {
    std::vector<double> lambdas;

    /// sum_m lambda_m y^m, which should equal sqrt P.
    [[nodiscard]] std::vector<double> reconstruct() const;
};

/// Throws PolygonViolation when sqrt P leaves the cone and SingularSystem for
/// n = 2, where both rays coincide.
ConeDecomposition cone_decompose(const OutcomeDistribution &p);

/// A distribution P with check_projective_raw(T, S, P) feasible, padded with
/// zeros to n outcomes. Throws RegionViolation when (T, S) is outside the
/// n-outcome region, or when n = 1 and S != T.
OutcomeDistribution witness_distribution(double t, double s, std::size_t n);

} // namespace postselect
