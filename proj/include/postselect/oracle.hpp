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

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "postselect/feasibility.hpp"
#include "postselect/rng.hpp"
#include "postselect/types.hpp"
#include "postselect/witness.hpp"

namespace postselect {

/// Haar-random unit vector in C^d (normalized standard complex Gaussian).
AmplitudeVector sample_state(std::size_t d, CounterRng &rng);

/// Haar-random unitary: QR of a complex Gaussian matrix with the phases of
/// R's diagonal moved into Q.
CMatrix sample_unitary(std::size_t d, CounterRng &rng);

/// Uniformly random composition of d into n positive parts.
std::vector<std::size_t> sample_composition(std::size_t d, std::size_t n, CounterRng &rng);

/// Complete set of n orthogonal projectors from a Haar-random basis, with
/// ranks given by a random composition of d. Requires 1 <= n <= d.
std::vector<CMatrix> sample_projective(std::size_t d, std::size_t n, CounterRng &rng);

/// 64-bit FNV-1a digest of a witness's numeric content.
std::uint64_t witness_digest(const ProjectiveWitness &w);

using GridKey = std::array<int, 2>;

struct FuzzViolation {
    std::uint64_t witness_digest;
    ScenarioTriple scenario;
    std::vector<Constraint> violated;
};

struct FuzzReport {
    std::size_t samples = 0;
    std::size_t accepted = 0;
    std::size_t discarded = 0;
    std::vector<FuzzViolation> violations;
    /// Hits per cell of the (T, S) plane, cell = floor(coordinate / step).
    std::map<GridKey, std::size_t> coverage_grid;
    /// Hits per (P(1), P(2)) cell; filled only for n = 3 with orthogonal
    /// postselection.
    std::map<GridKey, std::size_t> ternary_grid;
    double grid_step = 0.01;
    /// max |P(1) - 1/2| over accepted samples; tracked for n = 2.
    double max_fair_deviation = 0.0;

    /// Associative: merging chunk reports in index order is deterministic.
    void merge(const FuzzReport &other);
    [[nodiscard]] std::uint64_t digest() const;
};

struct FuzzOptions {
    /// Draw phi orthogonal to psi (T = 0 up to rounding).
    bool orthogonal = false;
    /// Slack granted to the analytic checker against rounding.
    double tolerance = 1e-9;
    /// Samples with S at or below this are discarded (empty ensemble).
    double discard_below = 1e-9;
    double grid_step = 0.01;
    /// Samples per independent RNG stream. Fixing it makes the report
    /// independent of the worker count.
    std::size_t chunk = 4096;
};

/// Draws random (psi, phi, projectors) and confronts each evaluated scenario
/// with check_projective_raw. Requires 1 <= n <= d and samples >= 1.
FuzzReport fuzz_projective(std::size_t d, std::size_t n, std::size_t samples,
                           const CounterRng &rng, const FuzzOptions &options = {});

struct SearchResult {
    double s;
    double t;
    std::size_t admissible;
    ProjectiveWitness witness;
};

enum class SearchGoal { MaximizeS, MinimizeS };

/// Hill-climbing over random perturbations of (psi, phi, basis) in C^d with
/// n outcomes, keeping samples with |T - t| <= 1e-3. `trials` counts witness
/// evaluations. Throws SearchBudgetExhausted if no admissible sample is seen.
SearchResult search_success(double t, std::size_t n, std::size_t d, std::size_t trials,
                            CounterRng &rng, SearchGoal goal);

double oracle_max_s(double t, std::size_t n, std::size_t d, std::size_t trials, CounterRng &rng);
double oracle_min_s(double t, std::size_t n, std::size_t d, std::size_t trials, CounterRng &rng);

} // namespace postselect
