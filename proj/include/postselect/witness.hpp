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
#include <span>
#include <vector>

#include "postselect/types.hpp"

namespace postselect {

/// Initial state psi, postselected state phi, and a complete set of mutually
/// orthogonal projectors, one per outcome.
struct ProjectiveWitness {
    AmplitudeVector psi;
    AmplitudeVector phi;
    std::vector<CMatrix> projectors;
};

/// Initial state psi, postselected state phi, and one Kraus operator per
/// outcome with sum_k V_k^dagger V_k = 1.
struct GeneralizedWitness {
    AmplitudeVector psi;
    AmplitudeVector phi;
    std::vector<CMatrix> kraus;
    /// Zero-probability outcomes whose Kraus operator was set to the bare
    /// projector to keep the set complete.
    std::vector<std::size_t> repaired_outcomes;
};

/// Throws InvalidWitness describing the first failed check.
void check_invariants(const ProjectiveWitness &w, double tol = kUnitTolerance);
void check_invariants(const GeneralizedWitness &w, double tol = kUnitTolerance);

/// Amplitudes <phi|V_k|psi> with V_k acting to the right.
std::vector<Complex> postselected_amplitudes(const AmplitudeVector &psi,
                                             const AmplitudeVector &phi,
                                             std::span<const CMatrix> ops);

/// (T, S, P) for arbitrary operators, without checking completeness.
/// Throws DegeneratePostselection when S <= kProbTolerance.
ScenarioTriple postselected_statistics(const AmplitudeVector &psi, const AmplitudeVector &phi,
                                       std::span<const CMatrix> ops);

/// Validates the witness and returns the statistics it produces.
ScenarioTriple evaluate_witness(const ProjectiveWitness &w);
ScenarioTriple evaluate_witness(const GeneralizedWitness &w);

/// Swap initial and final state. For Kraus operators each V_k becomes its
/// adjoint so that every amplitude is conjugated; projectors are unchanged.
ProjectiveWitness time_reversed(const ProjectiveWitness &w);
GeneralizedWitness time_reversed(const GeneralizedWitness &w);

/// Sum of |<phi|Pi_k|psi>|; bounded by one for any complete projector set.
double amplitude_l1(const ProjectiveWitness &w);

} // namespace postselect
