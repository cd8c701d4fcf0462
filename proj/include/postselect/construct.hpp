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

#include <span>
#include <vector>

#include "postselect/types.hpp"
#include "postselect/witness.hpp"

namespace postselect {

/// Complex numbers z_k with prescribed magnitudes summing to zero.
struct ClosedPolygon {
    std::vector<Complex> zs;

    [[nodiscard]] Complex residual() const;
};

/// Edge vectors of a planar polygon with side lengths xs. Members are split
/// into three groups whose sums form a triangle; every member of a group
/// points along that group's edge.
///
/// Throws PolygonViolation when some x_k exceeds the sum of the others by
/// more than kFeasTolerance, and ClosureFailure if the result misses the
/// closure or magnitude tolerance.
ClosedPolygon close_polygon(std::span<const double> xs);

struct AmplitudePair {
    AmplitudeVector psi;
    AmplitudeVector phi;
};

/// Unit vectors psi, phi in C^n with conj(psi_k) phi_k = z_k. Requires n >= 2;
/// throws NormViolation when sum_k |z_k| > 1 + kFeasTolerance.
AmplitudePair factor_amplitudes(std::span<const Complex> zs);

/// Witness on C^max(n,2) with computational-basis projectors realizing a
/// projectively feasible scenario. For n = 1 the single projector is the
/// identity on C^2. Throws InfeasibleScenario otherwise.
ProjectiveWitness construct_projective(const ScenarioTriple &sc);

/// Kraus witness realizing any valid scenario. Every outcome with P(k) > 0
/// leaves the system in the same state phi', which makes the outcome
/// independent of postselection.
GeneralizedWitness construct_generalized(const ScenarioTriple &sc);

/// Unitary U with U x = y for unit vectors x, y: a Householder reflector
/// composed with a global phase.
CMatrix unitary_mapping(const CVector &x, const CVector &y);

/// Unit vector orthogonal to v: the first basis vector e_j with
/// |v_j|^2 <= 1/2 after one Gram-Schmidt step. Requires dimension >= 2.
CVector orthogonal_complement_direction(const CVector &v);

} // namespace postselect
