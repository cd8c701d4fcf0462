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

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "postselect/types.hpp"
#include "postselect/witness.hpp"

namespace postselect {

/// On-disk witness:
///
///   {
///     "kind": "projective" | "generalized",
///     "dimension": d,
///     "psi": [[re, im], ...],
///     "phi": [[re, im], ...],
///     "operators": [ [[[re, im], ...], ...], ... ],   // d x d, one list per row
///     "metadata": { ... }
///   }
///
/// Operators may also be given as flat row-major lists of d*d pairs.
/// Numbers are written with round-trip precision.
struct WitnessFile {
    std::variant<ProjectiveWitness, GeneralizedWitness> witness;
    nlohmann::json metadata = nlohmann::json::object();
};

nlohmann::json to_json(const WitnessFile &file);

/// Parses and enforces the witness invariants. Throws InvalidWitness.
WitnessFile witness_from_json(const nlohmann::json &doc);

/// Stores (T, S, P) under metadata["target"].
void set_target(WitnessFile &file, const ScenarioTriple &target);

/// The scenario under metadata["target"], if present and well formed.
std::optional<ScenarioTriple> target_of(const WitnessFile &file);

/// Statistics of whichever witness the file holds.
ScenarioTriple evaluate(const WitnessFile &file);

/// Largest absolute difference over T, S and every P(k); infinity when the
/// outcome counts differ.
double max_deviation(const ScenarioTriple &a, const ScenarioTriple &b);

} // namespace postselect
