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

#include <cmath>
#include <limits>

#include "doctest.h"
#include "postselect/construct.hpp"
#include "postselect/errors.hpp"
#include "postselect/witness_io.hpp"
#include "support.hpp"

using namespace postselect;
using nlohmann::json;

TEST_CASE("projective witness files round-trip exactly") {
    CounterRng rng(51);
    for (int i = 0; i < 200; ++i) {
        const ScenarioTriple sc = testing::random_feasible_scenario(rng);
        WitnessFile file{construct_projective(sc)};
        set_target(file, sc);
        const json doc = json::parse(to_json(file).dump());
        const WitnessFile back = witness_from_json(doc);
        const auto &w = std::get<ProjectiveWitness>(file.witness);
        const auto &v = std::get<ProjectiveWitness>(back.witness);
        CHECK(w.psi.entries() == v.psi.entries());
        CHECK(w.phi.entries() == v.phi.entries());
        REQUIRE(w.projectors.size() == v.projectors.size());
        for (std::size_t k = 0; k < w.projectors.size(); ++k) {
            CHECK(w.projectors[k] == v.projectors[k]);
        }
        const auto target = target_of(back);
        REQUIRE(target.has_value());
        CHECK(max_deviation(evaluate(back), *target) <= 1e-9);
    }
}

TEST_CASE("generalized witness files keep repaired outcomes") {
    const ScenarioTriple sc(0.2, 0.5, OutcomeDistribution({0.5, 0.0, 0.5}));
    WitnessFile file{construct_generalized(sc)};
    const json doc = to_json(file);
    CHECK(doc.at("kind") == "generalized");
    const WitnessFile back = witness_from_json(doc);
    const auto &g = std::get<GeneralizedWitness>(back.witness);
    CHECK(g.repaired_outcomes == std::vector<std::size_t>{1});
    CHECK(max_deviation(evaluate(back), sc) <= 1e-9);
    CHECK_FALSE(target_of(back).has_value());
}

TEST_CASE("operators may be given as flat row-major lists") {
    const json doc = json::parse(R"({
        "kind": "projective", "dimension": 2,
        "psi": [[0.7071067811865476, 0], [0.7071067811865476, 0]],
        "phi": [[0.7071067811865476, 0], [-0.7071067811865476, 0]],
        "operators": [
            [[1, 0], [0, 0], [0, 0], [0, 0]],
            [[0, 0], [0, 0], [0, 0], [1, 0]]
        ]
    })");
    const ScenarioTriple sc = evaluate(witness_from_json(doc));
    CHECK(sc.t() == doctest::Approx(0.0));
    CHECK(sc.s() == doctest::Approx(0.5));
    CHECK(sc.dist()[0] == doctest::Approx(0.5));
}

TEST_CASE("one-dimensional witness in nested layout") {
    const json doc = json::parse(R"({
        "kind": "projective", "dimension": 1,
        "psi": [[1, 0]], "phi": [[0, 1]], "operators": [[[[1, 0]]]]
    })");
    const ScenarioTriple sc = evaluate(witness_from_json(doc));
    CHECK(sc.t() == doctest::Approx(1.0));
    CHECK(sc.s() == doctest::Approx(1.0));
}

TEST_CASE("malformed witness files are rejected") {
    const json good = to_json(WitnessFile{construct_projective(ScenarioTriple(0.0, 0.5, OutcomeDistribution::uniform(2)))});
    CHECK_NOTHROW(witness_from_json(good));

    json corrupted = good;
    corrupted["operators"][0][0][0] = json::array({0.9, 0.0});
    CHECK_THROWS_AS(witness_from_json(corrupted), InvalidWitness);

    json wrong_kind = good;
    wrong_kind["kind"] = "mixed";
    CHECK_THROWS_AS(witness_from_json(wrong_kind), InvalidWitness);

    json missing = good;
    missing.erase("phi");
    CHECK_THROWS_AS(witness_from_json(missing), InvalidWitness);

    json short_psi = good;
    short_psi["psi"].erase(1);
    CHECK_THROWS_AS(witness_from_json(short_psi), InvalidWitness);

    json bad_pair = good;
    bad_pair["psi"][0] = 0.5;
    CHECK_THROWS_AS(witness_from_json(bad_pair), InvalidWitness);

    CHECK_THROWS_AS(witness_from_json(json::array()), InvalidWitness);
}

TEST_CASE("scenario deviation") {
    const ScenarioTriple a(0.1, 0.5, OutcomeDistribution({0.5, 0.5}));
    const ScenarioTriple b(0.1, 0.6, OutcomeDistribution({0.4, 0.6}));
    CHECK(max_deviation(a, b) == doctest::Approx(0.1));
    const ScenarioTriple c(0.1, 0.5, OutcomeDistribution({1.0}));
    CHECK(max_deviation(a, c) == std::numeric_limits<double>::infinity());
}
