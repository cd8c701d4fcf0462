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
#include <numeric>

#include "doctest.h"
#include "postselect/construct.hpp"
#include "postselect/errors.hpp"
#include "postselect/witness.hpp"
#include "support.hpp"

using namespace postselect;
using namespace postselect::testing;

namespace {

const double kHalf = std::sqrt(0.5);

double max_deviation(const ScenarioTriple &a, const ScenarioTriple &b) {
    double dev = std::max(std::abs(a.t() - b.t()), std::abs(a.s() - b.s()));
    for (std::size_t k = 0; k < a.outcomes(); ++k) {
        dev = std::max(dev, std::abs(a.dist()[k] - b.dist()[k]));
    }
    return dev;
}

void check_polygon(const std::vector<double> &xs) {
    const ClosedPolygon poly = close_polygon(xs);
    REQUIRE(poly.zs.size() == xs.size());
    const double total = std::accumulate(xs.begin(), xs.end(), 0.0);
    CHECK(std::abs(poly.residual()) <= kClosureTolerance * std::max(1.0, total));
    for (std::size_t k = 0; k < xs.size(); ++k) {
        CHECK(std::abs(std::abs(poly.zs[k]) - xs[k]) <= 1e-12 * std::max(1.0, xs[k]));
    }
}

void check_factorization(const std::vector<Complex> &zs) {
    const AmplitudePair pair = factor_amplitudes(zs);
    REQUIRE(pair.psi.dimension() == zs.size());
    CHECK(pair.psi.is_unit());
    CHECK(pair.phi.is_unit());
    for (std::size_t k = 0; k < zs.size(); ++k) {
        CHECK(std::abs(std::conj(pair.psi[k]) * pair.phi[k] - zs[k]) <= 1e-12);
    }
}

/// phi' as fixed by the construction: sqrt(S) phi + sqrt(1-S) phi_perp.
CVector post_measurement_target(const GeneralizedWitness &w, double s) {
    const CVector &phi = w.phi.entries();
    return std::sqrt(s) * phi + std::sqrt(1.0 - s) * orthogonal_complement_direction(phi);
}

} // namespace

TEST_CASE("polygon closure reference cases") {
    const auto pair = close_polygon(std::vector<double>{1.0, 1.0});
    CHECK(std::abs(pair.zs[0] + pair.zs[1]) < 1e-15);
    const auto zero_side = close_polygon(std::vector<double>{0.5, 0.5, 0.0});
    CHECK(std::abs(zero_side.zs[2]) == 0.0);
    CHECK(std::abs(zero_side.zs[0] + zero_side.zs[1]) < 1e-15);
    check_polygon({3.0, 4.0, 5.0});
    const auto right = close_polygon(std::vector<double>{3.0, 4.0, 5.0});
    // Legs of length 3 and 4 are perpendicular.
    CHECK(std::abs((std::conj(right.zs[0]) * right.zs[1]).real()) < 1e-12);
    CHECK_THROWS_AS(close_polygon(std::vector<double>{5.0, 1.0, 1.0}), PolygonViolation);
    check_polygon({0.0, 0.0});
    CHECK_THROWS_AS(close_polygon(std::vector<double>{1.0}), PolygonViolation);
}

TEST_CASE("polygon closure on random admissible side lengths") {
    CounterRng rng(31);
    for (int i = 0; i < 20000; ++i) {
        const std::size_t m = random_outcomes(rng, 2, 14);
        std::vector<double> xs(m);
        for (double &x : xs) {
            x = (rng.uniform() < 0.1) ? 0.0 : std::pow(rng.uniform(), 3.0);
        }
        for (;;) {
            const auto top = std::max_element(xs.begin(), xs.end());
            const double rest = std::accumulate(xs.begin(), xs.end(), 0.0) - *top;
            if (*top <= rest) {
                break;
            }
            *top = rest * rng.uniform();
        }
        if (i % 3 == 0) {
            const auto top = std::max_element(xs.begin(), xs.end());
            *top = std::accumulate(xs.begin(), xs.end(), 0.0) - *top;
        }
        check_polygon(xs);
    }
}

TEST_CASE("amplitude factorization reference cases") {
    const AmplitudePair polar = factor_amplitudes(std::vector<Complex>{0.5, -0.5});
    CHECK(std::abs(polar.psi[0] - kHalf) < 1e-15);
    CHECK(std::abs(polar.psi[1] - kHalf) < 1e-15);
    CHECK(std::abs(polar.phi[0] - kHalf) < 1e-15);
    CHECK(std::abs(polar.phi[1] + kHalf) < 1e-15);

    const AmplitudePair point = factor_amplitudes(std::vector<Complex>{1.0, 0.0});
    CHECK(std::abs(point.psi[0] - 1.0) < 1e-15);
    CHECK(std::abs(point.phi[0] - 1.0) < 1e-15);

    check_factorization({0.25, 0.25, 0.25});
    check_factorization({Complex(0.1, 0.2), Complex(-0.3, 0.05), 0.0, Complex(0.0, -0.2)});
    CHECK_THROWS_AS(factor_amplitudes(std::vector<Complex>{0.7, 0.7}), NormViolation);
}

TEST_CASE("amplitude factorization on random inputs") {
    CounterRng rng(32);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const std::size_t n = random_outcomes(rng, 2, 10);
        std::vector<Complex> zs(n);
        double l1 = 0.0;
        for (Complex &z : zs) {
            z = (rng.uniform() < 0.1) ? Complex(0.0) : Complex(g(rng), g(rng));
            l1 += std::abs(z);
        }
        if (l1 == 0.0) {
            continue;
        }
        const double target = (i % 10 == 0) ? 1.0 : rng.uniform();
        for (Complex &z : zs) {
            z *= target / l1;
        }
        check_factorization(zs);
    }
}

TEST_CASE("projective construction reference cases") {
    const ProjectiveWitness polar = construct_projective(ScenarioTriple(0.0, 0.5, OutcomeDistribution::uniform(2)));
    REQUIRE(polar.psi.dimension() == 2);
    // The construction may land on any phase-equivalent witness; compare
    // moduli and the relative sign that makes T vanish.
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(std::abs(std::abs(polar.psi[k]) - kHalf) < 1e-12);
        CHECK(std::abs(std::abs(polar.phi[k]) - kHalf) < 1e-12);
    }
    CHECK(std::abs(polar.psi.inner(polar.phi)) < 1e-12);

    const ProjectiveWitness id = construct_projective(ScenarioTriple(1.0, 1.0, OutcomeDistribution({1.0, 0.0})));
    CHECK(std::abs(std::abs(id.psi[0]) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(id.phi[0]) - 1.0) < 1e-12);

    const ProjectiveWitness single = construct_projective(ScenarioTriple(0.4, 0.4, OutcomeDistribution({1.0})));
    CHECK(single.psi.dimension() == 2);
    CHECK(single.projectors.size() == 1);
    CHECK(single.projectors[0].isIdentity(1e-15));

    CHECK_THROWS_AS(construct_projective(ScenarioTriple(0.0, 0.6, OutcomeDistribution::uniform(2))),
                    InfeasibleScenario);

    const ScenarioTriple tiny(0.0, 1e-6, OutcomeDistribution({0.4, 0.35, 0.25}));
    CHECK(max_deviation(evaluate_witness(construct_projective(tiny)), tiny) <= 1e-9);
}

TEST_CASE("projective construction round-trips") {
    CounterRng rng(33);
    for (int i = 0; i < 10000; ++i) {
        const ScenarioTriple sc = random_feasible_scenario(rng, 8);
        const ProjectiveWitness w = construct_projective(sc);
        CHECK_NOTHROW(check_invariants(w));
        REQUIRE(max_deviation(evaluate_witness(w), sc) <= 1e-9);
    }
}

TEST_CASE("projective construction at saturated inequalities") {
    CounterRng rng(34);
    ScenarioTriple sc(1.0, 1.0, OutcomeDistribution({1.0}));
    std::size_t built = 0;
    for (Saturate face : {Saturate::Polygon, Saturate::Upper, Saturate::SBound}) {
        for (int i = 0; i < 2000; ++i) {
            if (!saturating_scenario(rng, face, random_outcomes(rng, 2, 8), sc)) {
                continue;
            }
            REQUIRE(check_projective_raw(sc).feasible);
            const ProjectiveWitness w = construct_projective(sc);
            REQUIRE(max_deviation(evaluate_witness(w), sc) <= 1e-8);
            ++built;
        }
    }
    CHECK(built > 3000);
}

TEST_CASE("generalized construction reference cases") {
    const ScenarioTriple uniform5(0.0, 0.9, OutcomeDistribution::uniform(5));
    CHECK(max_deviation(evaluate_witness(construct_generalized(uniform5)), uniform5) <= 1e-9);

    const GeneralizedWitness single = construct_generalized(ScenarioTriple(1.0, 1.0, OutcomeDistribution({1.0})));
    REQUIRE(single.kraus.size() == 1);
    CHECK(single.psi.dimension() == 2);
    const CVector image = single.kraus[0] * single.psi.entries();
    CHECK(std::abs(std::abs(image.dot(single.psi.entries())) - 1.0) < 1e-12);

    const ScenarioTriple sc(0.3, 0.7, OutcomeDistribution({0.2, 0.8}));
    const GeneralizedWitness w = construct_generalized(sc);
    CHECK(max_deviation(evaluate_witness(w), sc) <= 1e-9);
    const CVector target = post_measurement_target(w, sc.s());
    for (const CMatrix &v : w.kraus) {
        const CVector out = v * w.psi.entries();
        CHECK(std::abs(std::abs(target.dot(out)) - out.norm()) <= 1e-9);
    }

    const GeneralizedWitness repaired = construct_generalized(ScenarioTriple(0.2, 0.5, OutcomeDistribution({0.5, 0.0, 0.5})));
    REQUIRE(repaired.repaired_outcomes.size() == 1);
    CHECK(repaired.repaired_outcomes[0] == 1);
}

TEST_CASE("generalized construction round-trips on unrestricted scenarios") {
    CounterRng rng(35);
    for (int i = 0; i < 10000; ++i) {
        const ScenarioTriple sc = random_scenario(rng, 8);
        const GeneralizedWitness w = construct_generalized(sc);
        CHECK_NOTHROW(check_invariants(w, kUnitTolerance));
        REQUIRE(max_deviation(evaluate_witness(w), sc) <= 1e-9);
    }
}

TEST_CASE("unitary mapping") {
    CounterRng rng(36);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const auto d = static_cast<Eigen::Index>(random_outcomes(rng, 1, 6));
        CVector x(d), y(d);
        for (Eigen::Index k = 0; k < d; ++k) {
            x(k) = Complex(g(rng), g(rng));
            y(k) = Complex(g(rng), g(rng));
        }
        x.normalize();
        y.normalize();
        if (i % 7 == 0) {
            y = x * Complex(0.0, 1.0);
        }
        const CMatrix u = unitary_mapping(x, y);
        CHECK((u.adjoint() * u).isIdentity(1e-12));
        CHECK((u * x - y).norm() <= 1e-12);
    }
    const CVector e = CVector::Unit(3, 1);
    CHECK(unitary_mapping(e, e).isIdentity(0.0));
}

TEST_CASE("orthogonal complement direction") {
    CVector v(3);
    v << 1.0, 0.0, 0.0;
    const CVector w = orthogonal_complement_direction(v);
    CHECK(std::abs(w(1) - 1.0) < 1e-15);
    v << kHalf, kHalf, 0.0;
    const CVector u = orthogonal_complement_direction(v);
    CHECK(std::abs(u.dot(v)) < 1e-15);
    CHECK(std::abs(u.norm() - 1.0) < 1e-15);
    CHECK_THROWS(orthogonal_complement_direction(CVector::Ones(1)));
}
