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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace postselect {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Normalization slack for probability vectors.
inline constexpr double kProbTolerance = 1e-12;
/// Slack for unit norms and matrix identities (hermiticity, idempotence,
/// completeness).
inline constexpr double kUnitTolerance = 1e-10;
/// Slack for feasibility inequalities; boundaries count as feasible.
inline constexpr double kFeasTolerance = 1e-12;
/// Residual allowed on the sum of a closed polygon's edges.
inline constexpr double kClosureTolerance = 1e-11;

/// Probability vector P(1..n) over measurement outcomes.
class OutcomeDistribution {
  public:
    /// Throws std::invalid_argument on empty input, negative or non-finite
    /// entries, or a sum further than kProbTolerance from one.
    explicit OutcomeDistribution(std::vector<double> probs);

    static OutcomeDistribution uniform(std::size_t n);
    static OutcomeDistribution point_mass(std::size_t n, std::size_t k);

    [[nodiscard]] std::size_t size() const noexcept { return probs_.size(); }
    [[nodiscard]] double operator[](std::size_t k) const { return probs_[k]; }
    [[nodiscard]] std::span<const double> probs() const noexcept { return probs_; }
    [[nodiscard]] double max() const noexcept;

    /// Sum of square roots, i.e. sqrt(D_{1/2}).
    [[nodiscard]] double sqrt_sum() const noexcept;

    bool operator==(const OutcomeDistribution &) const = default;

  private:
    std::vector<double> probs_;
};

/// The triple (T, S, P) asked about: transition probability without the
/// intermediate measurement, postselection success probability with it, and
/// the outcome statistics on the postselected ensemble.
class ScenarioTriple {
  public:
    /// Requires 0 <= t <= 1 and 0 < s <= 1; throws std::invalid_argument.
    ScenarioTriple(double t, double s, OutcomeDistribution dist);

    [[nodiscard]] double t() const noexcept { return t_; }
    [[nodiscard]] double s() const noexcept { return s_; }
    [[nodiscard]] const OutcomeDistribution &dist() const noexcept { return dist_; }
    [[nodiscard]] std::size_t outcomes() const noexcept { return dist_.size(); }

  private:
    double t_;
    double s_;
    OutcomeDistribution dist_;
};

/// State vector in C^d. Inner products are conjugate-linear in the left
/// argument: <a|b> = sum_k conj(a_k) b_k.
class AmplitudeVector {
  public:
    /// Throws std::invalid_argument for d = 0.
    explicit AmplitudeVector(CVector entries);

    static AmplitudeVector basis(std::size_t d, std::size_t k);

    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(entries_.size());
    }
    [[nodiscard]] const CVector &entries() const noexcept { return entries_; }
    [[nodiscard]] Complex operator[](std::size_t k) const {
        return entries_(static_cast<Eigen::Index>(k));
    }
    [[nodiscard]] double norm() const { return entries_.norm(); }
    [[nodiscard]] bool is_unit(double tol = kUnitTolerance) const;

    /// <this|other>
    [[nodiscard]] Complex inner(const AmplitudeVector &other) const;

  private:
    CVector entries_;
};

} // namespace postselect
