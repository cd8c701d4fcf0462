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

#include "postselect/feasibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "postselect/diversity.hpp"
#include "postselect/errors.hpp"

namespace postselect {
namespace {

constexpr std::array<std::pair<Constraint, std::string_view>, 6> kConstraintNames{{
    {Constraint::MaxOutcomePolygon, "MaxOutcomePolygon"},
    {Constraint::LowerChain, "LowerChain"},
    {Constraint::UpperChain, "UpperChain"},
    {Constraint::SBound, "SBound"},
    {Constraint::TOverN, "TOverN"},
    {Constraint::SHalfPlusT, "SHalfPlusT"},
}};

void require_probability(double x, const char *name) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

void require_success(double s) {
    if (!(s > 0.0 && s <= 1.0)) {
        throw std::invalid_argument("success probability must lie in (0, 1]");
    }
}

} // namespace

std::string_view to_string(Constraint c) noexcept {
    for (const auto &[tag, name] : kConstraintNames) {
        if (tag == c) {
            return name;
        }
    }
    return "Unknown";
}

std::optional<Constraint> constraint_from_string(std::string_view name) noexcept {
    for (const auto &[tag, tag_name] : kConstraintNames) {
        if (tag_name == name) {
            return tag;
        }
    }
    return std::nullopt;
}

void FeasibilityVerdict::record(Constraint c, double value, double tol) {
    slack[c] = value;
    if (value < -tol) {
        violated.push_back(c);
        feasible = false;
    }
}

FeasibilityVerdict check_projective_raw(const ScenarioTriple &sc, double tol) {
    const double ratio = std::sqrt(sc.t() / sc.s());
    const double root_sum = sc.dist().sqrt_sum();
    const double root_max = std::sqrt(sc.dist().max());

    FeasibilityVerdict v;
    // The family over k is tightest at the largest P(k):
    // sqrt(T/S) + sum_{j != k} sqrt P(j) - sqrt P(k), minimized.
    v.record(Constraint::MaxOutcomePolygon, ratio + root_sum - 2.0 * root_max, tol);
    v.record(Constraint::UpperChain, root_sum - ratio, tol);
    v.record(Constraint::SBound, 1.0 / std::sqrt(sc.s()) - root_sum, tol);
    return v;
}

FeasibilityVerdict check_projective_chain(const ScenarioTriple &sc, double tol) {
    const DiversityProfile prof = diversity_profile(sc.dist());
    const double ratio = std::sqrt(sc.t() / sc.s());
    const double root_half = std::sqrt(prof.d_half);

    FeasibilityVerdict v;
    v.record(Constraint::LowerChain, ratio - (2.0 / std::sqrt(prof.d_inf) - root_half), tol);
    v.record(Constraint::UpperChain, root_half - ratio, tol);
    v.record(Constraint::SBound, 1.0 / std::sqrt(sc.s()) - root_half, tol);
    return v;
}

FeasibilityVerdict check_generalized(const ScenarioTriple &) { return FeasibilityVerdict{}; }

FeasibilityVerdict check_ts_region(double t, double s, std::size_t n, double tol) {
    require_probability(t, "transition probability");
    require_success(s);
    if (n == 0) {
        throw std::invalid_argument("number of outcomes must be >= 1");
    }
    FeasibilityVerdict v;
    v.record(Constraint::TOverN, s - t / static_cast<double>(n), tol);
    v.record(Constraint::SHalfPlusT, (t + 1.0) / 2.0 - s, tol);
    return v;
}

bool check_ternary_disk(const OutcomeDistribution &p, double tol) {
    if (p.size() != 3) {
        throw std::invalid_argument("ternary disk check needs exactly three outcomes");
    }
    for (std::size_t k = 0; k < 3; ++k) {
        const double a = p[k];
        const double b = p[(k + 1) % 3];
        const double c = p[(k + 2) % 3];
        // sqrt a <= sqrt b + sqrt c  <=>  a - b - c <= 0  or  (a - b - c)^2 <= 4bc.
        const double excess = a - b - c;
        if (excess > tol && excess * excess > 4.0 * b * c + tol) {
            return false;
        }
    }
    return true;
}

FeasibilityVerdict check_dichotomic(double p, double t, double s, double tol) {
    require_probability(p, "outcome probability");
    require_probability(t, "transition probability");
    require_success(s);
    const double rp = std::sqrt(p);
    const double rq = std::sqrt(1.0 - p);
    const double ratio = std::sqrt(t / s);

    FeasibilityVerdict v;
    v.record(Constraint::LowerChain, ratio - std::abs(rp - rq), tol);
    v.record(Constraint::UpperChain, rp + rq - ratio, tol);
    v.record(Constraint::SBound, 1.0 / std::sqrt(s) - (rp + rq), tol);
    return v;
}

std::vector<double> ConeDecomposition::reconstruct() const {
    const std::size_t n = lambdas.size();
    double total = 0.0;
    for (double l : lambdas) {
        total += l;
    }
    std::vector<double> out(n);
    const double diag = 2.0 - static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = total + diag * lambdas[k];
    }
    return out;
}

ConeDecomposition cone_decompose(const OutcomeDistribution &p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    if (n < 2) {
        throw std::invalid_argument("cone decomposition needs at least two outcomes");
    }
    Eigen::MatrixXd rays = Eigen::MatrixXd::Ones(n, n);
    rays.diagonal().array() += 2.0 - static_cast<double>(n);
    Eigen::VectorXd roots(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        roots(k) = std::sqrt(p[static_cast<std::size_t>(k)]);
    }

    Eigen::FullPivLU<Eigen::MatrixXd> lu(rays);
    if (lu.rank() < n) {
        throw SingularSystem("extreme rays are linearly dependent for n = " + std::to_string(n));
    }
    const Eigen::VectorXd lambdas = lu.solve(roots);

    for (Eigen::Index m = 0; m < n; ++m) {
        if (lambdas(m) < -kFeasTolerance) {
            throw PolygonViolation("sqrt P violates the polygon inequality at outcome " +
                                   std::to_string(m));
        }
    }
    return ConeDecomposition{std::vector<double>(lambdas.data(), lambdas.data() + n)};
}

OutcomeDistribution witness_distribution(double t, double s, std::size_t n) {
    const FeasibilityVerdict region = check_ts_region(t, s, n);
    if (!region.feasible) {
        throw RegionViolation("(T, S) lies outside the " + std::to_string(n) +
                              "-outcome projective region");
    }
    if (n == 1) {
        // A single complete projector is the identity, which leaves S = T.
        if (std::abs(s - t) > kFeasTolerance) {
            throw RegionViolation("a one-outcome measurement requires S = T");
        }
        return OutcomeDistribution::point_mass(1, 0);
    }

    std::vector<double> probs(n, 0.0);
    if (t <= s) {
        // Two-point support with 1 + 2 sqrt(p(1-p)) = 1/S when S >= 1/2;
        // below that the fair coin already meets every inequality.
        const double overlap = std::min(0.5, (1.0 / s - 1.0) / 2.0);
        const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * overlap * overlap));
        const double minor = 2.0 * overlap * overlap / (1.0 + root);
        probs[0] = 1.0 - minor;
        probs[1] = minor;
    } else {
        // Aim D_{1/2} at T/S with k-1 equal weights a and one weight b <= a,
        // where k = ceil(T/S); D_{1/2} grows monotonically in b on [0, 1/k].
        const double target = t / s;
        const auto k = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(target)), 2, n);
        const double km1 = static_cast<double>(k - 1);
        const auto d_half = [km1](double b) {
            const double r = std::sqrt(km1 * (1.0 - b)) + std::sqrt(b);
            return r * r;
        };
        double lo = 0.0;
        double hi = 1.0 / static_cast<double>(k);
        for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            (d_half(mid) >= target ? hi : lo) = mid;
        }
        const double a = (1.0 - hi) / km1;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            probs[j] = a;
        }
        probs[k - 1] = hi;
    }

    OutcomeDistribution dist(std::move(probs));
    if (!check_projective_raw(ScenarioTriple(t, s, dist)).feasible) {
        throw std::logic_error("witness_distribution produced an infeasible distribution");
    }
    return dist;
}

} // namespace postselect
