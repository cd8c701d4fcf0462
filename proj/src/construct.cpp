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

#include "postselect/construct.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "postselect/errors.hpp"
#include "postselect/feasibility.hpp"

namespace postselect {
namespace {

using Groups = std::array<double, 3>;

bool is_triangle(const Groups &g, double tol) {
    const double total = g[0] + g[1] + g[2];
    return std::all_of(g.begin(), g.end(), [&](double side) { return side <= total - side + tol; });
}

// Largest-first assignment to the currently lightest group.
std::vector<int> greedy_groups(std::span<const double> xs, Groups &sums) {
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return xs[a] > xs[b]; });
    std::vector<int> group(xs.size(), 0);
    sums = {0.0, 0.0, 0.0};
    for (std::size_t idx : order) {
        const auto lightest =
            static_cast<int>(std::min_element(sums.begin(), sums.end()) - sums.begin());
        group[idx] = lightest;
        sums[static_cast<std::size_t>(lightest)] += xs[idx];
    }
    return group;
}

// Exhaustive 3-partition search; only reached if the greedy split is not a
// triangle, which valid input should never produce.
bool exhaustive_groups(std::span<const double> xs, double tol, std::vector<int> &group,
                       Groups &sums) {
    const std::size_t m = xs.size();
    std::size_t count = 1;
    for (std::size_t i = 0; i < m; ++i) {
        count *= 3;
    }
    std::vector<int> trial(m);
    for (std::size_t code = 0; code < count; ++code) {
        Groups g{0.0, 0.0, 0.0};
        std::size_t c = code;
        for (std::size_t i = 0; i < m; ++i) {
            trial[i] = static_cast<int>(c % 3);
            c /= 3;
            g[static_cast<std::size_t>(trial[i])] += xs[i];
        }
        if (is_triangle(g, tol)) {
            group = trial;
            sums = g;
            return true;
        }
    }
    return false;
}

// Unit edge directions of a triangle with side lengths `sides`, edges summing
// to zero. Uses Kahan's area formula so that nearly flat triangles keep their
// side lengths to working precision.
std::array<Complex, 3> triangle_directions(const Groups &sides) {
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return sides[a] > sides[b];
    });
    const double a = sides[idx[0]];
    const double b = sides[idx[1]];
    const double c = sides[idx[2]];

    std::array<Complex, 3> dirs{Complex(1.0), Complex(1.0), Complex(1.0)};
    if (a <= 0.0) {
        return dirs;
    }
    const double area_sq = (a + (b + c)) * std::max(0.0, c - (a - b)) * (c + (a - b)) * (a + (b - c));
    const double height = 0.5 * std::sqrt(area_sq) / a;
    const double bx = ((a - c) * (a + c) + b * b) / (2.0 * a);
    const double cx = ((a - b) * (a + b) + c * c) / (2.0 * a);

    const std::array<Complex, 3> edges{Complex(a, 0.0), Complex(-bx, height), Complex(-cx, -height)};
    for (std::size_t k = 0; k < 3; ++k) {
        const double len = std::abs(edges[k]);
        dirs[idx[k]] = len > 0.0 ? edges[k] / len : Complex(1.0);
    }
    return dirs;
}

std::vector<CMatrix> basis_projectors(std::size_t n, std::size_t d) {
    const auto dim = static_cast<Eigen::Index>(d);
    std::vector<CMatrix> projectors(n, CMatrix::Zero(dim, dim));
    for (std::size_t j = 0; j < d; ++j) {
        // The last outcome absorbs any padding dimensions.
        const std::size_t k = std::min(j, n - 1);
        projectors[k](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = 1.0;
    }
    return projectors;
}

} // namespace

Complex ClosedPolygon::residual() const { return std::accumulate(zs.begin(), zs.end(), Complex(0.0)); }

ClosedPolygon close_polygon(std::span<const double> xs) {
    double total = 0.0;
    double largest = 0.0;
    for (double x : xs) {
        if (!std::isfinite(x) || x < 0.0) {
            throw std::invalid_argument("polygon side lengths must be non-negative reals");
        }
        total += x;
        largest = std::max(largest, x);
    }
    if (largest > total - largest + kFeasTolerance) {
        throw PolygonViolation("side length " + std::to_string(largest) +
                               " exceeds the sum of the others");
    }
    if (xs.empty()) {
        return ClosedPolygon{};
    }

    Groups sums{};
    std::vector<int> group = greedy_groups(xs, sums);
    if (!is_triangle(sums, kFeasTolerance)) {
        if (xs.size() > 12 || !exhaustive_groups(xs, kFeasTolerance, group, sums)) {
            throw ClosureFailure("no three-way split of the side lengths forms a triangle");
        }
    }

    const std::array<Complex, 3> dirs = triangle_directions(sums);
    ClosedPolygon poly;
    poly.zs.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        poly.zs.push_back(xs[i] * dirs[static_cast<std::size_t>(group[i])]);
    }

    const double scale = std::max(1.0, total);
    if (std::abs(poly.residual()) > kClosureTolerance * scale) {
        throw ClosureFailure("polygon residual " + std::to_string(std::abs(poly.residual())) +
                             " exceeds tolerance");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (std::abs(std::abs(poly.zs[i]) - xs[i]) > 1e-12 * std::max(1.0, xs[i])) {
            throw ClosureFailure("polygon edge " + std::to_string(i) + " lost its length");
        }
    }
    return poly;
}

AmplitudePair factor_amplitudes(std::span<const Complex> zs) {
    const std::size_t n = zs.size();
    if (n < 2) {
        throw std::invalid_argument("amplitude factorization needs n >= 2");
    }
    std::vector<double> w(n);
    double l1 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = std::abs(zs[k]);
        l1 += w[k];
    }
    if (l1 > 1.0 + kFeasTolerance) {
        throw NormViolation("sum of |z_k| is " + std::to_string(l1) + " > 1");
    }

    // Peel off the largest remaining magnitude, rescaling the rest, until two
    // are left; those are solved with the two-angle base case.
    std::vector<std::size_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), std::size_t{0});
    std::stable_sort(remaining.begin(), remaining.end(),
                     [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });

    std::vector<double> psi(n, 0.0);
    std::vector<double> phi(n, 0.0);
    double scale = 1.0;
    bool done = false;
    while (remaining.size() > 2) {
        const std::size_t top = remaining.back();
        remaining.pop_back();
        const double wt = w[top];
        if (wt >= 1.0) {
            psi[top] = phi[top] = scale;
            done = true;
            break;
        }
        psi[top] = phi[top] = scale * std::sqrt(wt);
        const double rest = 1.0 - wt;
        scale *= std::sqrt(rest);
        for (std::size_t k : remaining) {
            w[k] /= rest;
        }
    }
    if (!done) {
        const std::size_t i = remaining[0];
        const std::size_t j = remaining[1];
        const double sum_angle = std::acos(std::clamp(w[i] - w[j], -1.0, 1.0));
        const double diff_angle = std::acos(std::clamp(w[i] + w[j], -1.0, 1.0));
        const double alpha = 0.5 * (sum_angle + diff_angle);
        const double beta = 0.5 * (sum_angle - diff_angle);
        psi[i] = scale * std::cos(alpha);
        psi[j] = scale * std::sin(alpha);
        phi[i] = scale * std::cos(beta);
        phi[j] = scale * std::sin(beta);
    }

    const auto dim = static_cast<Eigen::Index>(n);
    CVector psi_v(dim);
    CVector phi_v(dim);
    for (std::size_t k = 0; k < n; ++k) {
        const auto e = static_cast<Eigen::Index>(k);
        psi_v(e) = psi[k];
        const double mag = std::abs(zs[k]);
        phi_v(e) = mag > 0.0 ? phi[k] * (zs[k] / mag) : Complex(phi[k]);
    }
    return AmplitudePair{AmplitudeVector(std::move(psi_v)), AmplitudeVector(std::move(phi_v))};
}

ProjectiveWitness construct_projective(const ScenarioTriple &sc) {
    const FeasibilityVerdict verdict = check_projective_raw(sc);
    if (!verdict.feasible) {
        std::string tags;
        for (Constraint c : verdict.violated) {
            tags += (tags.empty() ? "" : ", ") + std::string(to_string(c));
        }
        throw InfeasibleScenario("scenario is not projectively realizable (violates " + tags + ")");
    }

    const std::size_t n = sc.outcomes();
    std::vector<double> xs(n + 1);
    for (std::size_t k = 0; k < n; ++k) {
        xs[k] = std::sqrt(sc.dist()[k] * sc.s());
    }
    xs[n] = std::sqrt(sc.t());
    const ClosedPolygon poly = close_polygon(xs);

    const std::size_t d = std::max<std::size_t>(n, 2);
    std::vector<Complex> zs(d, Complex(0.0));
    std::copy_n(poly.zs.begin(), n, zs.begin());
    // Boundary scenarios can land a rounding error above the unit l1 norm.
    const double l1 = std::accumulate(zs.begin(), zs.end(), 0.0,
                                      [](double acc, Complex z) { return acc + std::abs(z); });
    if (l1 > 1.0) {
        for (Complex &z : zs) {
            z /= l1;
        }
    }

    AmplitudePair pair = factor_amplitudes(zs);
    return ProjectiveWitness{std::move(pair.psi), std::move(pair.phi), basis_projectors(n, d)};
}

CVector orthogonal_complement_direction(const CVector &v) {
    const Eigen::Index d = v.size();
    if (d < 2) {
        throw std::invalid_argument("no orthogonal direction exists in dimension 1");
    }
    const double norm_sq = v.squaredNorm();
    Eigen::Index j = 0;
    while (j + 1 < d && std::norm(v(j)) > 0.5 * norm_sq) {
        ++j;
    }
    CVector w = -v * (std::conj(v(j)) / norm_sq);
    w(j) += 1.0;
    return w / w.norm();
}

CMatrix unitary_mapping(const CVector &x, const CVector &y) {
    const Eigen::Index d = x.size();
    const Complex g = y.dot(x);
    const Complex omega = std::abs(g) > 0.0 ? g / std::abs(g) : Complex(1.0);
    const CVector target = omega * y;
    const CVector w = x - target;
    const double w_norm_sq = w.squaredNorm();
    CMatrix u = CMatrix::Identity(d, d);
    if (std::sqrt(w_norm_sq) > kUnitTolerance) {
        u -= (2.0 / w_norm_sq) * (w * w.adjoint());
    }
    return std::conj(omega) * u;
}

GeneralizedWitness construct_generalized(const ScenarioTriple &sc) {
    const std::size_t n = sc.outcomes();
    const std::size_t d = std::max<std::size_t>(n, 2);
    const auto dim = static_cast<Eigen::Index>(d);

    CVector psi = CVector::Zero(dim);
    for (std::size_t k = 0; k < n; ++k) {
        psi(static_cast<Eigen::Index>(k)) = std::sqrt(sc.dist()[k]);
    }
    psi /= psi.norm();
    const CVector phi = std::sqrt(sc.t()) * psi +
                        std::sqrt(1.0 - sc.t()) * orthogonal_complement_direction(psi);
    const CVector phi_post = std::sqrt(sc.s()) * phi +
                             std::sqrt(1.0 - sc.s()) * orthogonal_complement_direction(phi);

    std::vector<CMatrix> projectors = basis_projectors(n, d);
    GeneralizedWitness w{AmplitudeVector(psi), AmplitudeVector(phi), {}, {}};
    w.kraus.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sc.dist()[k] <= 0.0) {
            w.kraus.push_back(projectors[k]);
            w.repaired_outcomes.push_back(k);
            continue;
        }
        const CVector e_k = CVector::Unit(dim, static_cast<Eigen::Index>(k));
        CMatrix v = unitary_mapping(e_k, phi_post) * projectors[k];
        const Complex amp = phi.dot(v * psi);
        if (std::abs(amp) > 0.0) {
            v *= std::conj(amp) / std::abs(amp);
        }
        w.kraus.push_back(std::move(v));
    }
    return w;
}

} // namespace postselect
