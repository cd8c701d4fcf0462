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

#include "postselect/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "postselect/errors.hpp"
#include "postselect/parallel.hpp"

namespace postselect {
namespace {

constexpr double kTWindow = 1e-3;

class Fnv1a {
  public:
    void add(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h_ ^= (v >> (8 * i)) & 0xffU;
            h_ *= 0x100000001b3ULL;
        }
    }
    void add(double v) { add(std::bit_cast<std::uint64_t>(v)); }
    void add(Complex z) {
        add(z.real());
        add(z.imag());
    }
    [[nodiscard]] std::uint64_t value() const { return h_; }

  private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

CVector gaussian_vector(std::size_t d, CounterRng &rng) {
    std::normal_distribution<double> normal(0.0, M_SQRT1_2);
    CVector v(static_cast<Eigen::Index>(d));
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        const double re = normal(rng);
        const double im = normal(rng);
        v(k) = Complex(re, im);
    }
    return v;
}

CMatrix gaussian_matrix(std::size_t d, CounterRng &rng) {
    std::normal_distribution<double> normal(0.0, M_SQRT1_2);
    const auto dim = static_cast<Eigen::Index>(d);
    CMatrix m(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        for (Eigen::Index r = 0; r < dim; ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

CMatrix orthonormalize(const CMatrix &m) {
    const Eigen::Index d = m.rows();
    Eigen::HouseholderQR<CMatrix> qr(m);
    CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex r = qr.matrixQR()(j, j);
        if (std::abs(r) > 0.0) {
            q.col(j) *= r / std::abs(r);
        }
    }
    return q;
}

std::vector<CMatrix> group_projectors(const CMatrix &basis, std::span<const std::size_t> ranks) {
    std::vector<CMatrix> projectors;
    projectors.reserve(ranks.size());
    Eigen::Index col = 0;
    for (std::size_t rank : ranks) {
        const auto r = static_cast<Eigen::Index>(rank);
        const auto block = basis.middleCols(col, r);
        projectors.emplace_back(block * block.adjoint());
        col += r;
    }
    return projectors;
}

AmplitudeVector orthogonal_state(const AmplitudeVector &psi, CounterRng &rng) {
    for (;;) {
        CVector chi = gaussian_vector(psi.dimension(), rng);
        chi -= psi.entries() * psi.entries().dot(chi);
        const double norm = chi.norm();
        if (norm > 1e-6) {
            return AmplitudeVector(chi / norm);
        }
    }
}

int cell(double x, double step) {
    const int last = static_cast<int>(std::ceil(1.0 / step)) - 1;
    return std::clamp(static_cast<int>(std::floor(x / step)), 0, last);
}

FuzzReport run_chunk(std::size_t d, std::size_t n, std::size_t count, CounterRng rng,
                     const FuzzOptions &options) {
    FuzzReport report;
    report.grid_step = options.grid_step;
    for (std::size_t i = 0; i < count; ++i) {
        ++report.samples;
        AmplitudeVector psi = sample_state(d, rng);
        AmplitudeVector phi = options.orthogonal ? orthogonal_state(psi, rng) : sample_state(d, rng);
        ProjectiveWitness w{std::move(psi), std::move(phi), sample_projective(d, n, rng)};

        std::optional<ScenarioTriple> sc;
        try {
            sc = evaluate_witness(w);
        } catch (const DegeneratePostselection &) {
        }
        if (!sc || sc->s() <= options.discard_below) {
            ++report.discarded;
            continue;
        }
        ++report.accepted;

        const FeasibilityVerdict verdict = check_projective_raw(*sc, options.tolerance);
        if (!verdict.feasible) {
            report.violations.push_back(FuzzViolation{witness_digest(w), *sc, verdict.violated});
        }
        ++report.coverage_grid[{cell(sc->t(), options.grid_step), cell(sc->s(), options.grid_step)}];
        if (n == 3 && options.orthogonal) {
            ++report.ternary_grid[{cell(sc->dist()[0], options.grid_step),
                                   cell(sc->dist()[1], options.grid_step)}];
        }
        if (n == 2) {
            report.max_fair_deviation =
                std::max(report.max_fair_deviation, std::abs(sc->dist()[0] - 0.5));
        }
    }
    return report;
}

} // namespace

AmplitudeVector sample_state(std::size_t d, CounterRng &rng) {
    if (d == 0) {
        throw std::invalid_argument("state dimension must be >= 1");
    }
    for (;;) {
        CVector v = gaussian_vector(d, rng);
        const double norm = v.norm();
        if (norm > 0.0) {
            return AmplitudeVector(v / norm);
        }
    }
}

CMatrix sample_unitary(std::size_t d, CounterRng &rng) {
    if (d == 0) {
        throw std::invalid_argument("unitary dimension must be >= 1");
    }
    return orthonormalize(gaussian_matrix(d, rng));
}

std::vector<std::size_t> sample_composition(std::size_t d, std::size_t n, CounterRng &rng) {
    if (n == 0 || n > d) {
        throw std::invalid_argument("need 1 <= outcomes <= dimension");
    }
    std::vector<std::size_t> slots(d - 1);
    std::iota(slots.begin(), slots.end(), std::size_t{1});
    std::vector<std::size_t> cuts;
    cuts.reserve(n + 1);
    cuts.push_back(0);
    std::sample(slots.begin(), slots.end(), std::back_inserter(cuts), n - 1, rng);
    cuts.push_back(d);
    std::vector<std::size_t> parts(n);
    for (std::size_t j = 0; j < n; ++j) {
        parts[j] = cuts[j + 1] - cuts[j];
    }
    return parts;
}

std::vector<CMatrix> sample_projective(std::size_t d, std::size_t n, CounterRng &rng) {
    const std::vector<std::size_t> ranks = sample_composition(d, n, rng);
    return group_projectors(sample_unitary(d, rng), ranks);
}

std::uint64_t witness_digest(const ProjectiveWitness &w) {
    Fnv1a h;
    for (Eigen::Index k = 0; k < w.psi.entries().size(); ++k) {
        h.add(w.psi.entries()(k));
        h.add(w.phi.entries()(k));
    }
    for (const CMatrix &p : w.projectors) {
        for (Eigen::Index k = 0; k < p.size(); ++k) {
            h.add(p.data()[k]);
        }
    }
    return h.value();
}

void FuzzReport::merge(const FuzzReport &other) {
    samples += other.samples;
    accepted += other.accepted;
    discarded += other.discarded;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto &[key, hits] : other.coverage_grid) {
        coverage_grid[key] += hits;
    }
    for (const auto &[key, hits] : other.ternary_grid) {
        ternary_grid[key] += hits;
    }
    max_fair_deviation = std::max(max_fair_deviation, other.max_fair_deviation);
}

std::uint64_t FuzzReport::digest() const {
    Fnv1a h;
    h.add(static_cast<std::uint64_t>(samples));
    h.add(static_cast<std::uint64_t>(accepted));
    h.add(static_cast<std::uint64_t>(discarded));
    for (const FuzzViolation &v : violations) {
        h.add(v.witness_digest);
    }
    for (const auto *grid : {&coverage_grid, &ternary_grid}) {
        h.add(static_cast<std::uint64_t>(grid->size()));
        for (const auto &[key, hits] : *grid) {
            h.add(static_cast<std::uint64_t>(static_cast<std::uint32_t>(key[0])));
            h.add(static_cast<std::uint64_t>(static_cast<std::uint32_t>(key[1])));
            h.add(static_cast<std::uint64_t>(hits));
        }
    }
    h.add(max_fair_deviation);
    return h.value();
}

FuzzReport fuzz_projective(std::size_t d, std::size_t n, std::size_t samples,
                           const CounterRng &rng, const FuzzOptions &options) {
    if (n == 0 || n > d) {
        throw std::invalid_argument("need 1 <= outcomes <= dimension");
    }
    if (samples == 0) {
        throw std::invalid_argument("need at least one sample");
    }
    const std::size_t chunk = std::max<std::size_t>(1, options.chunk);
    const std::size_t chunks = (samples + chunk - 1) / chunk;
    std::vector<FuzzReport> parts(chunks);
    parallel_for(chunks, [&](std::size_t c) {
        const std::size_t count = std::min(chunk, samples - c * chunk);
        parts[c] = run_chunk(d, n, count, rng.split(c), options);
    });
    FuzzReport total;
    total.grid_step = options.grid_step;
    for (const FuzzReport &part : parts) {
        total.merge(part);
    }
    return total;
}

SearchResult search_success(double t, std::size_t n, std::size_t d, std::size_t trials,
                            CounterRng &rng, SearchGoal goal) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::invalid_argument("target transition probability must lie in [0, 1]");
    }
    if (n == 0 || n > d) {
        throw std::invalid_argument("need 1 <= outcomes <= dimension");
    }
    if (trials == 0) {
        throw SearchBudgetExhausted("search needs at least one trial");
    }
    const auto better = [goal](double a, double b) {
        return goal == SearchGoal::MaximizeS ? a > b : a < b;
    };

    struct Point {
        CVector psi;
        CVector chi;
        CMatrix basis;
    };
    // phi is rebuilt from psi and chi so every candidate sits at T = t.
    const auto build = [&](const Point &p, std::span<const std::size_t> ranks) {
        const CVector psi = p.psi / p.psi.norm();
        CVector perp = p.chi - psi * psi.dot(p.chi);
        perp /= perp.norm();
        const CVector phi = std::sqrt(t) * psi + std::sqrt(1.0 - t) * perp;
        return ProjectiveWitness{AmplitudeVector(psi), AmplitudeVector(phi / phi.norm()),
                                 group_projectors(p.basis, ranks)};
    };
    const auto score = [&](const ProjectiveWitness &w) -> std::optional<ScenarioTriple> {
        try {
            ScenarioTriple sc = evaluate_witness(w);
            if (std::abs(sc.t() - t) <= kTWindow && sc.s() > 1e-9) {
                return sc;
            }
        } catch (const Error &) {
            // degenerate draw; treated as inadmissible
        }
        return std::nullopt;
    };

    const std::size_t restarts = std::clamp<std::size_t>(trials / 1000, 1, 16);
    std::optional<SearchResult> best;
    std::size_t admissible = 0;
    std::size_t used = 0;
    for (std::size_t r = 0; r < restarts && used < trials; ++r) {
        const std::size_t budget = (trials - used) / (restarts - r);
        const std::vector<std::size_t> ranks = sample_composition(d, n, rng);
        Point current{gaussian_vector(d, rng), gaussian_vector(d, rng), sample_unitary(d, rng)};
        std::optional<ScenarioTriple> current_sc = score(build(current, ranks));
        ++used;
        admissible += current_sc ? 1 : 0;
        double step = 0.3;
        for (std::size_t i = 1; i < budget; ++i) {
            Point next{current.psi + step * gaussian_vector(d, rng),
                       current.chi + step * gaussian_vector(d, rng),
                       current.basis * orthonormalize(CMatrix::Identity(static_cast<Eigen::Index>(d),
                                                                        static_cast<Eigen::Index>(d)) +
                                                      step * gaussian_matrix(d, rng))};
            const ProjectiveWitness w = build(next, ranks);
            const std::optional<ScenarioTriple> sc = score(w);
            ++used;
            if (!sc) {
                step = std::max(1e-6, step * 0.9);
                continue;
            }
            ++admissible;
            if (!current_sc || better(sc->s(), current_sc->s())) {
                current = std::move(next);
                current_sc = sc;
                step = std::min(1.0, step * 1.5);
                if (!best || better(sc->s(), best->s)) {
                    best = SearchResult{sc->s(), sc->t(), 0, w};
                }
            } else {
                step = std::max(1e-6, step * 0.9);
            }
        }
        if (current_sc && (!best || better(current_sc->s(), best->s))) {
            best = SearchResult{current_sc->s(), current_sc->t(), 0, build(current, ranks)};
        }
    }
    if (!best) {
        throw SearchBudgetExhausted("no sample met |T - " + std::to_string(t) + "| <= 1e-3");
    }
    best->admissible = admissible;
    return *best;
}

double oracle_max_s(double t, std::size_t n, std::size_t d, std::size_t trials, CounterRng &rng) {
    return search_success(t, n, d, trials, rng, SearchGoal::MaximizeS).s;
}

double oracle_min_s(double t, std::size_t n, std::size_t d, std::size_t trials, CounterRng &rng) {
    return search_success(t, n, d, trials, rng, SearchGoal::MinimizeS).s;
}

} // namespace postselect
