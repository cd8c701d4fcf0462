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
#include <iosfwd>
#include <string>
#include <vector>

namespace postselect {

/// Half-open range [lo, hi) split into `resolution` cells, sampled at centers.
struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    std::size_t resolution = 0;

    [[nodiscard]] double step() const { return (hi - lo) / static_cast<double>(resolution); }
    [[nodiscard]] double center(std::size_t i) const {
        return lo + (static_cast<double>(i) + 0.5) * step();
    }
};

struct RegionSample {
    std::vector<double> coords;
    bool feasible = false;
    std::vector<std::string> violated;
};

struct Polyline {
    std::string name;
    std::vector<std::array<double, 2>> points;
};

/// Two-axis grid of feasibility verdicts. Cells are stored row-major with the
/// first axis varying slowest.
struct RegionGrid {
    std::string name;
    std::vector<Axis> axes;
    std::vector<RegionSample> cells;
    std::vector<Polyline> curves;
    /// Area of the admissible domain in axis units (1/2 for the simplex chart).
    double domain_area = 1.0;

    [[nodiscard]] const RegionSample &at(std::size_t i, std::size_t j) const {
        return cells[i * axes[1].resolution + j];
    }
    [[nodiscard]] std::size_t feasible_count() const;
    /// Feasible cell area over domain area.
    [[nodiscard]] double feasible_area_fraction() const;
};

/// Tag for chart cells that are not probability distributions.
inline constexpr const char *kOutsideSimplex = "OutsideSimplex";

/// Orthogonal-postselection region for three outcomes, charted by
/// (P(1), P(2)) with P(3) = 1 - P(1) - P(2). Cells with centers outside the
/// simplex are infeasible and tagged OutsideSimplex.
RegionGrid emit_ternary(std::size_t resolution);

/// (p, S) for two outcomes, projected over T: feasible iff
/// S <= 1 / (1 + 2 sqrt(p(1-p))).
RegionGrid emit_ps_region(std::size_t resolution);

/// (p, T) for two outcomes at fixed S.
RegionGrid emit_pt_sections(double s, std::size_t resolution);

/// (T, S) attainable with n outcomes.
RegionGrid emit_ts_region(std::size_t n, std::size_t resolution);

/// Header: axis names, `feasible`, `violated`; floats at 12 significant
/// digits; violated tags joined by ';'.
void write_csv(const RegionGrid &grid, std::ostream &out);

/// Header `curve,x,y`, one row per polyline vertex.
void write_curves_csv(const RegionGrid &grid, std::ostream &out);

/// Feasible cells (merged into row runs) plus boundary polylines, with the
/// viewBox spanning the axis ranges.
void write_svg(const RegionGrid &grid, std::ostream &out);

} // namespace postselect
