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

#include "postselect/regions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "postselect/feasibility.hpp"
#include "postselect/parallel.hpp"
#include "postselect/types.hpp"

namespace postselect {
namespace {

void require_resolution(std::size_t resolution) {
    if (resolution < 2) {
        throw std::invalid_argument("grid resolution must be >= 2");
    }
}

std::vector<std::string> tags_of(const FeasibilityVerdict &v) {
    std::vector<std::string> out;
    out.reserve(v.violated.size());
    for (Constraint c : v.violated) {
        out.emplace_back(to_string(c));
    }
    return out;
}

template <typename Eval>
RegionGrid fill_grid(std::string name, Axis a, Axis b, Eval &&eval) {
    RegionGrid grid;
    grid.name = std::move(name);
    grid.axes = {std::move(a), std::move(b)};
    const std::size_t rows = grid.axes[0].resolution;
    const std::size_t cols = grid.axes[1].resolution;
    grid.cells.resize(rows * cols);
    parallel_for(rows, [&](std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) {
            RegionSample &cell = grid.cells[i * cols + j];
            cell.coords = {grid.axes[0].center(i), grid.axes[1].center(j)};
            eval(i, j, cell);
        }
    });
    return grid;
}

template <typename F>
Polyline sample_curve(std::string name, double lo, double hi, std::size_t points, F &&f) {
    Polyline line{std::move(name), {}};
    line.points.reserve(points + 1);
    for (std::size_t k = 0; k <= points; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points);
        line.points.push_back({x, f(x)});
    }
    return line;
}

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::size_t RegionGrid::feasible_count() const {
    return static_cast<std::size_t>(
        std::count_if(cells.begin(), cells.end(), [](const RegionSample &c) { return c.feasible; }));
}

double RegionGrid::feasible_area_fraction() const {
    double cell_area = 1.0;
    for (const Axis &a : axes) {
        cell_area *= a.step();
    }
    return static_cast<double>(feasible_count()) * cell_area / domain_area;
}

RegionGrid emit_ternary(std::size_t resolution) {
    require_resolution(resolution);
    RegionGrid grid = fill_grid("ternary", Axis{"p1", 0.0, 1.0, resolution},
                                Axis{"p2", 0.0, 1.0, resolution},
                                [resolution](std::size_t i, std::size_t j, RegionSample &cell) {
                                    if (i + j + 1 > resolution) {
                                        cell.violated = {kOutsideSimplex};
                                        return;
                                    }
                                    const double p1 = cell.coords[0];
                                    const double p2 = cell.coords[1];
                                    const double p3 = std::max(0.0, 1.0 - p1 - p2);
                                    cell.feasible = check_ternary_disk(OutcomeDistribution({p1, p2, p3}));
                                    if (!cell.feasible) {
                                        cell.violated = {std::string(to_string(Constraint::MaxOutcomePolygon))};
                                    }
                                });
    grid.domain_area = 0.5;

    // Inscribed circle of the simplex, projected onto (p1, p2).
    Polyline circle{"disk_boundary", {}};
    const double radius = 1.0 / std::sqrt(6.0);
    for (int k = 0; k <= 360; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 360.0;
        const double u = radius * std::cos(a);
        const double v = radius * std::sin(a);
        circle.points.push_back({1.0 / 3.0 + u / std::sqrt(2.0) + v / std::sqrt(6.0),
                                 1.0 / 3.0 - u / std::sqrt(2.0) + v / std::sqrt(6.0)});
    }
    grid.curves.push_back(std::move(circle));
    return grid;
}

RegionGrid emit_ps_region(std::size_t resolution) {
    require_resolution(resolution);
    RegionGrid grid = fill_grid("ps", Axis{"p", 0.0, 1.0, resolution}, Axis{"S", 0.0, 1.0, resolution},
                                [](std::size_t, std::size_t, RegionSample &cell) {
                                    const double p = cell.coords[0];
                                    const double s = cell.coords[1];
                                    // Best T for this (p, S): the top of the admissible T band.
                                    const double root_sum = std::sqrt(p) + std::sqrt(1.0 - p);
                                    const double t = std::min(1.0, s * root_sum * root_sum);
                                    const FeasibilityVerdict v = check_dichotomic(p, t, s);
                                    cell.feasible = v.feasible;
                                    cell.violated = tags_of(v);
                                });
    grid.curves.push_back(sample_curve("s_max", 0.0, 1.0, resolution, [](double p) {
        return 1.0 / (1.0 + 2.0 * std::sqrt(p * (1.0 - p)));
    }));
    return grid;
}

RegionGrid emit_pt_sections(double s, std::size_t resolution) {
    require_resolution(resolution);
    if (!(s > 0.0 && s <= 1.0)) {
        throw std::invalid_argument("success probability must lie in (0, 1]");
    }
    RegionGrid grid = fill_grid("pt", Axis{"p", 0.0, 1.0, resolution}, Axis{"T", 0.0, 1.0, resolution},
                                [s](std::size_t, std::size_t, RegionSample &cell) {
                                    const FeasibilityVerdict v =
                                        check_dichotomic(cell.coords[0], cell.coords[1], s);
                                    cell.feasible = v.feasible;
                                    cell.violated = tags_of(v);
                                });
    grid.curves.push_back(sample_curve("t_lower", 0.0, 1.0, resolution, [s](double p) {
        const double d = std::sqrt(p) - std::sqrt(1.0 - p);
        return s * d * d;
    }));
    grid.curves.push_back(sample_curve("t_upper", 0.0, 1.0, resolution, [s](double p) {
        const double d = std::sqrt(p) + std::sqrt(1.0 - p);
        return std::min(1.0, s * d * d);
    }));
    if (s > 0.5) {
        // sqrt p + sqrt(1-p) = 1/sqrt S  <=>  2 sqrt(p(1-p)) = 1/S - 1.
        const double half_width = 0.5 * std::sqrt(std::max(0.0, 1.0 - std::pow(1.0 / s - 1.0, 2)));
        for (const double p : {0.5 - half_width, 0.5 + half_width}) {
            grid.curves.push_back(Polyline{p < 0.5 ? "cut_left" : "cut_right", {{p, 0.0}, {p, 1.0}}});
        }
    }
    return grid;
}

RegionGrid emit_ts_region(std::size_t n, std::size_t resolution) {
    require_resolution(resolution);
    if (n == 0) {
        throw std::invalid_argument("number of outcomes must be >= 1");
    }
    RegionGrid grid = fill_grid("ts", Axis{"T", 0.0, 1.0, resolution}, Axis{"S", 0.0, 1.0, resolution},
                                [n](std::size_t, std::size_t, RegionSample &cell) {
                                    const FeasibilityVerdict v =
                                        check_ts_region(cell.coords[0], cell.coords[1], n);
                                    cell.feasible = v.feasible;
                                    cell.violated = tags_of(v);
                                });
    const double nn = static_cast<double>(n);
    grid.curves.push_back(sample_curve("s_lower", 0.0, 1.0, 1, [nn](double t) { return t / nn; }));
    grid.curves.push_back(sample_curve("s_upper", 0.0, 1.0, 1, [](double t) { return (t + 1.0) / 2.0; }));
    grid.curves.push_back(sample_curve("enhancement_diagonal", 0.0, 1.0, 1, [](double t) { return t; }));
    return grid;
}

void write_csv(const RegionGrid &grid, std::ostream &out) {
    for (const Axis &a : grid.axes) {
        out << a.name << ',';
    }
    out << "feasible,violated\n";
    for (const RegionSample &cell : grid.cells) {
        for (double c : cell.coords) {
            out << fmt12(c) << ',';
        }
        out << (cell.feasible ? 1 : 0) << ',';
        for (std::size_t k = 0; k < cell.violated.size(); ++k) {
            out << (k ? ";" : "") << cell.violated[k];
        }
        out << '\n';
    }
}

void write_curves_csv(const RegionGrid &grid, std::ostream &out) {
    out << "curve,x,y\n";
    for (const Polyline &line : grid.curves) {
        for (const auto &[x, y] : line.points) {
            out << line.name << ',' << fmt12(x) << ',' << fmt12(y) << '\n';
        }
    }
}

void write_svg(const RegionGrid &grid, std::ostream &out) {
    const Axis &ax = grid.axes[0];
    const Axis &ay = grid.axes[1];
    const double w = ax.hi - ax.lo;
    const double h = ay.hi - ay.lo;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\""
        << fmt12(ax.lo) << ' ' << fmt12(ay.lo) << ' ' << fmt12(w) << ' ' << fmt12(h)
        << "\" preserveAspectRatio=\"none\">\n";
    out << "<title>" << grid.name << ": " << ax.name << " vs " << ay.name << "</title>\n";
    // Flip so the second axis points up.
    out << "<g transform=\"translate(0 " << fmt12(ay.lo + ay.hi) << ") scale(1 -1)\">\n";
    out << "<g fill=\"#c8c8c8\" stroke=\"none\">\n";
    // Cells are indexed (x, y); merge runs along y for each x column.
    for (std::size_t i = 0; i < ax.resolution; ++i) {
        std::size_t j = 0;
        while (j < ay.resolution) {
            if (!grid.at(i, j).feasible) {
                ++j;
                continue;
            }
            const std::size_t start = j;
            while (j < ay.resolution && grid.at(i, j).feasible) {
                ++j;
            }
            out << "<rect x=\"" << fmt12(ax.lo + static_cast<double>(i) * ax.step()) << "\" y=\""
                << fmt12(ay.lo + static_cast<double>(start) * ay.step()) << "\" width=\""
                << fmt12(ax.step()) << "\" height=\"" << fmt12(static_cast<double>(j - start) * ay.step())
                << "\"/>\n";
        }
    }
    out << "</g>\n";
    for (const Polyline &line : grid.curves) {
        out << "<polyline id=\"" << line.name
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" "
               "vector-effect=\"non-scaling-stroke\" points=\"";
        for (std::size_t k = 0; k < line.points.size(); ++k) {
            out << (k ? " " : "") << fmt12(line.points[k][0]) << ',' << fmt12(line.points[k][1]);
        }
        out << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
}

} // namespace postselect
