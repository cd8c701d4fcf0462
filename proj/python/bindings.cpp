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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "postselect/construct.hpp"
#include "postselect/diversity.hpp"
#include "postselect/errors.hpp"
#include "postselect/feasibility.hpp"
#include "postselect/oracle.hpp"
#include "postselect/regions.hpp"
#include "postselect/witness.hpp"

namespace py = pybind11;
using namespace postselect;

namespace {

OutcomeDistribution dist_of(const std::vector<double> &p) { return OutcomeDistribution(p); }

py::dict verdict_dict(const FeasibilityVerdict &v) {
    py::list violated;
    for (Constraint c : v.violated) {
        violated.append(std::string(to_string(c)));
    }
    py::dict slack;
    for (const auto &[c, value] : v.slack) {
        slack[py::str(std::string(to_string(c)))] = value;
    }
    py::dict out;
    out["feasible"] = v.feasible;
    out["violated"] = violated;
    out["slack"] = slack;
    return out;
}

py::tuple scenario_tuple(const ScenarioTriple &sc) {
    return py::make_tuple(sc.t(), sc.s(),
                          std::vector<double>(sc.dist().probs().begin(), sc.dist().probs().end()));
}

template <typename W>
py::dict witness_dict(const W &w, const std::vector<CMatrix> &ops, const char *kind) {
    py::dict out;
    out["kind"] = kind;
    out["psi"] = w.psi.entries();
    out["phi"] = w.phi.entries();
    out["operators"] = ops;
    return out;
}

py::dict region_dict(const RegionGrid &grid) {
    const std::size_t rows = grid.axes[0].resolution;
    const std::size_t cols = grid.axes[1].resolution;
    py::array_t<bool> feasible({rows, cols});
    auto view = feasible.mutable_unchecked<2>();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = grid.at(i, j).feasible;
        }
    }
    py::list axes;
    for (const Axis &a : grid.axes) {
        axes.append(py::make_tuple(a.name, a.lo, a.hi, a.resolution));
    }
    py::dict curves;
    for (const Polyline &line : grid.curves) {
        curves[py::str(line.name)] = line.points;
    }
    py::dict out;
    out["name"] = grid.name;
    out["axes"] = axes;
    out["feasible"] = feasible;
    out["curves"] = curves;
    out["feasible_area_fraction"] = grid.feasible_area_fraction();
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Feasibility, witnesses and regions for postselected measurement statistics";

    static py::exception<Error> base(m, "PostselectError", PyExc_RuntimeError);
    py::register_exception<DegeneratePostselection>(m, "DegeneratePostselection", base.ptr());
    py::register_exception<InvalidWitness>(m, "InvalidWitness", base.ptr());
    py::register_exception<PolygonViolation>(m, "PolygonViolation", base.ptr());
    py::register_exception<SingularSystem>(m, "SingularSystem", base.ptr());
    py::register_exception<RegionViolation>(m, "RegionViolation", base.ptr());
    py::register_exception<ClosureFailure>(m, "ClosureFailure", base.ptr());
    py::register_exception<NormViolation>(m, "NormViolation", base.ptr());
    py::register_exception<InfeasibleScenario>(m, "InfeasibleScenario", base.ptr());
    py::register_exception<SearchBudgetExhausted>(m, "SearchBudgetExhausted", base.ptr());

    m.def("diversity", [](const std::vector<double> &p, double q) { return diversity(dist_of(p), q); },
          py::arg("p"), py::arg("q"), "Hill diversity D_q; pass float('inf') for the min-entropy index.");
    m.def("diversity_profile", [](const std::vector<double> &p) {
        const DiversityProfile prof = diversity_profile(dist_of(p));
        py::dict out;
        out["d_half"] = prof.d_half;
        out["d_inf"] = prof.d_inf;
        out["h_half"] = prof.h_half;
        out["h_inf"] = prof.h_inf;
        return out;
    }, py::arg("p"));

    m.def("check_projective_raw", [](double t, double s, const std::vector<double> &p) {
        return verdict_dict(check_projective_raw(ScenarioTriple(t, s, dist_of(p))));
    }, py::arg("t"), py::arg("s"), py::arg("p"));
    m.def("check_projective_chain", [](double t, double s, const std::vector<double> &p) {
        return verdict_dict(check_projective_chain(ScenarioTriple(t, s, dist_of(p))));
    }, py::arg("t"), py::arg("s"), py::arg("p"));
    m.def("check_generalized", [](double t, double s, const std::vector<double> &p) {
        return verdict_dict(check_generalized(ScenarioTriple(t, s, dist_of(p))));
    }, py::arg("t"), py::arg("s"), py::arg("p"));
    m.def("check_ts_region", [](double t, double s, std::size_t n) {
        return verdict_dict(check_ts_region(t, s, n));
    }, py::arg("t"), py::arg("s"), py::arg("n"));
    m.def("check_ternary_disk", [](const std::vector<double> &p) { return check_ternary_disk(dist_of(p)); },
          py::arg("p"));
    m.def("check_dichotomic", [](double p, double t, double s) {
        return verdict_dict(check_dichotomic(p, t, s));
    }, py::arg("p"), py::arg("t"), py::arg("s"));
    m.def("cone_decompose", [](const std::vector<double> &p) { return cone_decompose(dist_of(p)).lambdas; },
          py::arg("p"));
    m.def("witness_distribution", [](double t, double s, std::size_t n) {
        const OutcomeDistribution d = witness_distribution(t, s, n);
        return std::vector<double>(d.probs().begin(), d.probs().end());
    }, py::arg("t"), py::arg("s"), py::arg("n"));

    m.def("close_polygon", [](const std::vector<double> &xs) { return close_polygon(xs).zs; },
          py::arg("xs"));
    m.def("factor_amplitudes", [](const std::vector<Complex> &zs) {
        const AmplitudePair pair = factor_amplitudes(zs);
        return py::make_tuple(pair.psi.entries(), pair.phi.entries());
    }, py::arg("zs"));
    m.def("construct_projective", [](double t, double s, const std::vector<double> &p) {
        const ProjectiveWitness w = construct_projective(ScenarioTriple(t, s, dist_of(p)));
        return witness_dict(w, w.projectors, "projective");
    }, py::arg("t"), py::arg("s"), py::arg("p"));
    m.def("construct_generalized", [](double t, double s, const std::vector<double> &p) {
        const GeneralizedWitness w = construct_generalized(ScenarioTriple(t, s, dist_of(p)));
        py::dict out = witness_dict(w, w.kraus, "generalized");
        out["repaired_outcomes"] = w.repaired_outcomes;
        return out;
    }, py::arg("t"), py::arg("s"), py::arg("p"));
    m.def("evaluate_witness",
          [](const CVector &psi, const CVector &phi, const std::vector<CMatrix> &ops, const std::string &kind) {
              if (kind == "projective") {
                  return scenario_tuple(evaluate_witness(ProjectiveWitness{AmplitudeVector(psi), AmplitudeVector(phi), ops}));
              }
              if (kind == "generalized") {
                  return scenario_tuple(
                      evaluate_witness(GeneralizedWitness{AmplitudeVector(psi), AmplitudeVector(phi), ops, {}}));
              }
              throw std::invalid_argument("kind must be 'projective' or 'generalized'");
          },
          py::arg("psi"), py::arg("phi"), py::arg("operators"), py::arg("kind") = "projective",
          "Returns (T, S, P) after checking the witness invariants.");

    m.def("fuzz_projective",
          [](std::size_t d, std::size_t n, std::size_t samples, std::uint64_t seed, bool orthogonal) {
              FuzzOptions options;
              options.orthogonal = orthogonal;
              FuzzReport report;
              {
                  py::gil_scoped_release release;
                  report = fuzz_projective(d, n, samples, CounterRng(seed), options);
              }
              py::dict out;
              out["samples"] = report.samples;
              out["accepted"] = report.accepted;
              out["discarded"] = report.discarded;
              out["violations"] = report.violations.size();
              out["coverage_cells"] = report.coverage_grid.size();
              out["max_fair_deviation"] = report.max_fair_deviation;
              out["digest"] = report.digest();
              return out;
          },
          py::arg("d"), py::arg("n"), py::arg("samples"), py::arg("seed") = 0, py::arg("orthogonal") = false);
    m.def("oracle_max_s", [](double t, std::size_t n, std::size_t d, std::size_t trials, std::uint64_t seed) {
        CounterRng rng(seed);
        return oracle_max_s(t, n, d, trials, rng);
    }, py::arg("t"), py::arg("n"), py::arg("d"), py::arg("trials"), py::arg("seed") = 0);
    m.def("oracle_min_s", [](double t, std::size_t n, std::size_t d, std::size_t trials, std::uint64_t seed) {
        CounterRng rng(seed);
        return oracle_min_s(t, n, d, trials, rng);
    }, py::arg("t"), py::arg("n"), py::arg("d"), py::arg("trials"), py::arg("seed") = 0);

    m.def("emit_region",
          [](const std::string &which, std::size_t resolution, std::size_t n, double s) {
              if (which == "ternary") {
                  return region_dict(emit_ternary(resolution));
              }
              if (which == "ps") {
                  return region_dict(emit_ps_region(resolution));
              }
              if (which == "pt") {
                  return region_dict(emit_pt_sections(s, resolution));
              }
              if (which == "ts") {
                  return region_dict(emit_ts_region(n, resolution));
              }
              throw std::invalid_argument("which must be ternary, ps, pt or ts");
          },
          py::arg("which"), py::arg("resolution") = 200, py::arg("n") = 2, py::arg("s") = 0.5);
}
