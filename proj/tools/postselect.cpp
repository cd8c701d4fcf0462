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

// Command-line front end: check | construct | verify | region | fuzz | entropy.
// Exit status: 0 success or feasible, 1 domain-negative result, 2 input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "postselect/construct.hpp"
#include "postselect/diversity.hpp"
#include "postselect/errors.hpp"
#include "postselect/feasibility.hpp"
#include "postselect/oracle.hpp"
#include "postselect/regions.hpp"
#include "postselect/witness_io.hpp"

namespace {

using namespace postselect;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

/// Command-line probabilities are renormalized when this close to summing to 1.
constexpr double kCliSumTolerance = 1e-9;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string list(std::span<const double> xs) {
    std::string out = "(";
    for (std::size_t k = 0; k < xs.size(); ++k) {
        out += (k ? "," : "") + num(xs[k]);
    }
    return out + ")";
}

double parse_double(const std::string &text) {
    if (text == "inf" || text == "infinity" || text == "Inf") {
        return std::numeric_limits<double>::infinity();
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw InputError("cannot parse number '" + text + "'");
    }
    if (used != text.size()) {
        throw InputError("cannot parse number '" + text + "'");
    }
    return v;
}

OutcomeDistribution parse_distribution(const std::string &text) {
    std::vector<double> probs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        probs.push_back(parse_double(item));
    }
    if (probs.empty()) {
        throw InputError("--p needs at least one probability");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < 0.0) {
            throw InputError("probability " + num(p) + " is negative or not finite");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kCliSumTolerance) {
        throw InputError("probabilities sum to " + num(sum) + ", not 1");
    }
    for (double &p : probs) {
        p /= sum;
    }
    return OutcomeDistribution(std::move(probs));
}

struct ScenarioArgs {
    double t = -1.0;
    double s = -1.0;
    std::string p;

    void attach(CLI::App *cmd) {
        cmd->add_option("--t", t, "transition probability T in [0,1]")->required();
        cmd->add_option("--s", s, "success probability S in (0,1]")->required();
        cmd->add_option("--p", p, "outcome distribution, comma separated")->required();
    }

    [[nodiscard]] ScenarioTriple scenario() const {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw InputError("--t must lie in [0, 1]");
        }
        if (!(s > 0.0 && s <= 1.0)) {
            throw InputError("--s must lie in (0, 1]");
        }
        return ScenarioTriple(t, s, parse_distribution(p));
    }
};

void print_profile(const OutcomeDistribution &dist) {
    const DiversityProfile prof = diversity_profile(dist);
    std::cout << "D_1/2: " << num(prof.d_half) << "\n"
              << "D_inf: " << num(prof.d_inf) << "\n"
              << "H_1/2: " << num(prof.h_half) << "\n"
              << "H_inf: " << num(prof.h_inf) << "\n";
}

void print_scenario(const ScenarioTriple &sc) {
    std::cout << "T: " << num(sc.t()) << "\n"
              << "S: " << num(sc.s()) << "\n"
              << "P: " << list(sc.dist().probs()) << "\n";
}

int cmd_check(const ScenarioArgs &args, bool generalized) {
    const ScenarioTriple sc = args.scenario();
    const FeasibilityVerdict v = generalized ? check_generalized(sc) : check_projective_raw(sc);
    print_scenario(sc);
    std::cout << "measurement: " << (generalized ? "generalized" : "projective") << "\n"
              << "verdict: " << (v.feasible ? "feasible" : "infeasible") << "\n";
    for (const auto &[tag, slack] : v.slack) {
        const bool bad = std::find(v.violated.begin(), v.violated.end(), tag) != v.violated.end();
        std::cout << "constraint " << to_string(tag) << ": slack " << num(slack)
                  << (bad ? " VIOLATED" : " ok") << "\n";
    }
    print_profile(sc.dist());
    return v.feasible ? kOk : kNegative;
}

int cmd_construct(const ScenarioArgs &args, const std::string &kind, const std::string &out_path) {
    const ScenarioTriple sc = args.scenario();
    std::optional<WitnessFile> built;
    if (kind == "projective") {
        try {
            built = WitnessFile{construct_projective(sc)};
        } catch (const InfeasibleScenario &e) {
            std::cerr << "InfeasibleScenario: " << e.what() << "\n";
            return kNegative;
        }
    } else {
        built = WitnessFile{construct_generalized(sc)};
    }
    WitnessFile &file = *built;
    file.metadata["provenance"] = "construct";
    set_target(file, sc);
    const std::string text = to_json(file).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw InputError("cannot write " + out_path);
        }
        out << text;
    }
    return kOk;
}

int cmd_verify(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    std::optional<WitnessFile> loaded;
    try {
        loaded = witness_from_json(doc);
    } catch (const InvalidWitness &e) {
        throw InputError(std::string("InvalidWitness: ") + e.what());
    }
    const WitnessFile &file = *loaded;
    std::cout << "kind: " << doc.at("kind").get<std::string>() << "\n"
              << "invariants: ok\n";

    std::optional<ScenarioTriple> computed;
    try {
        computed = evaluate(file);
    } catch (const DegeneratePostselection &e) {
        std::cout << "DegeneratePostselection: " << e.what() << "\n";
        return kNegative;
    }
    print_scenario(*computed);
    if (const auto target = target_of(file)) {
        const double dev = max_deviation(*computed, *target);
        std::cout << "target deviation: " << num(dev) << "\n";
        if (!(dev <= 1e-9)) {
            std::cout << "verdict: mismatch\n";
            return kNegative;
        }
        std::cout << "verdict: match\n";
    }
    return kOk;
}

struct RegionArgs {
    std::string which;
    std::size_t resolution = 200;
    std::size_t n = 2;
    double s = -1.0;
    std::string out;
    std::string curves;
    std::string svg;
};

void write_to(const std::string &path, const auto &writer) {
    if (path.empty() || path == "-") {
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    writer(out);
}

int cmd_region(const RegionArgs &args) {
    if (args.resolution < 2) {
        throw InputError("--resolution must be >= 2");
    }
    RegionGrid grid;
    if (args.which == "ternary") {
        grid = emit_ternary(args.resolution);
    } else if (args.which == "ps") {
        grid = emit_ps_region(args.resolution);
    } else if (args.which == "pt") {
        if (!(args.s > 0.0 && args.s <= 1.0)) {
            throw InputError("--which pt needs --s in (0, 1]");
        }
        grid = emit_pt_sections(args.s, args.resolution);
    } else if (args.which == "ts") {
        if (args.n < 1) {
            throw InputError("--n must be >= 1");
        }
        grid = emit_ts_region(args.n, args.resolution);
    } else {
        throw InputError("--which must be ternary, ps, pt or ts");
    }
    write_to(args.out, [&](std::ostream &os) { write_csv(grid, os); });
    if (!args.curves.empty()) {
        write_to(args.curves, [&](std::ostream &os) { write_curves_csv(grid, os); });
    }
    if (!args.svg.empty()) {
        write_to(args.svg, [&](std::ostream &os) { write_svg(grid, os); });
    }
    std::cerr << "region " << grid.name << ": " << grid.cells.size() << " cells, feasible area fraction "
              << num(grid.feasible_area_fraction()) << "\n";
    return kOk;
}

struct FuzzArgs {
    std::size_t dim = 2;
    std::size_t outcomes = 2;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    bool orthogonal = false;
    double tolerance = 1e-9;
};

int cmd_fuzz(const FuzzArgs &args) {
    if (args.outcomes < 1 || args.outcomes > args.dim) {
        throw InputError("--outcomes must lie in [1, --dim]");
    }
    if (args.samples < 1) {
        throw InputError("--samples must be >= 1");
    }
    FuzzOptions options;
    options.orthogonal = args.orthogonal;
    options.tolerance = args.tolerance;
    const FuzzReport report = fuzz_projective(args.dim, args.outcomes, args.samples, CounterRng(args.seed), options);

    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(report.digest()));
    std::cout << "samples: " << report.samples << "\n"
              << "accepted: " << report.accepted << "\n"
              << "discarded: " << report.discarded << "\n"
              << "violations: " << report.violations.size() << "\n"
              << "coverage cells: " << report.coverage_grid.size() << "\n";
    if (!report.ternary_grid.empty()) {
        std::cout << "ternary cells: " << report.ternary_grid.size() << "\n";
    }
    if (args.outcomes == 2) {
        std::cout << "max |P(1) - 1/2|: " << num(report.max_fair_deviation) << "\n";
    }
    std::cout << "digest: " << digest << "\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(report.violations.size(), 10); ++k) {
        const FuzzViolation &v = report.violations[k];
        std::cout << "violation T=" << num(v.scenario.t()) << " S=" << num(v.scenario.s())
                  << " P=" << list(v.scenario.dist().probs()) << " tags=";
        for (std::size_t j = 0; j < v.violated.size(); ++j) {
            std::cout << (j ? ";" : "") << to_string(v.violated[j]);
        }
        std::cout << "\n";
    }
    return report.violations.empty() ? kOk : kNegative;
}

int cmd_entropy(const std::string &p, const std::vector<std::string> &orders) {
    const OutcomeDistribution dist = parse_distribution(p);
    std::vector<double> qs;
    if (orders.empty()) {
        qs = {0.0, 0.5, 1.0, 2.0, std::numeric_limits<double>::infinity()};
    } else {
        for (const std::string &q : orders) {
            qs.push_back(parse_double(q));
            if (std::isnan(qs.back()) || qs.back() < 0.0) {
                throw InputError("--q must be >= 0 or inf");
            }
        }
    }
    std::cout << "P: " << list(dist.probs()) << "\n";
    std::cout << "q,D_q,H_q\n";
    for (double q : qs) {
        const double d = diversity(dist, q);
        std::cout << (std::isinf(q) ? std::string("inf") : num(q)) << ',' << num(d) << ','
                  << num(std::log(d)) << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Feasibility of postselected measurement statistics (T, S, P)"};
    app.require_subcommand(1);

    ScenarioArgs check_args;
    bool generalized = false;
    CLI::App *check = app.add_subcommand("check", "decide whether (T, S, P) is realizable");
    check_args.attach(check);
    check->add_flag("--generalized", generalized, "allow generalized (Kraus) measurements");

    ScenarioArgs construct_args;
    std::string kind = "projective";
    std::string construct_out;
    CLI::App *construct = app.add_subcommand("construct", "build a witness for (T, S, P)");
    construct_args.attach(construct);
    construct->add_option("--kind", kind, "projective or generalized")
        ->check(CLI::IsMember({"projective", "generalized"}));
    construct->add_option("--out", construct_out, "write the witness file here instead of stdout");

    std::string verify_path;
    CLI::App *verify = app.add_subcommand("verify", "evaluate a witness file");
    verify->add_option("path", verify_path, "witness JSON file")->required();

    RegionArgs region_args;
    CLI::App *region = app.add_subcommand("region", "emit a feasibility region grid as CSV");
    region->add_option("--which", region_args.which, "ternary, ps, pt or ts")->required();
    region->add_option("--resolution", region_args.resolution, "cells per axis");
    region->add_option("--n", region_args.n, "number of outcomes (ts)");
    region->add_option("--s", region_args.s, "success probability (pt)");
    region->add_option("--out", region_args.out, "CSV path (default stdout)");
    region->add_option("--curves", region_args.curves, "boundary polylines CSV path");
    region->add_option("--svg", region_args.svg, "SVG path");

    FuzzArgs fuzz_args;
    CLI::App *fuzz = app.add_subcommand("fuzz", "confront random projective witnesses with the checker");
    fuzz->add_option("--dim", fuzz_args.dim, "Hilbert space dimension");
    fuzz->add_option("--outcomes", fuzz_args.outcomes, "number of outcomes");
    fuzz->add_option("--samples", fuzz_args.samples, "number of random witnesses");
    fuzz->add_option("--seed", fuzz_args.seed, "RNG seed");
    fuzz->add_flag("--orthogonal", fuzz_args.orthogonal, "postselect on a state orthogonal to psi");
    fuzz->add_option("--tolerance", fuzz_args.tolerance, "checker slack against rounding");

    std::string entropy_p;
    std::vector<std::string> entropy_q;
    CLI::App *entropy = app.add_subcommand("entropy", "diversity indices and Renyi entropies");
    entropy->add_option("--p", entropy_p, "distribution, comma separated")->required();
    entropy->add_option("--q", entropy_q, "orders (repeatable; 'inf' allowed)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*check) {
            return cmd_check(check_args, generalized);
        }
        if (*construct) {
            return cmd_construct(construct_args, kind, construct_out);
        }
        if (*verify) {
            return cmd_verify(verify_path);
        }
        if (*region) {
            return cmd_region(region_args);
        }
        if (*fuzz) {
            return cmd_fuzz(fuzz_args);
        }
        if (*entropy) {
            return cmd_entropy(entropy_p, entropy_q);
        }
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
