// Copyright 2026 The covchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: channel inspection, additivity reports,
// parameter sweeps and majorization-conjecture testing.
//
// Exit codes: 0 success, 2 invalid flags, 3 a requested point is not
// completely positive, 4 majorization counterexample found.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "covchan/additivity.hpp"
#include "covchan/channel.hpp"
#include "covchan/covariance.hpp"

using nlohmann::json;
using namespace covchan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotCp = 3;
constexpr int kExitCounterexample = 4;

std::string g17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double display(double nats, LogBase base) {
    return base == LogBase::two ? nats / std::log(2.0) : nats;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return kExitUsage;
    }
    file << text;
    return kExitOk;
}

struct CommonFlags {
    int d = 3;
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::string out_path;
    std::string format = "csv";
    std::string log_base = "e";

    LogBase base() const { return log_base == "2" ? LogBase::two : LogBase::natural; }
};

Family parse_family(const std::string& name) {
    if (name == "dep")
        return Family::depolarising;
    if (name == "tdep")
        return Family::transpose_depolarising;
    return Family::trace;
}

std::vector<double> make_grid(std::optional<double> t, double from, double to, int steps) {
    if (t.has_value())
        return {*t};
    std::vector<double> grid;
    grid.reserve(steps);
    for (int k = 0; k < steps; ++k)
        grid.push_back(steps == 1 ? from : from + k * (to - from) / (steps - 1));
    return grid;
}

int cmd_info(const CommonFlags& flags, const std::string& family_name_str, double t) {
    const ChannelSpec spec{parse_family(family_name_str), flags.d, t};
    const ChoiMatrix c = choi(spec);
    const CpReport cp = is_cp(c, flags.tol);
    const CpReport ppt = is_ppt(c, flags.tol);
    const RepCase rep = spec.family == Family::transpose_depolarising ? RepCase::conjugate
                                                                      : RepCase::identical;
    const ChoiDecomposition dec = choi_projector_decomposition(c, rep);

    json doc;
    doc["family"] = family_name(spec.family);
    doc["d"] = spec.d;
    doc["t"] = spec.t;
    doc["cp"] = cp.holds;
    doc["cp_min_eig"] = cp.min_eigenvalue;
    doc["tp"] = is_tp(c, std::max(flags.tol, 1e-10));
    doc["ppt"] = ppt.holds;
    doc["ppt_min_eig"] = ppt.min_eigenvalue;
    doc["choi_coeffs"] = {dec.coefficients[0].real(), dec.coefficients[1].real()};
    doc["log_base"] = flags.log_base;
    if (cp.holds) {
        doc["s_min"] = display(s_min_single(spec).s_min, flags.base());
        doc["holevo_capacity"] = display(holevo_capacity_invariant(spec), flags.base());
    }
    const int rc = write_output(doc.dump(2) + "\n", flags.out_path);
    if (rc != kExitOk)
        return rc;
    if (!cp.holds) {
        std::cerr << "not completely positive: s_min and holevo_capacity suppressed\n";
        return kExitNotCp;
    }
    return kExitOk;
}

int cmd_additivity(const CommonFlags& flags, const std::vector<double>& grid, int n_starts,
                   double verdict_tol) {
    AdditivityOptions opts;
    opts.n_starts = n_starts;
    opts.tol = verdict_tol;
    bool any_not_cp = false;

    json rows = json::array();
    std::string csv = "d,t,s_min,s_min_product,gap,certificate,verdict,n_starts,seed\n";
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const double t = grid[idx];
        opts.seed = flags.seed + idx;
        json row;
        row["d"] = flags.d;
        row["t"] = t;
        row["seed"] = opts.seed;
        if (cp_range(Family::transpose_depolarising, flags.d).contains(t)) {
            const AdditivityReport rep = additivity_report(t, flags.d, opts);
            row["s_min"] = display(rep.s_min_single, flags.base());
            row["s_min_product"] = display(rep.s_min_product, flags.base());
            row["gap"] = display(rep.gap, flags.base());
            row["certificate"] = to_string(rep.certificate);
            row["verdict"] = to_string(rep.verdict);
            row["n_starts"] = rep.n_starts;
            row["best_lambda"] = std::vector<double>(
                rep.best_lambda.data(), rep.best_lambda.data() + rep.best_lambda.size());
            csv += std::to_string(flags.d) + "," + g17(t) + "," +
                   g17(display(rep.s_min_single, flags.base())) + "," +
                   g17(display(rep.s_min_product, flags.base())) + "," +
                   g17(display(rep.gap, flags.base())) + "," + to_string(rep.certificate) +
                   "," + to_string(rep.verdict) + "," + std::to_string(rep.n_starts) + "," +
                   std::to_string(opts.seed) + "\n";
        } else {
            any_not_cp = true;
            const double nan = std::numeric_limits<double>::quiet_NaN();
            row["s_min"] = nullptr;
            row["s_min_product"] = nullptr;
            row["gap"] = nullptr;
            row["certificate"] = "not-cp";
            row["verdict"] = "not-cp";
            row["n_starts"] = 0;
            csv += std::to_string(flags.d) + "," + g17(t) + "," + g17(nan) + "," + g17(nan) +
                   "," + g17(nan) + ",not-cp,not-cp,0," + std::to_string(opts.seed) + "\n";
        }
        rows.push_back(row);
    }

    std::string text;
    if (flags.format == "json") {
        json doc;
        doc["command"] = "additivity";
        doc["log_base"] = flags.log_base;
        doc["rows"] = rows;
        text = doc.dump(2) + "\n";
    } else {
        text = csv;
    }
    const int rc = write_output(text, flags.out_path);
    if (rc != kExitOk)
        return rc;
    if (any_not_cp) {
        std::cerr << "one or more grid points are outside the CP range\n";
        return kExitNotCp;
    }
    return kExitOk;
}

int cmd_mm(const CommonFlags& flags, double t, int n_pairs) {
    if (!cp_range(Family::transpose_depolarising, flags.d).contains(t)) {
        std::cerr << "t=" << t << " is outside the CP range for d=" << flags.d << "\n";
        return kExitNotCp;
    }
    const auto start = std::chrono::steady_clock::now();
    const MMVerdict verdict = mm_test(t, flags.d, n_pairs, flags.seed);
    const double runtime =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    json doc;
    doc["d"] = verdict.d;
    doc["t"] = verdict.t;
    doc["n_pairs"] = verdict.n_pairs;
    doc["seed"] = verdict.seed;
    doc["pass"] = verdict.pass;
    doc["n_counterexamples"] = verdict.counterexamples.size();
    doc["runtime_seconds"] = runtime;
    json list = json::array();
    for (const MMCounterexample& ce : verdict.counterexamples) {
        json item;
        item["lambda"] =
            std::vector<double>(ce.lambda.data(), ce.lambda.data() + ce.lambda.size());
        item["lambda_prime"] = std::vector<double>(
            ce.lambda_prime.data(), ce.lambda_prime.data() + ce.lambda_prime.size());
        item["prefix_index"] = ce.prefix_index;
        item["excess"] = ce.excess;
        list.push_back(item);
    }
    doc["counterexamples"] = list;
    const int rc = write_output(doc.dump(2) + "\n", flags.out_path);
    if (rc != kExitOk)
        return rc;
    return verdict.pass ? kExitOk : kExitCounterexample;
}

int cmd_sweep(const CommonFlags& flags, const std::vector<double>& grid, int n_lambda,
              int n_starts) {
    ScanOptions opts;
    opts.n_lambda = n_lambda;
    opts.n_starts = n_starts;
    opts.seed = flags.seed;
    const std::vector<ThresholdRow> rows = threshold_scan(flags.d, grid, opts);

    bool any_not_cp = false;
    std::string text;
    if (flags.format == "json") {
        json list = json::array();
        for (const ThresholdRow& row : rows) {
            json item;
            item["d"] = row.d;
            item["t"] = row.t;
            item["region"] = to_string(row.region);
            item["cp"] = row.cp;
            item["cp_min_eig"] = row.cp_min_eig;
            item["ppt_min_eig"] = row.ppt_min_eig;
            item["nsd_max_shifted"] = row.nsd_max_shifted;
            if (std::isnan(row.gap))
                item["gap"] = nullptr;
            else
                item["gap"] = display(row.gap, flags.base());
            item["seed"] = flags.seed;
            list.push_back(item);
            any_not_cp = any_not_cp || !row.cp;
        }
        json doc;
        doc["command"] = "sweep";
        doc["log_base"] = flags.log_base;
        doc["rows"] = list;
        text = doc.dump(2) + "\n";
    } else {
        text = "d,t,region,cp_min_eig,ppt_min_eig,nsd_max_shifted,gap,seed\n";
        for (const ThresholdRow& row : rows) {
            text += std::to_string(row.d) + "," + g17(row.t) + "," + to_string(row.region) +
                    "," + g17(row.cp_min_eig) + "," + g17(row.ppt_min_eig) + "," +
                    g17(row.nsd_max_shifted) + "," + g17(display(row.gap, flags.base())) +
                    "," + std::to_string(flags.seed) + "\n";
            any_not_cp = any_not_cp || !row.cp;
        }
    }
    const int rc = write_output(text, flags.out_path);
    if (rc != kExitOk)
        return rc;
    if (any_not_cp) {
        std::cerr << "one or more grid points are outside the CP range\n";
        return kExitNotCp;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"covariant-channel toolbox: Choi calculus and minimal "
                 "output entropy additivity experiments"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string family_str = "tdep";
    std::optional<double> t;
    double t_from = 0.0, t_to = 0.0;
    int steps = 1;
    int n_starts = 50;
    int n_pairs = 1000;
    int n_lambda = 200;
    double verdict_tol = 1e-7;
    bool have_range = false;

    const auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--d", flags.d, "Hilbert space dimension")->check(CLI::Range(2, 16));
        cmd->add_option("--seed", flags.seed, "RNG seed (echoed into output)");
        cmd->add_option("--out", flags.out_path, "write output to a file instead of stdout");
        cmd->add_option("--log-base", flags.log_base, "entropy unit: e (nats) or 2 (bits)")
            ->check(CLI::IsMember({"e", "2"}));
        if (with_format)
            cmd->add_option("--format", flags.format, "output format")
                ->check(CLI::IsMember({"csv", "json"}));
    };
    const auto add_grid = [&](CLI::App* cmd) {
        cmd->add_option("--t", t, "single channel parameter");
        CLI::Option* from = cmd->add_option("--t-from", t_from, "grid start");
        CLI::Option* to = cmd->add_option("--t-to", t_to, "grid end");
        CLI::Option* st =
            cmd->add_option("--steps", steps, "grid point count")->check(CLI::Range(1, 1000000));
        from->needs(to);
        to->needs(from);
        st->needs(from);
        cmd->callback([&, from]() { have_range = from->count() > 0; });
    };

    CLI::App* info = app.add_subcommand("info", "channel predicates, Choi coefficients, "
                                                "minimal output entropy, Holevo capacity");
    info->add_option("--family", family_str, "channel family")
        ->check(CLI::IsMember({"dep", "tdep", "trace"}))
        ->required();
    double info_t = 0.0;
    info->add_option("--t", info_t, "channel parameter");
    info->add_option("--tol", flags.tol, "predicate tolerance");
    add_common(info, false);

    CLI::App* additivity = app.add_subcommand(
        "additivity", "minimal output entropy of the product channel vs twice the single copy");
    add_grid(additivity);
    additivity->add_option("--starts", n_starts, "multistart count")->check(CLI::Range(1, 100000));
    additivity->add_option("--tol", verdict_tol, "additivity verdict tolerance (nats)");
    add_common(additivity, true);

    CLI::App* mm = app.add_subcommand("mm", "randomized majorization-conjecture test");
    mm->add_option("--t", info_t, "channel parameter")->required();
    mm->add_option("--pairs", n_pairs, "number of T-transform pairs")
        ->check(CLI::Range(0, 100000000));
    add_common(mm, false);

    CLI::App* sweep = app.add_subcommand("sweep", "per-t classification table over a grid");
    add_grid(sweep);
    sweep->add_option("--n-lambda", n_lambda, "simplex samples for the NSD worst case")
        ->check(CLI::Range(1, 1000000));
    sweep->add_option("--starts", n_starts, "multistart count")->check(CLI::Range(1, 100000));
    add_common(sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (info->parsed())
            return cmd_info(flags, family_str, info_t);
        if (mm->parsed())
            return cmd_mm(flags, info_t, n_pairs);

        if (!t.has_value() && !have_range) {
            std::cerr << "error: provide --t or --t-from/--t-to/--steps\n";
            return kExitUsage;
        }
        if (t.has_value() && have_range) {
            std::cerr << "error: --t conflicts with --t-from/--t-to\n";
            return kExitUsage;
        }
        if (have_range && t_from > t_to) {
            std::cerr << "error: --t-from must not exceed --t-to\n";
            return kExitUsage;
        }
        const std::vector<double> grid = make_grid(t, t_from, t_to, steps);
        if (additivity->parsed())
            return cmd_additivity(flags, grid, n_starts, verdict_tol);
        if (sweep->parsed())
            return cmd_sweep(flags, grid, n_lambda, n_starts);
    } catch (const not_cp_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotCp;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
