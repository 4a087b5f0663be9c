// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtc/lab.hpp"
#include "dtc/state_io.hpp"

namespace {

double parse_base(const std::string& b) {
    if (b == "2") return 2.0;
    if (b == "e") return std::exp(1.0);
    throw dtc::ValidationError("--base must be 2 or e");
}

int run(int argc, char** argv) {
    CLI::App app{"dual total correlation lab: I_n vs its relative-entropy forms"};
    app.require_subcommand(1);

    std::string base_str = "2";
    app.add_option("--base", base_str, "log base: 2 (bits) or e (nats)")
        ->capture_default_str();

    // demo
    auto* cmd_demo = app.add_subcommand("demo", "run a named demonstration");
    std::string demo_name;
    std::string demo_out;
    cmd_demo->add_option("name", demo_name, "ghz | product | bell | mixed")->required();
    cmd_demo->add_option("--out", demo_out, "write the report record as JSON");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Monte Carlo gap survey");
    dtc::SweepConfig cfg;
    std::string ensemble_str = "full-rank";
    std::string sweep_out;
    std::uint64_t cap = dtc::kDefaultDimCap;
    double tol_support = dtc::kDefaultSupportThreshold;
    double tol_contain = dtc::kDefaultContainTol;
    cmd_sweep->add_option("--dims", cfg.local_dims, "local dimensions, e.g. 2 2 2")
        ->delimiter(',');
    cmd_sweep->add_option("--ensemble", ensemble_str, "pure | full-rank | rank-r")
        ->capture_default_str();
    cmd_sweep->add_option("--rank", cfg.rank, "rank for the rank-r ensemble");
    cmd_sweep->add_option("--samples", cfg.samples, "number of samples")
        ->capture_default_str();
    cmd_sweep->add_option("--seed", cfg.seed, "master seed")->capture_default_str();
    cmd_sweep->add_option("--cap", cap, "dimension cap for materialized operators")
        ->capture_default_str();
    cmd_sweep->add_option("--tol-support", tol_support,
                          "relative eigenvalue threshold for support membership")
        ->capture_default_str();
    cmd_sweep->add_option("--tol-contain", tol_contain,
                          "tolerance on the support containment mismatch norm")
        ->capture_default_str();
    cmd_sweep->add_option("--gap-threshold", cfg.gap_threshold,
                          "|Jtilde - I| above this counts as unequal")
        ->capture_default_str();
    cmd_sweep->add_option("--out", sweep_out, "write JSON-lines report here");

    // compute
    auto* cmd_compute = app.add_subcommand("compute", "evaluate a quantity on a state file");
    std::string file, quantity, compute_out;
    std::uint64_t compute_cap = dtc::kDefaultDimCap;
    cmd_compute->add_option("file", file, "state JSON file")->required();
    cmd_compute
        ->add_option("quantity", quantity,
                     "I | T | eq3 | eq4 | J | Jtilde | cross:i,j | report")
        ->required();
    cmd_compute->add_option("--cap", compute_cap, "dimension cap")->capture_default_str();
    cmd_compute->add_option("--out", compute_out, "write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    const double base = parse_base(base_str);

    if (*cmd_demo) {
        const dtc::ReportRecord rec = dtc::demo(demo_name, base);
        dtc::print_report(std::cout, rec);
        if (!demo_out.empty()) {
            std::ofstream out(demo_out);
            out << dtc::record_to_json(rec).dump(2) << '\n';
        }
        return 0;
    }

    if (*cmd_sweep) {
        cfg.base = base;
        cfg.ensemble = dtc::parse_ensemble(ensemble_str);
        cfg.dim_cap = cap;
        cfg.thresholds.membership = tol_support;
        cfg.thresholds.containment = tol_contain;
        const dtc::SweepResult result = dtc::sweep(cfg);
        if (!sweep_out.empty()) {
            std::ofstream out(sweep_out);
            if (!out) throw dtc::Error("cannot open " + sweep_out);
            dtc::write_sweep_jsonl(out, result);
        } else {
            dtc::write_sweep_jsonl(std::cout, result);
        }
        std::cerr << "flagged unequal: " << result.summary.flagged_unequal << "/"
                  << result.summary.samples << "\n";
        return 0;
    }

    // compute
    const dtc::MultipartiteState s = dtc::read_state_file(file);

    const char* unit = base == 2.0 ? "bits" : "nats";
    const auto print_value = [&](const dtc::ExtendedReal& v) {
        if (v.is_finite()) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.9f", v.value());
            std::cout << buf << " " << unit << "\n";
        } else {
            std::cout << "inf (support violation)\n";
        }
    };

    if (quantity == "I") {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.9f", dtc::dual_total_correlation(s, base).value);
        std::cout << buf << " " << unit << "\n";
    } else if (quantity == "T") {
        print_value(dtc::total_correlation(s, base));
    } else if (quantity == "eq3") {
        print_value(dtc::dtc_relent_sum(s, base));
    } else if (quantity == "eq4") {
        print_value(dtc::dtc_relent_tensor(s, base, compute_cap));
    } else if (quantity == "J") {
        print_value(dtc::j_n(s, base, compute_cap));
    } else if (quantity == "Jtilde") {
        print_value(dtc::jtilde_n(s, base, compute_cap));
    } else if (quantity.rfind("cross:", 0) == 0) {
        const std::string pair_arg = quantity.substr(6);
        const auto comma = pair_arg.find(',');
        if (comma == std::string::npos)
            throw dtc::ValidationError("cross takes two parties, e.g. cross:3,1");
        const int i = std::stoi(pair_arg.substr(0, comma));
        const int j = std::stoi(pair_arg.substr(comma + 1));
        print_value(dtc::cross_term(s, {i, j}, base));
    } else if (quantity == "report") {
        dtc::GapReportOptions opts;
        opts.base = base;
        opts.dim_cap = compute_cap;
        opts.find_witness = true;
        dtc::ReportRecord rec;
        rec.report = dtc::gap_report(s, opts);
        dtc::print_report(std::cout, rec);
    } else {
        throw dtc::ValidationError("unknown quantity '" + quantity + "'");
    }

    if (!compute_out.empty()) {
        dtc::GapReportOptions opts;
        opts.base = base;
        opts.dim_cap = compute_cap;
        opts.find_witness = true;
        dtc::ReportRecord rec;
        rec.report = dtc::gap_report(s, opts);
        std::ofstream out(compute_out);
        if (!out) throw dtc::Error("cannot open " + compute_out);
        out << dtc::record_to_json(rec).dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dtc::DimensionCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dtc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
