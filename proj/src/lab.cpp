// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "dtc/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace dtc {

using nlohmann::json;

Ensemble parse_ensemble(const std::string& name) {
    if (name == "pure") return Ensemble::Pure;
    if (name == "full-rank") return Ensemble::FullRank;
    if (name == "rank-r") return Ensemble::RankR;
    throw ValidationError("unknown ensemble '" + name + "'");
}

std::string ensemble_name(Ensemble e) {
    switch (e) {
        case Ensemble::Pure: return "pure";
        case Ensemble::FullRank: return "full-rank";
        case Ensemble::RankR: return "rank-r";
    }
    return "?";
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 step on master + index
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

json quantity_to_json(const QuantityResult& q, bool include_timings) {
    json out;
    if (!q.error.empty()) {
        out["error"] = q.error;
    } else if (q.value) {
        out["infinite"] = !q.value->is_finite();
        if (q.value->is_finite())
            out["value"] = q.value->value();
        else
            out["value"] = "inf";
    }
    if (q.borderline_support) {
        out["borderline_support"] = true;
        out["support_mismatch"] = q.support_mismatch;
    }
    if (!q.violation_witness.empty()) out["violation_witness"] = q.violation_witness;
    if (include_timings) out["seconds"] = q.seconds;
    return out;
}

json gap_to_json(const GapValue& g) {
    switch (g.kind) {
        case GapValue::Kind::Finite: return json(g.value);
        case GapValue::Kind::Infinite: return json("inf");
        case GapValue::Kind::Undefined: return json("undefined");
    }
    return json("undefined");
}

std::string quantity_to_string(const QuantityResult& q) {
    if (!q.error.empty()) return "error: " + q.error;
    if (!q.value) return "n/a";
    if (!q.value->is_finite()) {
        std::string s = "inf (support violation";
        if (!q.violation_witness.empty()) s += ", e.g. " + q.violation_witness;
        return s + ")";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9f", q.value->value());
    return buf;
}

}  // namespace

json record_to_json(const ReportRecord& rec, bool include_timings) {
    const GapReport& r = rec.report;
    json out;
    out["sample"] = rec.sample;
    out["seed"] = rec.seed;
    out["n_parties"] = r.n_parties;
    out["base"] = r.base;
    out["I"] = r.i_n;
    out["T"] = quantity_to_json(r.t_n, include_timings);
    out["eq3"] = quantity_to_json(r.eq_sum, include_timings);
    out["eq4"] = quantity_to_json(r.eq_tensor, include_timings);
    out["J"] = quantity_to_json(r.j, include_timings);
    out["Jtilde"] = quantity_to_json(r.jtilde, include_timings);
    out["gaps"] = {{"J_minus_I", gap_to_json(r.gap_j_minus_i)},
                   {"Jtilde_minus_I", gap_to_json(r.gap_jtilde_minus_i)},
                   {"eq3_minus_I", gap_to_json(r.gap_eq_sum_minus_i)},
                   {"eq4_minus_I", gap_to_json(r.gap_eq_tensor_minus_i)}};
    return out;
}

ReportRecord demo(const std::string& name, double base) {
    GapReportOptions opts;
    opts.base = base;
    opts.find_witness = true;

    ReportRecord rec;
    if (name == "ghz") {
        rec.report = gap_report(ghz(3), opts);
    } else if (name == "product") {
        // i.i.d. product: every regrouping of the marginals reproduces the
        // state itself, so all six quantities vanish.
        const MultipartiteState q = random_mixed({2}, 2, 11);
        rec.report = gap_report(product_state({q, q, q}), opts);
    } else if (name == "bell") {
        rec.report = gap_report(ghz(2), opts);
    } else if (name == "mixed") {
        rec.report = gap_report(maximally_mixed({2, 2, 2}), opts);
    } else {
        throw UnknownDemo("unknown demo '" + name + "'");
    }
    return rec;
}

SweepResult sweep(const SweepConfig& cfg) {
    if (cfg.samples < 1) throw ValidationError("sweep: samples must be >= 1");
    if (cfg.local_dims.empty()) throw ValidationError("sweep: dims must be nonempty");
    long long dim = 1;
    for (int d : cfg.local_dims) {
        if (d < 1) throw ValidationError("sweep: dims must be positive");
        dim *= d;
    }
    if (static_cast<std::size_t>(dim) > cfg.dim_cap)
        throw DimensionCapExceeded("sweep: state dimension exceeds cap");
    if (cfg.ensemble == Ensemble::RankR && (cfg.rank < 1 || cfg.rank > dim))
        throw ValidationError("sweep: rank-r ensemble needs rank in 1..dim");

    SweepResult result;
    result.config = cfg;

    GapReportOptions opts;
    opts.base = cfg.base;
    opts.dim_cap = cfg.dim_cap;
    opts.thresholds = cfg.thresholds;

    double gap_min = std::numeric_limits<double>::infinity();
    double gap_max = -std::numeric_limits<double>::infinity();
    double gap_sum = 0.0;
    int finite_gaps = 0;

    for (int i = 0; i < cfg.samples; ++i) {
        const std::uint64_t seed = derive_seed(cfg.seed, i);
        MultipartiteState s = [&] {
            switch (cfg.ensemble) {
                case Ensemble::Pure: return random_pure(cfg.local_dims, seed);
                case Ensemble::RankR: return random_mixed(cfg.local_dims, cfg.rank, seed);
                case Ensemble::FullRank:
                default: return random_mixed(cfg.local_dims, static_cast<int>(dim), seed);
            }
        }();

        ReportRecord rec;
        rec.sample = i;
        rec.seed = seed;
        rec.report = gap_report(s, opts);

        const GapReport& r = rec.report;
        if (r.j.value && !r.j.value->is_finite()) ++result.summary.j_support_violations;
        if (r.jtilde.value && !r.jtilde.value->is_finite())
            ++result.summary.jtilde_support_violations;
        if (r.gap_jtilde_minus_i.kind == GapValue::Kind::Finite) {
            const double g = std::abs(r.gap_jtilde_minus_i.value);
            if (g > cfg.gap_threshold)
                ++result.summary.flagged_unequal;
            else
                ++result.summary.inconclusive;
            gap_min = std::min(gap_min, g);
            gap_max = std::max(gap_max, g);
            gap_sum += g;
            ++finite_gaps;
        }
        result.records.push_back(std::move(rec));
    }

    result.summary.samples = cfg.samples;
    if (finite_gaps > 0) {
        result.summary.min_gap = gap_min;
        result.summary.max_gap = gap_max;
        result.summary.mean_gap = gap_sum / finite_gaps;
    }
    return result;
}

json summary_to_json(const SweepResult& result) {
    const SweepSummary& s = result.summary;
    json out;
    out["summary"] = true;
    out["config"] = {{"dims", result.config.local_dims},
                     {"ensemble", ensemble_name(result.config.ensemble)},
                     {"rank", result.config.rank},
                     {"samples", result.config.samples},
                     {"seed", result.config.seed},
                     {"base", result.config.base},
                     {"cap", result.config.dim_cap},
                     {"gap_threshold", result.config.gap_threshold}};
    out["samples"] = s.samples;
    out["flagged_unequal"] = s.flagged_unequal;
    out["inconclusive"] = s.inconclusive;
    out["fraction_unequal"] = s.samples > 0 ? double(s.flagged_unequal) / s.samples : 0.0;
    out["j_support_violations"] = s.j_support_violations;
    out["jtilde_support_violations"] = s.jtilde_support_violations;
    out["min_gap"] = s.min_gap;
    out["max_gap"] = s.max_gap;
    out["mean_gap"] = s.mean_gap;
    return out;
}

void write_sweep_jsonl(std::ostream& out, const SweepResult& result,
                       bool include_timings) {
    for (const ReportRecord& rec : result.records)
        out << record_to_json(rec, include_timings).dump() << '\n';
    out << summary_to_json(result).dump() << '\n';
}

void print_report(std::ostream& out, const ReportRecord& rec) {
    const GapReport& r = rec.report;
    const char* unit = r.base == 2.0 ? "bits" : "nats";
    out << "n = " << r.n_parties << ", log base " << r.base << "\n";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9f", r.i_n);
    out << "  I_n  (dual total correlation) = " << buf << " " << unit << "\n";
    out << "  T_n  (total correlation)      = " << quantity_to_string(r.t_n) << "\n";
    out << "  eq3  (relent sum form)        = " << quantity_to_string(r.eq_sum) << "\n";
    out << "  eq4  (relent tensor form)     = " << quantity_to_string(r.eq_tensor) << "\n";
    out << "  J_n  (disputed form)          = " << quantity_to_string(r.j) << "\n";
    out << "  J~_n (reordered form)         = " << quantity_to_string(r.jtilde) << "\n";
    out << "  gaps: " << json({{"J_minus_I", gap_to_json(r.gap_j_minus_i)},
                               {"Jtilde_minus_I", gap_to_json(r.gap_jtilde_minus_i)}})
                             .dump()
        << "\n";
}

}  // namespace dtc
