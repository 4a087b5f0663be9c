// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DTC_LAB_HPP
#define DTC_LAB_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dtc/correlations.hpp"

namespace dtc {

enum class Ensemble { Pure, FullRank, RankR };

Ensemble parse_ensemble(const std::string& name);  // "pure" | "full-rank" | "rank-r"
std::string ensemble_name(Ensemble e);

struct SweepConfig {
    std::vector<int> local_dims = {2, 2, 2};
    Ensemble ensemble = Ensemble::FullRank;
    int rank = 0;  // only for RankR
    int samples = 100;
    std::uint64_t seed = 7;
    double base = 2.0;
    std::size_t dim_cap = kDefaultDimCap;
    SupportThresholds thresholds;
    double gap_threshold = 1e-3;
};

struct ReportRecord {
    int sample = 0;
    std::uint64_t seed = 0;
    GapReport report;
};

struct SweepSummary {
    int samples = 0;
    int flagged_unequal = 0;  // |jtilde - I| > gap_threshold among finite samples
    int inconclusive = 0;     // finite but below the threshold
    int j_support_violations = 0;
    int jtilde_support_violations = 0;
    double min_gap = 0.0, max_gap = 0.0, mean_gap = 0.0;  // |jtilde - I|, finite only
};

struct SweepResult {
    SweepConfig config;
    std::vector<ReportRecord> records;
    SweepSummary summary;
};

// Deterministic per-sample seed stream derived from the master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

ReportRecord demo(const std::string& name, double base = 2.0);
SweepResult sweep(const SweepConfig& cfg);

nlohmann::json record_to_json(const ReportRecord& rec, bool include_timings = true);
nlohmann::json summary_to_json(const SweepResult& result);

// JSON-lines: one record per line, summary object last.
void write_sweep_jsonl(std::ostream& out, const SweepResult& result,
                       bool include_timings = true);

void print_report(std::ostream& out, const ReportRecord& rec);

}  // namespace dtc

#endif
