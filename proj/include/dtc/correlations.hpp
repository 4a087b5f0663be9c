// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DTC_CORRELATIONS_HPP
#define DTC_CORRELATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dtc/entropy.hpp"
#include "dtc/state.hpp"

namespace dtc {

// Dual total correlation: sum_k S(rho_{kbar}) - (n-1) S(rho), with kbar the
// cyclic complement of party k.
struct DtcBreakdown {
    std::vector<std::pair<std::vector<int>, double>> marginal_entropies;
    double global_entropy;
    double value;
};

DtcBreakdown dual_total_correlation(const MultipartiteState& s, double base = 2.0);

// Total correlation S(rho || tensor_k rho_k) = sum_k S(rho_k) - S(rho).
ExtendedReal total_correlation(const MultipartiteState& s, double base = 2.0,
                               const SupportThresholds& th = {});

// Sum-form decomposition: sum_k S(rho_{k kbar} || rho_k (x) rho_kbar) minus
// the total correlation. Each term's first argument is permuted so party k
// leads, matching the second argument position by position.
ExtendedReal dtc_relent_sum(const MultipartiteState& s, double base = 2.0,
                            const SupportThresholds& th = {});

// Tensor-form decomposition: one big relative entropy between the n-fold
// product of cyclically rotated copies and tensor_k (rho_k (x) rho_kbar),
// minus the total correlation. Materializes D^n-dimensional operators.
ExtendedReal dtc_relent_tensor(const MultipartiteState& s, double base = 2.0,
                               std::size_t dim_cap = kDefaultDimCap,
                               const SupportThresholds& th = {});

// The disputed form: S(rho^{(n-1)} || tensor_{k=1..n} rho_kbar) taken
// literally, positionally, with no subsystem re-matching.
ExtendedReal j_n(const MultipartiteState& s, double base = 2.0,
                 std::size_t dim_cap = kDefaultDimCap,
                 const SupportThresholds& th = {});

// The repaired ordering: second argument built with k descending from n to
// 1 so positions line up copy by copy. Still differs from the dual total
// correlation for n >= 3.
ExtendedReal jtilde_n(const MultipartiteState& s, double base = 2.0,
                      std::size_t dim_cap = kDefaultDimCap,
                      const SupportThresholds& th = {});

// -tr(rho_i (x) rho_j log rho_ij); the term that blocks the term-by-term
// reduction of jtilde to entropies.
ExtendedReal cross_term(const MultipartiteState& s, std::pair<int, int> pair,
                        double base = 2.0, const SupportThresholds& th = {});

struct Jtilde3Terms {
    double s12;
    ExtendedReal cross_31 = ExtendedReal::finite(0.0);
    double s23;
    double minus_2s;
    ExtendedReal total = ExtendedReal::finite(0.0);
};

// Exact term expansion of jtilde_n at n = 3; total always equals jtilde_n.
Jtilde3Terms jtilde3_decomposition(const MultipartiteState& s, double base = 2.0,
                                   const SupportThresholds& th = {});

struct GapValue {
    enum class Kind { Finite, Infinite, Undefined } kind = Kind::Undefined;
    double value = 0.0;
};

struct QuantityResult {
    std::optional<ExtendedReal> value;
    std::string error;               // set when the quantity could not be computed
    bool borderline_support = false;
    double support_mismatch = 0.0;
    std::string violation_witness;   // basis direction breaking containment, if any
    double seconds = 0.0;
};

struct GapReport {
    int n_parties = 0;
    double base = 2.0;
    double i_n = 0.0;        // dual total correlation (always computable)
    DtcBreakdown i_breakdown;
    QuantityResult t_n, eq_sum, eq_tensor, j, jtilde;
    GapValue gap_j_minus_i, gap_jtilde_minus_i, gap_eq_sum_minus_i, gap_eq_tensor_minus_i;
};

struct GapReportOptions {
    double base = 2.0;
    std::size_t dim_cap = kDefaultDimCap;
    SupportThresholds thresholds;
    bool find_witness = false;  // locate a violating basis direction on support failure
};

GapReport gap_report(const MultipartiteState& s, const GapReportOptions& opts = {});

}  // namespace dtc

#endif
