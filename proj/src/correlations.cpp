// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "dtc/correlations.hpp"

#include <chrono>
#include <cmath>
#include <functional>

namespace dtc {

namespace {

// Cyclic party order starting at k: (k, k+1, ..., n, 1, ..., k-1).
std::vector<int> cyclic_order(int k, int n) {
    std::vector<int> out{k};
    const std::vector<int> rest = cyclic_complement(k, n);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

void check_cap(double total_dim, std::size_t cap, const char* what) {
    if (total_dim > static_cast<double>(cap))
        throw DimensionCapExceeded(std::string(what) + ": materialized dimension " +
                                   std::to_string(static_cast<long long>(total_dim)) +
                                   " exceeds cap " + std::to_string(cap));
}

MultipartiteState jn_second_argument(const MultipartiteState& s, bool descending) {
    const int n = s.num_parties();
    std::vector<MultipartiteState> factors;
    factors.reserve(n);
    for (int i = 0; i < n; ++i) {
        const int k = descending ? n - i : i + 1;
        factors.push_back(marginal(s, cyclic_complement(k, n)));
    }
    return product_state(factors);
}

}  // namespace

DtcBreakdown dual_total_correlation(const MultipartiteState& s, double base) {
    const int n = s.num_parties();
    if (n < 2) throw WrongArity("dual_total_correlation: need n >= 2");

    DtcBreakdown out;
    out.global_entropy = von_neumann_entropy(s, base);
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        const std::vector<int> kbar = cyclic_complement(k, n);
        const double ent = von_neumann_entropy(marginal(s, kbar), base);
        out.marginal_entropies.emplace_back(kbar, ent);
        sum += ent;
    }
    out.value = sum - (n - 1) * out.global_entropy;
    return out;
}

ExtendedReal total_correlation(const MultipartiteState& s, double base,
                               const SupportThresholds& th) {
    const int n = s.num_parties();
    if (n < 2) throw WrongArity("total_correlation: need n >= 2");
    std::vector<MultipartiteState> singles;
    singles.reserve(n);
    for (int k = 1; k <= n; ++k) singles.push_back(marginal(s, {k}));
    return relative_entropy(s, product_state(singles), base, th);
}

ExtendedReal dtc_relent_sum(const MultipartiteState& s, double base,
                            const SupportThresholds& th) {
    const int n = s.num_parties();
    if (n < 2) throw WrongArity("dtc_relent_sum: need n >= 2");

    ExtendedReal sum = ExtendedReal::finite(0.0);
    for (int k = 1; k <= n; ++k) {
        const std::vector<int> kbar = cyclic_complement(k, n);
        const MultipartiteState matched = permute(s, cyclic_order(k, n));
        const MultipartiteState sigma = tensor(marginal(s, {k}), marginal(s, kbar));
        sum = sum + relative_entropy(matched, sigma, base, th);
    }
    return sum - total_correlation(s, base, th);
}

ExtendedReal dtc_relent_tensor(const MultipartiteState& s, double base,
                               std::size_t dim_cap, const SupportThresholds& th) {
    const int n = s.num_parties();
    if (n < 2) throw WrongArity("dtc_relent_tensor: need n >= 2");
    check_cap(std::pow(double(s.dim()), n), dim_cap, "dtc_relent_tensor");

    std::vector<MultipartiteState> tau_factors, sigma_factors;
    for (int k = 1; k <= n; ++k) {
        tau_factors.push_back(permute(s, cyclic_order(k, n)));
        sigma_factors.push_back(
            tensor(marginal(s, {k}), marginal(s, cyclic_complement(k, n))));
    }
    const ExtendedReal big = relative_entropy(product_state(tau_factors),
                                              product_state(sigma_factors), base, th);
    return big - total_correlation(s, base, th);
}

ExtendedReal j_n(const MultipartiteState& s, double base, std::size_t dim_cap,
                 const SupportThresholds& th) {
    const int n = s.num_parties();
    if (n < 2) throw WrongArity("j_n: need n >= 2");
    check_cap(std::pow(double(s.dim()), n - 1), dim_cap, "j_n");
    return relative_entropy(replicate(s, n - 1, dim_cap),
                            jn_second_argument(s, /*descending=*/false), base, th);
}

ExtendedReal jtilde_n(const MultipartiteState& s, double base,
                      std::size_t dim_cap, const SupportThresholds& th) {
    const int n = s.num_parties();
    if (n < 2) throw WrongArity("jtilde_n: need n >= 2");
    check_cap(std::pow(double(s.dim()), n - 1), dim_cap, "jtilde_n");
    return relative_entropy(replicate(s, n - 1, dim_cap),
                            jn_second_argument(s, /*descending=*/true), base, th);
}

ExtendedReal cross_term(const MultipartiteState& s, std::pair<int, int> pair,
                        double base, const SupportThresholds& th) {
    const auto [i, j] = pair;
    if (i == j) throw InvalidPartySet("cross_term: parties must differ");
    const MultipartiteState product = tensor(marginal(s, {i}), marginal(s, {j}));
    return cross_log_trace(product, marginal(s, {i, j}), base, th);
}

Jtilde3Terms jtilde3_decomposition(const MultipartiteState& s, double base,
                                   const SupportThresholds& th) {
    if (s.num_parties() != 3) throw WrongArity("jtilde3_decomposition: need n = 3");

    Jtilde3Terms t;
    t.s12 = von_neumann_entropy(marginal(s, {1, 2}), base);
    t.cross_31 = cross_term(s, {3, 1}, base, th);
    t.s23 = von_neumann_entropy(marginal(s, {2, 3}), base);
    t.minus_2s = -2.0 * von_neumann_entropy(s, base);
    t.total = ExtendedReal::finite(t.s12) + t.cross_31 + ExtendedReal::finite(t.s23) +
              ExtendedReal::finite(t.minus_2s);
    return t;
}

namespace {

// Basis direction inside supp(tau) sticking furthest out of supp(sigma).
std::string find_violation_witness(const MultipartiteState& tau,
                                   const MultipartiteState& sigma) {
    const SupportProjector pt = support_projector(tau);
    const SupportProjector ps = support_projector(sigma);
    const Matrix id = Matrix::Identity(tau.dim(), tau.dim());
    const Matrix leak = (id - ps.projector) * pt.projector;

    Eigen::Index best = 0;
    double best_norm = -1.0;
    for (Eigen::Index c = 0; c < leak.cols(); ++c) {
        const double nrm = leak.col(c).norm();
        if (nrm > best_norm) {
            best_norm = nrm;
            best = c;
        }
    }

    std::string digits;
    long long rem = best;
    for (int p = tau.num_parties() - 1; p >= 0; --p) {
        const int d = tau.dims()[p];
        digits.insert(0, std::to_string(rem % d));
        rem /= d;
    }
    return "|" + digits + ">";
}

GapValue make_gap(const QuantityResult& q, double i_n) {
    if (!q.value) return GapValue{GapValue::Kind::Undefined, 0.0};
    if (!q.value->is_finite()) return GapValue{GapValue::Kind::Infinite, 0.0};
    return GapValue{GapValue::Kind::Finite, q.value->value() - i_n};
}

}  // namespace

GapReport gap_report(const MultipartiteState& s, const GapReportOptions& opts) {
    GapReport rep;
    rep.n_parties = s.num_parties();
    rep.base = opts.base;
    rep.i_breakdown = dual_total_correlation(s, opts.base);
    rep.i_n = rep.i_breakdown.value;

    const auto timed = [&](QuantityResult& slot,
                           const std::function<ExtendedReal()>& fn) {
        const auto start = std::chrono::steady_clock::now();
        try {
            slot.value = fn();
        } catch (const Error& e) {
            slot.error = e.what();
        }
        slot.seconds = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    };

    timed(rep.t_n, [&] { return total_correlation(s, opts.base, opts.thresholds); });
    timed(rep.eq_sum, [&] { return dtc_relent_sum(s, opts.base, opts.thresholds); });
    timed(rep.eq_tensor, [&] {
        return dtc_relent_tensor(s, opts.base, opts.dim_cap, opts.thresholds);
    });
    timed(rep.j, [&] {
        const int n = s.num_parties();
        const MultipartiteState tau = replicate(s, n - 1, opts.dim_cap);
        const MultipartiteState sigma = jn_second_argument(s, false);
        const RelEntDetail d =
            relative_entropy_detail(tau, sigma, opts.base, opts.thresholds);
        rep.j.borderline_support = d.borderline;
        rep.j.support_mismatch = d.support_mismatch;
        if (!d.value.is_finite() && opts.find_witness)
            rep.j.violation_witness = find_violation_witness(tau, sigma);
        return d.value;
    });
    timed(rep.jtilde, [&] {
        const int n = s.num_parties();
        const MultipartiteState tau = replicate(s, n - 1, opts.dim_cap);
        const MultipartiteState sigma = jn_second_argument(s, true);
        const RelEntDetail d =
            relative_entropy_detail(tau, sigma, opts.base, opts.thresholds);
        rep.jtilde.borderline_support = d.borderline;
        rep.jtilde.support_mismatch = d.support_mismatch;
        if (!d.value.is_finite() && opts.find_witness)
            rep.jtilde.violation_witness = find_violation_witness(tau, sigma);
        return d.value;
    });

    rep.gap_j_minus_i = make_gap(rep.j, rep.i_n);
    rep.gap_jtilde_minus_i = make_gap(rep.jtilde, rep.i_n);
    rep.gap_eq_sum_minus_i = make_gap(rep.eq_sum, rep.i_n);
    rep.gap_eq_tensor_minus_i = make_gap(rep.eq_tensor, rep.i_n);
    return rep;
}

}  // namespace dtc
