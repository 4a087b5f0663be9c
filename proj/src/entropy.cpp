// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "dtc/entropy.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace dtc {

Spectrum spectrum(const Matrix& m, double tol_herm, double tol_psd) {
    const double scale = std::max(max_norm(m), 1e-300);
    if (max_norm(m - m.adjoint()) > tol_herm * scale)
        throw NotHermitian("spectrum: matrix not Hermitian");

    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) throw EigenFailure("spectrum: eigensolver failed");

    const Eigen::Index n = m.rows();
    Spectrum sp;
    sp.eigenvalues = RealVector(n);
    sp.eigenvectors = Matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {  // Eigen returns ascending order
        double lam = es.eigenvalues()(n - 1 - i);
        if (lam < 0.0 && lam > -tol_psd) lam = 0.0;
        sp.eigenvalues(i) = lam;
        sp.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
    }
    return sp;
}

SupportProjector support_projector(const MultipartiteState& s, double rel_threshold) {
    const Spectrum sp = spectrum(s.matrix());
    const double cutoff = rel_threshold * std::max(sp.eigenvalues(0), 0.0);

    const Eigen::Index n = sp.eigenvalues.size();
    int rank = 0;
    while (rank < n && sp.eigenvalues(rank) > cutoff) ++rank;

    const Matrix v = sp.eigenvectors.leftCols(rank);
    return SupportProjector{v * v.adjoint(), rank, cutoff};
}

ContainmentCheck check_support_contained(const MultipartiteState& tau,
                                         const MultipartiteState& sigma, double tol,
                                         double rel_threshold) {
    if (tau.dim() != sigma.dim())
        throw DimensionMismatch("support check: total dimensions differ");
    const SupportProjector pt = support_projector(tau, rel_threshold);
    const SupportProjector ps = support_projector(sigma, rel_threshold);

    const Matrix id = Matrix::Identity(tau.dim(), tau.dim());
    const double mismatch = max_norm((id - ps.projector) * pt.projector);
    const bool contained = mismatch <= tol;
    return ContainmentCheck{contained, mismatch, !contained && mismatch <= 10.0 * tol};
}

bool support_contained(const MultipartiteState& tau, const MultipartiteState& sigma,
                       double tol) {
    return check_support_contained(tau, sigma, tol).contained;
}

double von_neumann_entropy(const MultipartiteState& s, double base) {
    const Spectrum sp = spectrum(s.matrix());
    double acc = 0.0;
    for (Eigen::Index i = 0; i < sp.eigenvalues.size(); ++i) {
        const double lam = sp.eigenvalues(i);
        if (lam > 0.0) acc -= lam * std::log(lam);  // 0 log 0 := 0
    }
    return std::max(acc / std::log(base), 0.0);
}

namespace {

// tr(a log b) restricted to b's support, in nats.
double trace_log_on_support(const Matrix& a, const Spectrum& sp_b, double cutoff) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < sp_b.eigenvalues.size(); ++j) {
        const double mu = sp_b.eigenvalues(j);
        if (mu <= cutoff) continue;
        const Vector v = sp_b.eigenvectors.col(j);
        acc += std::log(mu) * (v.adjoint() * a * v)(0, 0).real();
    }
    return acc;
}

}  // namespace

RelEntDetail relative_entropy_detail(const MultipartiteState& tau,
                                     const MultipartiteState& sigma, double base,
                                     const SupportThresholds& th) {
    if (tau.dim() != sigma.dim())
        throw DimensionMismatch("relative_entropy: total dimensions differ");

    const Spectrum sp_t = spectrum(tau.matrix());
    const Spectrum sp_s = spectrum(sigma.matrix());
    const double cut_t = th.membership * std::max(sp_t.eigenvalues(0), 0.0);
    const double cut_s = th.membership * std::max(sp_s.eigenvalues(0), 0.0);

    int rank_t = 0, rank_s = 0;
    while (rank_t < sp_t.eigenvalues.size() && sp_t.eigenvalues(rank_t) > cut_t) ++rank_t;
    while (rank_s < sp_s.eigenvalues.size() && sp_s.eigenvalues(rank_s) > cut_s) ++rank_s;

    // ||(I - P_sigma) P_tau||_max without forming the full projectors:
    // (I - V_s V_s^dag) V_t V_t^dag.
    const Matrix vt = sp_t.eigenvectors.leftCols(rank_t);
    const Matrix vs = sp_s.eigenvectors.leftCols(rank_s);
    const Matrix residual = (vt - vs * (vs.adjoint() * vt)) * vt.adjoint();
    const double mismatch = max_norm(residual);

    RelEntDetail out;
    out.support_mismatch = mismatch;
    out.borderline = mismatch > th.containment && mismatch <= 10.0 * th.containment;
    if (mismatch > th.containment) {
        out.value = ExtendedReal::infinity();
        return out;
    }

    double tr_t_log_t = 0.0;
    for (Eigen::Index i = 0; i < sp_t.eigenvalues.size(); ++i) {
        const double lam = sp_t.eigenvalues(i);
        if (lam > cut_t) tr_t_log_t += lam * std::log(lam);
    }
    const double tr_t_log_s = trace_log_on_support(tau.matrix(), sp_s, cut_s);

    out.value = ExtendedReal::finite(
        std::max((tr_t_log_t - tr_t_log_s) / std::log(base), 0.0));
    return out;
}

ExtendedReal relative_entropy(const MultipartiteState& tau,
                              const MultipartiteState& sigma, double base,
                              const SupportThresholds& th) {
    return relative_entropy_detail(tau, sigma, base, th).value;
}

ExtendedReal cross_log_trace(const MultipartiteState& a, const MultipartiteState& b,
                             double base, const SupportThresholds& th) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("cross_log_trace: total dimensions differ");
    if (!check_support_contained(a, b, th.containment, th.membership).contained)
        return ExtendedReal::infinity();

    const Spectrum sp_b = spectrum(b.matrix());
    const double cut = th.membership * std::max(sp_b.eigenvalues(0), 0.0);
    return ExtendedReal::finite(-trace_log_on_support(a.matrix(), sp_b, cut) /
                                std::log(base));
}

}  // namespace dtc
