// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#include "dtc/state.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace dtc {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i + 1);
    return out;
}

long long product_of(const std::vector<int>& dims) {
    long long p = 1;
    for (int d : dims) p *= d;
    return p;
}

// Flat-index offsets for a subset of parties, all other digits zero.
// offsets[a] = sum over subset parties of digit * stride, where a runs over
// the mixed-radix enumeration of the subset in the given order.
std::vector<long long> subset_offsets(const std::vector<int>& dims,
                                      const std::vector<int>& parties0 /*0-based*/) {
    std::vector<long long> stride(dims.size(), 1);
    for (int p = static_cast<int>(dims.size()) - 2; p >= 0; --p)
        stride[p] = stride[p + 1] * dims[p + 1];

    long long total = 1;
    for (int p : parties0) total *= dims[p];

    std::vector<long long> offsets(total, 0);
    long long repeat = total;
    for (int p : parties0) {
        repeat /= dims[p];
        for (long long a = 0; a < total; ++a) {
            long long digit = (a / repeat) % dims[p];
            offsets[a] += digit * stride[p];
        }
    }
    return offsets;
}

// Core kernel: keep the listed parties (0-based, in the requested order),
// trace out the rest.
Matrix reorder_and_trace(const Matrix& m, const std::vector<int>& dims,
                         const std::vector<int>& keep0) {
    std::vector<int> drop0;
    std::vector<bool> kept(dims.size(), false);
    for (int p : keep0) kept[p] = true;
    for (int p = 0; p < static_cast<int>(dims.size()); ++p)
        if (!kept[p]) drop0.push_back(p);

    const std::vector<long long> keep_off = subset_offsets(dims, keep0);
    const std::vector<long long> drop_off = subset_offsets(dims, drop0);

    const long long dk = static_cast<long long>(keep_off.size());
    Matrix out = Matrix::Zero(dk, dk);
    for (long long a = 0; a < dk; ++a)
        for (long long b = 0; b < dk; ++b) {
            Complex acc = 0.0;
            for (long long t : drop_off) acc += m(keep_off[a] + t, keep_off[b] + t);
            out(a, b) = acc;
        }
    return out;
}

std::vector<int> to_zero_based(const std::vector<int>& parties, int n,
                               const char* what) {
    std::vector<int> out;
    out.reserve(parties.size());
    std::vector<bool> seen(n, false);
    for (int p : parties) {
        if (p < 1 || p > n)
            throw InvalidPartySet(std::string(what) + ": party " + std::to_string(p) +
                                  " out of range 1.." + std::to_string(n));
        if (seen[p - 1])
            throw InvalidPartySet(std::string(what) + ": duplicate party " +
                                  std::to_string(p));
        seen[p - 1] = true;
        out.push_back(p - 1);
    }
    return out;
}

}  // namespace

MultipartiteState::MultipartiteState(Matrix matrix, std::vector<int> dims,
                                     std::vector<std::string> labels,
                                     const Tolerances& tol) {
    if (dims.empty()) throw DimensionMismatch("dims must be nonempty");
    for (int d : dims)
        if (d < 1) throw DimensionMismatch("party dimension must be positive");
    if (matrix.rows() != matrix.cols())
        throw DimensionMismatch("matrix must be square");
    if (product_of(dims) != matrix.rows())
        throw DimensionMismatch("product of dims (" + std::to_string(product_of(dims)) +
                                ") != matrix dim (" + std::to_string(matrix.rows()) + ")");
    if (!all_entries_finite(matrix))
        throw ValidationError("matrix has non-finite entries");

    const double scale = std::max(max_norm(matrix), 1e-300);
    const double herm_err = max_norm(matrix - matrix.adjoint());
    if (herm_err > tol.herm * scale)
        throw NotHermitian("not Hermitian: ||M - M^dag||_max = " + std::to_string(herm_err));
    matrix = 0.5 * (matrix + matrix.adjoint().eval());

    const double tr_err = std::abs(matrix.trace() - Complex(1.0, 0.0));
    if (tr_err > tol.trace)
        throw NotUnitTrace("trace is " + std::to_string(matrix.trace().real()) +
                           ", expected 1");

    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw EigenFailure("eigensolver failed in validation");
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -tol.psd)
        throw NotPSD("not PSD: min eigenvalue " + std::to_string(min_eig));

    if (labels.empty()) labels = default_labels(dims.size());
    if (labels.size() != dims.size())
        throw ValidationError("labels and dims lengths differ");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw ValidationError("duplicate party label '" + labels[i] + "'");

    matrix_ = std::move(matrix);
    dims_ = std::move(dims);
    labels_ = std::move(labels);
}

MultipartiteState make_state(Matrix matrix, std::vector<int> dims,
                             std::vector<std::string> labels, const Tolerances& tol) {
    return MultipartiteState(std::move(matrix), std::move(dims), std::move(labels), tol);
}

MultipartiteState tensor(const MultipartiteState& a, const MultipartiteState& b) {
    std::vector<int> dims = a.dims();
    dims.insert(dims.end(), b.dims().begin(), b.dims().end());

    std::vector<std::string> labels = a.labels();
    for (std::string lab : b.labels()) {
        while (std::find(labels.begin(), labels.end(), lab) != labels.end()) lab += "'";
        labels.push_back(std::move(lab));
    }
    return MultipartiteState(kron(a.matrix(), b.matrix()), std::move(dims),
                             std::move(labels));
}

MultipartiteState partial_trace(const MultipartiteState& s, const std::set<int>& drop) {
    const int n = s.num_parties();
    if (drop.empty() || static_cast<int>(drop.size()) >= n)
        throw InvalidPartySet("partial_trace: drop must be a proper nonempty subset");
    std::vector<int> keep;
    for (int p = 1; p <= n; ++p)
        if (!drop.count(p)) keep.push_back(p);
    for (int p : drop)
        if (p < 1 || p > n)
            throw InvalidPartySet("partial_trace: party " + std::to_string(p) +
                                  " out of range");
    return marginal(s, keep);
}

MultipartiteState permute(const MultipartiteState& s, const std::vector<int>& perm) {
    const int n = s.num_parties();
    if (static_cast<int>(perm.size()) != n)
        throw InvalidPermutation("permutation length != number of parties");
    try {
        return marginal(s, perm);
    } catch (const InvalidPartySet& e) {
        throw InvalidPermutation(e.what());
    }
}

MultipartiteState marginal(const MultipartiteState& s, const std::vector<int>& keep) {
    if (keep.empty()) throw InvalidPartySet("marginal: keep must be nonempty");
    const std::vector<int> keep0 = to_zero_based(keep, s.num_parties(), "marginal");

    std::vector<int> dims;
    std::vector<std::string> labels;
    for (int p : keep0) {
        dims.push_back(s.dims()[p]);
        labels.push_back(s.labels()[p]);
    }
    return MultipartiteState(reorder_and_trace(s.matrix(), s.dims(), keep0),
                             std::move(dims), std::move(labels));
}

std::vector<int> cyclic_complement(int k, int n) {
    if (n < 2 || k < 1 || k > n)
        throw OutOfRange("cyclic_complement: need 1 <= k <= n, n >= 2");
    std::vector<int> out;
    out.reserve(n - 1);
    for (int p = k + 1; p <= n; ++p) out.push_back(p);
    for (int p = 1; p < k; ++p) out.push_back(p);
    return out;
}

MultipartiteState replicate(const MultipartiteState& s, int m, std::size_t dim_cap) {
    if (m < 1) throw OutOfRange("replicate: m must be >= 1");
    double total = 1.0;
    for (int i = 0; i < m; ++i) {
        total *= s.dim();
        if (total > static_cast<double>(dim_cap))
            throw DimensionCapExceeded("replicate: dim^" + std::to_string(m) +
                                       " exceeds cap " + std::to_string(dim_cap));
    }
    MultipartiteState out = s;
    for (int i = 1; i < m; ++i) out = tensor(out, s);
    return out;
}

KrausChannel KrausChannel::make(int party_dim, std::vector<Matrix> kraus,
                                double tol_cptp) {
    if (party_dim < 1) throw InvalidChannel("party_dim must be positive");
    if (kraus.empty()) throw InvalidChannel("Kraus list must be nonempty");
    Matrix sum = Matrix::Zero(party_dim, party_dim);
    for (const Matrix& k : kraus) {
        if (k.rows() != party_dim || k.cols() != party_dim)
            throw InvalidChannel("Kraus operator dimension mismatch");
        sum += k.adjoint() * k;
    }
    const double err = max_norm(sum - Matrix::Identity(party_dim, party_dim));
    if (err > tol_cptp)
        throw InvalidChannel("not trace preserving: ||sum K^dag K - I||_max = " +
                             std::to_string(err));
    return KrausChannel{party_dim, std::move(kraus)};
}

MultipartiteState apply_local_channel(const MultipartiteState& s, int party,
                                      const KrausChannel& ch) {
    const int n = s.num_parties();
    if (party < 1 || party > n) throw InvalidPartySet("apply_local_channel: bad party");
    if (ch.party_dim != s.dims()[party - 1])
        throw DimensionMismatch("channel dim " + std::to_string(ch.party_dim) +
                                " != party dim " + std::to_string(s.dims()[party - 1]));

    long long left = 1, right = 1;
    for (int p = 0; p < party - 1; ++p) left *= s.dims()[p];
    for (int p = party; p < n; ++p) right *= s.dims()[p];
    const Matrix il = Matrix::Identity(left, left);
    const Matrix ir = Matrix::Identity(right, right);

    Matrix out = Matrix::Zero(s.dim(), s.dim());
    for (const Matrix& k : ch.kraus) {
        const Matrix op = kron(kron(il, k), ir);
        out += op * s.matrix() * op.adjoint();
    }
    return MultipartiteState(std::move(out), s.dims(), s.labels());
}

MultipartiteState ghz(int n, int d) {
    if (n < 1 || d < 2) throw OutOfRange("ghz: need n >= 1, d >= 2");
    long long dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    Vector psi = Vector::Zero(dim);
    long long stride = (dim - 1) / (d - 1);  // index of |i...i> is i * stride
    for (int i = 0; i < d; ++i) psi(i * stride) = 1.0 / std::sqrt(double(d));
    return MultipartiteState(psi * psi.adjoint(), std::vector<int>(n, d));
}

MultipartiteState w_state(int n) {
    if (n < 2) throw OutOfRange("w_state: need n >= 2");
    const long long dim = 1LL << n;
    Vector psi = Vector::Zero(dim);
    for (int k = 0; k < n; ++k) psi(1LL << (n - 1 - k)) = 1.0 / std::sqrt(double(n));
    return MultipartiteState(psi * psi.adjoint(), std::vector<int>(n, 2));
}

MultipartiteState product_state(const std::vector<MultipartiteState>& parts) {
    if (parts.empty()) throw ValidationError("product_state: empty list");
    MultipartiteState out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out = tensor(out, parts[i]);
    return out;
}

MultipartiteState maximally_mixed(const std::vector<int>& dims) {
    const long long dim = product_of(dims);
    return MultipartiteState(Matrix::Identity(dim, dim) / double(dim), dims);
}

namespace {

Matrix ginibre(long long rows, long long cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(rows, cols);
    for (long long i = 0; i < rows; ++i)
        for (long long j = 0; j < cols; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    return g;
}

}  // namespace

MultipartiteState random_pure(const std::vector<int>& dims, std::uint64_t seed) {
    const long long dim = product_of(dims);
    Vector psi = ginibre(dim, 1, seed).col(0);
    psi.normalize();
    return MultipartiteState(psi * psi.adjoint(), dims);
}

MultipartiteState random_mixed(const std::vector<int>& dims, int rank,
                               std::uint64_t seed) {
    const long long dim = product_of(dims);
    if (rank < 1 || rank > dim)
        throw OutOfRange("random_mixed: rank must be in 1..dim");
    const Matrix g = ginibre(dim, rank, seed);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return MultipartiteState(std::move(rho), dims);
}

KrausChannel random_channel(int dim, int n_kraus, std::uint64_t seed) {
    if (dim < 1 || n_kraus < 1) throw OutOfRange("random_channel: bad arguments");
    const Matrix g = ginibre(static_cast<long long>(dim) * n_kraus, dim, seed);
    Eigen::HouseholderQR<Matrix> qr(g);
    const Matrix q = Matrix(qr.householderQ()).leftCols(dim);  // isometry
    std::vector<Matrix> kraus;
    kraus.reserve(n_kraus);
    for (int j = 0; j < n_kraus; ++j) kraus.push_back(q.block(j * dim, 0, dim, dim));
    return KrausChannel::make(dim, std::move(kraus));
}

}  // namespace dtc
