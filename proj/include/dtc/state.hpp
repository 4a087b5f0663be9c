// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#ifndef DTC_STATE_HPP
#define DTC_STATE_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "dtc/errors.hpp"
#include "dtc/linalg.hpp"

namespace dtc {

struct Tolerances {
    double herm = 1e-10;   // relative to max-norm of the matrix
    double trace = 1e-10;  // absolute on |tr - 1|
    double psd = 1e-10;    // absolute on the most negative eigenvalue
};

inline constexpr std::size_t kDefaultDimCap = 4096;

// Density matrix on an ordered list of labeled parties. Immutable after
// construction; every instance has passed validation (Hermitian, unit
// trace, PSD up to tolerance). Party positions are 1-based throughout.
class MultipartiteState {
  public:
    MultipartiteState(Matrix matrix, std::vector<int> dims,
                      std::vector<std::string> labels = {},
                      const Tolerances& tol = {});

    const Matrix& matrix() const { return matrix_; }
    const std::vector<int>& dims() const { return dims_; }
    const std::vector<std::string>& labels() const { return labels_; }
    int num_parties() const { return static_cast<int>(dims_.size()); }
    int dim() const { return static_cast<int>(matrix_.rows()); }

  private:
    Matrix matrix_;
    std::vector<int> dims_;
    std::vector<std::string> labels_;
};

MultipartiteState make_state(Matrix matrix, std::vector<int> dims,
                             std::vector<std::string> labels = {},
                             const Tolerances& tol = {});

// Positional Kronecker product, a's parties first. Colliding labels from b
// get a prime suffix.
MultipartiteState tensor(const MultipartiteState& a, const MultipartiteState& b);

// Trace out the parties in `drop`; the rest keep their relative order.
MultipartiteState partial_trace(const MultipartiteState& s, const std::set<int>& drop);

// Reorder parties so that old position perm[i] becomes new position i+1.
MultipartiteState permute(const MultipartiteState& s, const std::vector<int>& perm);

// Reduced state on `keep`, with parties in exactly that order.
MultipartiteState marginal(const MultipartiteState& s, const std::vector<int>& keep);

// The ordered complement (k+1, ..., n, 1, ..., k-1).
std::vector<int> cyclic_complement(int k, int n);

// m-fold positional tensor power; labels tagged per copy.
MultipartiteState replicate(const MultipartiteState& s, int m,
                            std::size_t dim_cap = kDefaultDimCap);

// Local CPTP map as Kraus operators on a single party.
struct KrausChannel {
    int party_dim;
    std::vector<Matrix> kraus;

    static KrausChannel make(int party_dim, std::vector<Matrix> kraus,
                             double tol_cptp = 1e-10);
};

MultipartiteState apply_local_channel(const MultipartiteState& s, int party,
                                      const KrausChannel& ch);

// --- stock states ---

MultipartiteState ghz(int n, int d = 2);
MultipartiteState w_state(int n);
MultipartiteState product_state(const std::vector<MultipartiteState>& parts);
MultipartiteState maximally_mixed(const std::vector<int>& dims);

// Seeded constructors are deterministic given their arguments.
MultipartiteState random_pure(const std::vector<int>& dims, std::uint64_t seed);
// Partial trace of a random pure state on system (x) rank-dim ancilla
// (Ginibre construction). rank = full dim gives a full-support state.
MultipartiteState random_mixed(const std::vector<int>& dims, int rank, std::uint64_t seed);
KrausChannel random_channel(int dim, int n_kraus, std::uint64_t seed);

}  // namespace dtc

#endif
