// Copyright 2026 the dtc-lab authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/QR>
#include <random>

#include "dtc/entropy.hpp"

using namespace dtc;

namespace {

MultipartiteState pure0() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    return make_state(m, {2});
}

Matrix random_unitary(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
    return Eigen::HouseholderQR<Matrix>(g).householderQ();
}

}  // namespace

TEST_CASE("ExtendedReal arithmetic") {
    const ExtendedReal two = ExtendedReal::finite(2.0);
    const ExtendedReal three = ExtendedReal::finite(3.0);
    const ExtendedReal inf = ExtendedReal::infinity();

    CHECK((two + three).value() == 5.0);
    CHECK((three - two).value() == 1.0);
    CHECK_FALSE((two + inf).is_finite());
    CHECK_FALSE((inf + inf).is_finite());
    CHECK_FALSE((inf - two).is_finite());
    CHECK_THROWS_AS(inf - inf, UndefinedArithmetic);
    CHECK_THROWS_AS(two - inf, UndefinedArithmetic);
    CHECK_THROWS_AS(inf.value(), UndefinedArithmetic);
}

TEST_CASE("spectrum returns descending clamped eigenvalues") {
    const Spectrum sp = spectrum(Matrix::Identity(2, 2) / 2.0);
    CHECK(sp.eigenvalues(0) == doctest::Approx(0.5));
    CHECK(sp.eigenvalues(1) == doctest::Approx(0.5));

    Matrix proj = Matrix::Zero(2, 2);
    proj(0, 0) = 1.0;
    const Spectrum sp2 = spectrum(proj);
    CHECK(sp2.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(sp2.eigenvalues(1) == 0.0);

    const MultipartiteState g12 = marginal(ghz(3), {1, 2});
    const Spectrum sp3 = spectrum(g12.matrix());
    CHECK(sp3.eigenvalues(0) == doctest::Approx(0.5));
    CHECK(sp3.eigenvalues(1) == doctest::Approx(0.5));
    CHECK(sp3.eigenvalues(2) == 0.0);
    CHECK(sp3.eigenvalues(3) == 0.0);

    // reconstruction and unitarity
    const MultipartiteState s = random_mixed({2, 2, 2}, 8, 42);
    const Spectrum sp4 = spectrum(s.matrix());
    const Matrix recon = sp4.eigenvectors *
                         sp4.eigenvalues.cast<Complex>().asDiagonal() *
                         sp4.eigenvectors.adjoint();
    CHECK(max_norm(recon - s.matrix()) < 1e-9 * max_norm(s.matrix()));
    CHECK(max_norm(sp4.eigenvectors * sp4.eigenvectors.adjoint() -
                   Matrix::Identity(8, 8)) < 1e-9);

    Matrix nh = Matrix::Zero(2, 2);
    nh(0, 1) = 1.0;
    CHECK_THROWS_AS(spectrum(nh), NotHermitian);
}

TEST_CASE("von Neumann entropy on known states") {
    CHECK(von_neumann_entropy(pure0()) == 0.0);
    CHECK(von_neumann_entropy(random_pure({2, 2}, 3)) < 1e-10);
    CHECK(von_neumann_entropy(maximally_mixed({2})) == doctest::Approx(1.0));
    CHECK(von_neumann_entropy(maximally_mixed({2, 2, 2})) == doctest::Approx(3.0));
    // natural log base
    CHECK(von_neumann_entropy(maximally_mixed({2}), std::exp(1.0)) ==
          doctest::Approx(std::log(2.0)));
}

TEST_CASE("support projector rank") {
    const MultipartiteState full = random_mixed({2, 2}, 4, 9);
    CHECK(support_projector(full).rank == 4);
    CHECK(support_projector(random_pure({2, 2}, 9)).rank == 1);

    const SupportProjector p = support_projector(marginal(ghz(3), {1, 2}));
    CHECK(p.rank == 2);
    CHECK(max_norm(p.projector * p.projector - p.projector) < 1e-9);
    CHECK(max_norm(p.projector - p.projector.adjoint()) < 1e-9);
    CHECK(std::abs(p.projector.trace().real() - p.rank) < 1e-6);
}

TEST_CASE("support containment truth table") {
    const MultipartiteState mixed = maximally_mixed({2});
    const MultipartiteState s = random_mixed({2, 2}, 4, 10);
    CHECK(support_contained(s, s));
    CHECK(support_contained(pure0(), mixed));
    CHECK_FALSE(support_contained(mixed, pure0()));

    // rank-deficient vs rank-deficient
    const MultipartiteState g12 = marginal(ghz(3), {1, 2});
    CHECK(support_contained(g12, g12));
    CHECK_FALSE(support_contained(maximally_mixed({2, 2}), g12));
    CHECK(support_contained(g12, maximally_mixed({2, 2})));

    CHECK_THROWS_AS(support_contained(mixed, s), DimensionMismatch);
}

TEST_CASE("GHZ copies escape the support of the cyclic marginal product") {
    const MultipartiteState g = ghz(3);
    const MultipartiteState tau = tensor(g, g);
    const MultipartiteState sigma = product_state(
        {marginal(g, {2, 3}), marginal(g, {3, 1}), marginal(g, {1, 2})});
    CHECK_FALSE(support_contained(tau, sigma));

    // |000111> lies in supp(tau) but not supp(sigma)
    const SupportProjector pt = support_projector(tau);
    const SupportProjector ps = support_projector(sigma);
    Vector witness = Vector::Zero(64);
    witness(0b000111) = 1.0;
    CHECK((pt.projector * witness).norm() > 0.1);
    CHECK((ps.projector * witness).norm() < 1e-9);
}

TEST_CASE("relative entropy basics") {
    const MultipartiteState s = random_mixed({2, 2}, 4, 11);
    const ExtendedReal self = relative_entropy(s, s);
    CHECK(self.is_finite());
    CHECK(self.value() == doctest::Approx(0.0).epsilon(1e-9));

    const ExtendedReal one_bit = relative_entropy(pure0(), maximally_mixed({2}));
    CHECK(one_bit.value() == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_FALSE(relative_entropy(maximally_mixed({2}), pure0()).is_finite());
    CHECK_THROWS_AS(relative_entropy(pure0(), s), DimensionMismatch);
}

TEST_CASE("Klein inequality: nonnegative, zero only at equality") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::vector<int> dims = seed % 2 ? std::vector<int>{2, 2}
                                               : std::vector<int>{2, 2, 2};
        const int dim = seed % 2 ? 4 : 8;
        const MultipartiteState tau = random_mixed(dims, dim, 500 + seed);
        const MultipartiteState sigma = random_mixed(dims, dim, 600 + seed);
        const ExtendedReal v = relative_entropy(tau, sigma);
        REQUIRE(v.is_finite());
        CHECK(v.value() >= 0.0);
        if (max_norm(tau.matrix() - sigma.matrix()) > 1e-7)
            CHECK(v.value() > 1e-6);
    }
}

TEST_CASE("relative entropy is additive over tensor products") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const MultipartiteState t1 = random_mixed({2}, 2, 700 + seed);
        const MultipartiteState t2 = random_mixed({2}, 2, 710 + seed);
        const MultipartiteState s1 = random_mixed({2}, 2, 720 + seed);
        const MultipartiteState s2 = random_mixed({2}, 2, 730 + seed);
        const double lhs =
            relative_entropy(tensor(t1, t2), tensor(s1, s2)).value();
        const double rhs =
            relative_entropy(t1, s1).value() + relative_entropy(t2, s2).value();
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    }
    // infinity on either side dominates
    const MultipartiteState mixed = maximally_mixed({2});
    CHECK_FALSE(
        relative_entropy(tensor(mixed, mixed), tensor(pure0(), mixed)).is_finite());
}

TEST_CASE("entropy recovered from relative entropy to the maximally mixed state") {
    const MultipartiteState s = random_mixed({2, 2, 2}, 8, 12);
    const double expect = 3.0 - relative_entropy(s, maximally_mixed({2, 2, 2})).value();
    CHECK(von_neumann_entropy(s) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("cross_log_trace") {
    const MultipartiteState s = random_mixed({2, 2}, 4, 13);
    CHECK(cross_log_trace(s, s).value() ==
          doctest::Approx(von_neumann_entropy(s)).epsilon(1e-10));
    CHECK_FALSE(cross_log_trace(maximally_mixed({2}), pure0()).is_finite());

    // -tr(a log b) - S(a) = S(a || b) when supports are compatible
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const MultipartiteState full = random_mixed({2, 2, 2}, 8, 800 + seed);
        const MultipartiteState a = tensor(marginal(full, {3}), marginal(full, {1}));
        const MultipartiteState b = marginal(full, {3, 1});
        const ExtendedReal cross = cross_log_trace(a, b);
        REQUIRE(cross.is_finite());
        CHECK(cross.value() >=
              von_neumann_entropy(b) - 1e-9);  // >= S(rho_31)
        CHECK(cross.value() - von_neumann_entropy(a) ==
              doctest::Approx(relative_entropy(a, b).value()).epsilon(1e-8));
    }
}

TEST_CASE("entropy is unitarily invariant") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const MultipartiteState s = random_mixed({2, 2}, 4, 900 + seed);
        const Matrix u = random_unitary(4, 910 + seed);
        const MultipartiteState rotated =
            make_state(u * s.matrix() * u.adjoint(), s.dims());
        CHECK(von_neumann_entropy(rotated) ==
              doctest::Approx(von_neumann_entropy(s)).epsilon(1e-9));
    }
}

TEST_CASE("borderline support reporting") {
    // sigma with one eigenvalue just large enough to fail containment but
    // within 10x of the tolerance: verdict stays infinite, flag raised.
    const MultipartiteState tau = maximally_mixed({2});
    Matrix m = Matrix::Zero(2, 2);
    const double eps = 1e-6;  // above the 1e-9 relative support cutoff
    m(0, 0) = 1.0 - eps;
    m(1, 1) = eps;
    const MultipartiteState sigma = make_state(m, {2});
    const RelEntDetail d = relative_entropy_detail(tau, sigma);
    CHECK(d.value.is_finite());

    Matrix m2 = Matrix::Zero(2, 2);
    m2(0, 0) = 1.0;
    const RelEntDetail d2 = relative_entropy_detail(tau, make_state(m2, {2}));
    CHECK_FALSE(d2.value.is_finite());
    CHECK(d2.support_mismatch > 0.5);
    CHECK_FALSE(d2.borderline);
}
