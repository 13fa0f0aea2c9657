#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "trispec/constructions.hpp"
#include "trispec/source.hpp"
#include "trispec/spectra.hpp"
#include "trispec/verify.hpp"

using namespace trispec;
using doctest::Approx;

TEST_CASE("Jacobi on small matrices") {
    const std::vector<double> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
    CHECK(eigenvalues_symmetric(id, 3) == std::vector<double>{1, 1, 1});

    const auto l0 = build_laplacian(LaplacianKind::L0_up, complete_family(4));
    const auto ev = eigenvalues_symmetric(l0.matrix);
    REQUIRE(ev.size() == 4);
    CHECK(ev[0] == Approx(0.0).epsilon(1e-12));
    for (int i = 1; i < 4; ++i) CHECK(ev[i] == Approx(4.0).epsilon(1e-12));

    CHECK(eigenvalues_symmetric(build_laplacian(LaplacianKind::L2_down, intro_family(1)).matrix) ==
          std::vector<double>{3.0});
}

TEST_CASE("Jacobi agrees with a reference eigensolver") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 25;
        Eigen::MatrixXd m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = (trial % 4 == 0 && i != j && rng() % 3) ? 0.0 : u(rng);
        std::vector<double> flat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = m(i, j);
        const auto ours = eigenvalues_symmetric(flat, n);
        const auto ref = oracle::sym_eigenvalues(m);
        for (std::size_t i = 0; i < n; ++i) CHECK(ours[i] == Approx(ref[i]).epsilon(1e-10));
    }
}

TEST_CASE("Jacobi input validation") {
    const std::vector<double> asym{1, 2, 0, 1};
    CHECK_THROWS_AS(eigenvalues_symmetric(asym, 2), NumericalError);
    CHECK_THROWS_AS(eigenvalues_symmetric(asym, 3), std::invalid_argument);

    const std::vector<double> m{2, 1, 1, 2};
    JacobiOptions none;
    none.max_sweeps = 0;
    try {
        eigenvalues_symmetric(m, 2, none);
        FAIL("expected non-convergence");
    } catch (const NumericalError& e) {
        CHECK(e.residual() > 0.0);
    }
}

TEST_CASE("lambda of the four-vertex families") {
    CHECK(lambda_of(intro_family(1)) == Approx(3.0).epsilon(1e-10));
    CHECK(lambda_of(intro_family(2)) == Approx(2.0).epsilon(1e-10));
    CHECK(lambda_of(intro_family(3)) == Approx(1.0).epsilon(1e-10));
    CHECK(lambda_of(intro_family(4)) == Approx(4.0).epsilon(1e-10));
}

TEST_CASE("lambda of complete families and join families") {
    for (int n = 3; n <= 7; ++n) CHECK(lambda_of(complete_family(n)) == Approx(n).epsilon(1e-10));
    CHECK(lambda_of(gcb_family({4, 2})) == Approx(4.0).epsilon(1e-10));
}

TEST_CASE("lambda does not depend on which Gram matrix is used") {
    for (const auto& f : random_families(25, 21)) {
        const double up = lambda_of(f, LaplacianKind::L1_up);
        const double down = lambda_of(f, LaplacianKind::L2_down);
        CHECK(up == Approx(down).epsilon(1e-9));
        CHECK(lambda_of(f) == Approx(oracle::lambda(f)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(lambda_of(intro_family(1), LaplacianKind::L0_up), std::invalid_argument);
}

TEST_CASE("lambda is invariant under relabeling") {
    std::mt19937_64 rng(8);
    for (const auto& f : random_families(15, 4)) {
        std::vector<Vertex> perm(20);
        std::iota(perm.begin(), perm.end(), Vertex{100});
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(lambda_of(f.relabeled(perm)) == Approx(lambda_of(f)).epsilon(1e-9));
    }
}

TEST_CASE("lambda of a disjoint union is the minimum") {
    const auto fams = random_families(12, 31);
    for (std::size_t i = 0; i + 1 < fams.size(); i += 2) {
        const auto u = disjoint_union(fams[i], fams[i + 1]);
        CHECK(lambda_of(u) == Approx(std::min(lambda_of(fams[i]), lambda_of(fams[i + 1]))).epsilon(1e-9));
    }
}

TEST_CASE("spectral report") {
    const auto r = spectral_report(intro_family(1));
    CHECK(r.lambda == Approx(3.0));
    CHECK(r.nullity == 0);
    CHECK_FALSE(r.tau.has_value());
    CHECK(r.vertex_count == 3);
    CHECK(r.edge_count == 3);
    CHECK(r.triangle_count == 1);

    const auto k5 = spectral_report(complete_family(5));
    CHECK(k5.lambda == Approx(5.0));
    CHECK(k5.lambda_min_plus_L0 == Approx(5.0));
    CHECK(k5.lambda_min_plus_L1_total == Approx(5.0));
    CHECK(k5.full_spectrum.rank() + k5.nullity == k5.full_spectrum.source_dim);

    const auto t3 = spectral_report(intro_family(3));
    REQUIRE(t3.tau.has_value());
    CHECK(*t3.tau > t3.lambda);
}

TEST_CASE("exact nullity matches the spectrum") {
    const auto l = build_laplacian(LaplacianKind::L2_down, gcb_family({4, 3}));
    const auto s = laplacian_spectrum(l);
    CHECK(s.nullity == 10);
    for (std::size_t i = 0; i < s.nullity; ++i) CHECK(std::abs(s.eigenvalues[i]) < zero_band(s.eigenvalues.back()));
    CHECK(lambda_min_plus(s) == Approx(4.0));
}

TEST_CASE("zero matrix has no positive eigenvalue") {
    Laplacian zero{LaplacianKind::L1_up, IntMatrix(2, 2), IntMatrix(1, 2)};
    CHECK_THROWS_WITH_AS(lambda_min_plus(zero), "no positive eigenvalue", NumericalError);
}

TEST_CASE("min-gap identity") {
    const auto k5 = verify_min_gap(complete_family(5));
    CHECK(k5.pass);
    CHECK(k5.total_gap == Approx(5.0));
    CHECK(k5.graph_gap == Approx(5.0));

    const auto t2 = verify_min_gap(intro_family(2));
    CHECK(t2.pass);
    CHECK(t2.graph_gap == Approx(oracle::graph_gap(intro_family(2))));
    CHECK(t2.total_gap == Approx(std::min(oracle::graph_gap(intro_family(2)), 2.0)));

    for (const auto& f : random_families(30, 2)) {
        const auto c = verify_min_gap(f);
        CHECK(c.pass);
        CHECK(c.total_gap == Approx(oracle::hodge1_gap(f)).epsilon(1e-8));
    }
}
