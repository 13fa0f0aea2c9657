#include <doctest.h>

#include <random>
#include <sstream>

#include "trispec/constructions.hpp"
#include "trispec/incidence.hpp"
#include "trispec/matrix_market.hpp"
#include "trispec/verify.hpp"

using namespace trispec;

TEST_CASE("delta1 of a single triangle") {
    const TriangleFamily f{{1, 2, 3}};
    const auto g = support_graph(f);
    const auto d1 = build_delta1(f, g);
    REQUIRE(d1.entries.rows() == 1);
    REQUIRE(d1.entries.cols() == 3);
    // columns: {1,2}, {1,3}, {2,3}
    CHECK(d1.entries(0, 0) == 1);
    CHECK(d1.entries(0, 1) == -1);
    CHECK(d1.entries(0, 2) == 1);
    CHECK(exact_rank(d1.entries) == 1);
}

TEST_CASE("delta1 of K4 triples") {
    const auto f = complete_family(4);
    const auto g = support_graph(f);
    const auto d1 = build_delta1(f, g);
    CHECK(d1.entries.rows() == 4);
    CHECK(d1.entries.cols() == 6);
    for (std::size_t r = 0; r < 4; ++r) {
        int nz = 0;
        for (auto v : d1.entries.row(r)) nz += v != 0;
        CHECK(nz == 3);
    }
    CHECK(exact_rank(d1.entries) == 3);
}

TEST_CASE("delta0 of K4 has rank 3") {
    const auto d0 = build_delta0(support_graph(complete_family(4)));
    CHECK(d0.entries.rows() == 6);
    CHECK(d0.entries.cols() == 4);
    CHECK(exact_rank(d0.entries) == 3);
    for (std::size_t r = 0; r < 6; ++r) {
        std::int64_t sum = 0;
        for (auto v : d0.entries.row(r)) sum += v;
        CHECK(sum == 0);
    }
}

TEST_CASE("L2_down of a single triangle is [3]") {
    const auto l = build_laplacian(LaplacianKind::L2_down, TriangleFamily{{1, 2, 3}});
    REQUIRE(l.matrix.rows() == 1);
    CHECK(l.matrix(0, 0) == 3);
}

TEST_CASE("Laplacians are Gram matrices of their factors") {
    for (const auto& f : random_families(20, 11)) {
        const auto g = support_graph(f);
        const auto d0 = build_delta0(g);
        const auto d1 = build_delta1(f, g);
        CHECK((d1.entries * d0.entries).is_zero());

        const auto l0 = build_laplacian(LaplacianKind::L0_up, d0, d1);
        const auto l1d = build_laplacian(LaplacianKind::L1_down, d0, d1);
        const auto l1u = build_laplacian(LaplacianKind::L1_up, d0, d1);
        const auto l2d = build_laplacian(LaplacianKind::L2_down, d0, d1);
        const auto l1 = build_laplacian(LaplacianKind::L1_total, d0, d1);
        CHECK(l0.matrix == d0.entries.transpose() * d0.entries);
        CHECK(l1d.matrix == d0.entries * d0.entries.transpose());
        CHECK(l1u.matrix == d1.entries.transpose() * d1.entries);
        CHECK(l2d.matrix == d1.entries * d1.entries.transpose());
        CHECK(l1.matrix == l1d.matrix + l1u.matrix);
        for (const auto* l : {&l0, &l1d, &l1u, &l2d, &l1}) CHECK(l->matrix.is_symmetric());
        CHECK(l2d.matrix.trace() == 3 * static_cast<std::int64_t>(f.size()));
        CHECK(l1u.matrix.trace() == 3 * static_cast<std::int64_t>(f.size()));
    }
}

TEST_CASE("Laplacian kind names") {
    CHECK(parse_laplacian_kind("L2down") == LaplacianKind::L2_down);
    CHECK(parse_laplacian_kind("L1") == LaplacianKind::L1_total);
    CHECK(parse_laplacian_kind("L0") == LaplacianKind::L0_up);
    CHECK(parse_laplacian_kind("L1up") == LaplacianKind::L1_up);
    CHECK(parse_laplacian_kind("L1down") == LaplacianKind::L1_down);
    CHECK(parse_laplacian_kind(to_string(LaplacianKind::L2_down)) == LaplacianKind::L2_down);
    CHECK_THROWS_AS(parse_laplacian_kind("L3"), std::invalid_argument);
}

TEST_CASE("exact rank agrees with the GMP path") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 7) - 3;
        // Force a dependent row now and then.
        if (r > 2 && trial % 3 == 0)
            for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) - 2 * m(1, j);
        CHECK(exact_rank(m) == exact_rank_bigint(m));
    }
}

TEST_CASE("exact rank escalates on overflow") {
    // Hilbert-like integer matrix with huge entries: minors exceed 64 bits.
    const std::size_t n = 8;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = (std::int64_t{1} << 40) / static_cast<std::int64_t>(i + j + 1);
    CHECK(exact_rank(m) == exact_rank_bigint(m));
    CHECK(exact_rank(m) == n);

    IntMatrix singular(3, 3);
    const std::int64_t big = std::int64_t{1} << 61;
    singular(0, 0) = big;
    singular(0, 1) = big - 1;
    singular(1, 0) = big - 1;
    singular(1, 1) = big - 2;
    CHECK(exact_rank(singular) == 2);
}

TEST_CASE("rank of zero and block matrices") {
    CHECK(exact_rank(IntMatrix(3, 4)) == 0);
    CHECK(exact_rank(IntMatrix()) == 0);
    IntMatrix m(4, 4);
    m(0, 0) = 2;
    m(1, 1) = 3;
    m(2, 3) = 1;
    m(3, 3) = 5;
    CHECK(exact_rank(m) == 3);
    CHECK(exact_rank_bigint(m) == 3);
}

TEST_CASE("MatrixMarket round trip") {
    const auto f = complete_family(5);
    const auto l = build_laplacian(LaplacianKind::L2_down, f);
    std::stringstream buf;
    write_matrix_market(buf, l.matrix, "L2down of kn:5");
    const auto text = buf.str();
    CHECK(text.rfind("%%MatrixMarket matrix coordinate integer general\n", 0) == 0);
    CHECK(text.find("% L2down of kn:5") != std::string::npos);
    CHECK(read_matrix_market(buf) == l.matrix);
}

TEST_CASE("MatrixMarket rejects bad input") {
    std::istringstream no_banner("3 3 0\n");
    CHECK_THROWS(read_matrix_market(no_banner));
    std::istringstream out_of_range("%%MatrixMarket matrix coordinate integer general\n2 2 1\n3 1 5\n");
    CHECK_THROWS(read_matrix_market(out_of_range));
}
