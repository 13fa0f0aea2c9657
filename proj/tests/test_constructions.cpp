#include <doctest.h>

#include "trispec/constructions.hpp"
#include "trispec/spectra.hpp"

using namespace trispec;
using doctest::Approx;

TEST_CASE("complete families") {
    CHECK(complete_family(3) == TriangleFamily{{1, 2, 3}});
    CHECK(complete_family(4).size() == 4);
    CHECK(complete_family(6).size() == 20);
    CHECK(lambda_of(complete_family(6)) == Approx(6.0).epsilon(1e-10));
    CHECK_THROWS_AS(complete_family(2), std::invalid_argument);
}

TEST_CASE("join family sizes") {
    CHECK(gcb_family({3, 1}) == complete_family(4));
    CHECK(gcb_family({3, 2}).size() == 7);
    CHECK(gcb_family({5, 3}).size() == 40);
    for (int c = 3; c <= 6; ++c)
        for (int b = 1; b <= 4; ++b) CHECK(static_cast<std::int64_t>(gcb_family({c, b}).size()) == gcb_size(c, b));
    CHECK_THROWS_AS(gcb_family({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(gcb_family({3, 0}), std::invalid_argument);
}

TEST_CASE("closed-form spectrum table") {
    using V = std::vector<SpectrumRow>;
    CHECK(gcb_closed_form_spectrum({3, 2}) == V{{0, 2}, {3, 2}, {5, 3}});
    CHECK(gcb_closed_form_spectrum({3, 1}) == V{{0, 1}, {4, 3}});
    CHECK(gcb_closed_form_spectrum({4, 3}) == V{{0, 10}, {4, 6}, {7, 6}});
    for (int c = 3; c <= 6; ++c)
        for (int b = 1; b <= 4; ++b) {
            std::int64_t total = 0;
            double trace = 0;
            for (const auto& row : gcb_closed_form_spectrum({c, b})) {
                total += row.multiplicity;
                trace += row.eigenvalue * static_cast<double>(row.multiplicity);
            }
            CHECK(total == gcb_size(c, b));
            CHECK(trace == Approx(3.0 * static_cast<double>(gcb_size(c, b))));
        }
}

TEST_CASE("explicit eigenvectors are exact") {
    for (int c = 3; c <= 5; ++c)
        for (int b = 1; b <= 3; ++b) {
            const GcbSpec spec{c, b};
            const auto fam = gcb_family(spec);
            const auto down = build_laplacian(LaplacianKind::L2_down, fam);
            const auto up = build_laplacian(LaplacianKind::L1_up, fam);
            for (int x = 2; b >= 2 && x <= c; ++x)
                for (int y = c + 1; y <= b + c - 1; ++y) {
                    const auto v = eigvec_c(spec, x, y);
                    CHECK(v.numerators.size() == fam.size());
                    CHECK(is_exact_eigenvector(down.matrix, v, c));
                    CHECK_FALSE(is_exact_eigenvector(down.matrix, v, c + 1));
                }
            for (int x = 1; x <= c; ++x)
                for (int y = x + 1; y <= c; ++y) {
                    const auto w = eigvec_bc(spec, x, y);
                    CHECK(w.denominator == b);
                    CHECK(is_exact_eigenvector(up.matrix, w, b + c));
                }
        }
}

TEST_CASE("eigenvector index checks") {
    CHECK_THROWS_AS(eigvec_c({4, 2}, 1, 5), std::out_of_range);
    CHECK_THROWS_AS(eigvec_c({4, 2}, 2, 6), std::out_of_range);
    CHECK_THROWS_AS(eigvec_c({4, 1}, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(eigvec_bc({4, 2}, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(eigvec_bc({4, 2}, 1, 5), std::out_of_range);
}

namespace {
bool brute_force_exists(int a, std::int64_t n) {
    const std::int64_t p = choose3(a) + choose3(a + 1) + choose3(a + 2);
    for (std::int64_t x = 1; x <= n; ++x)
        for (std::int64_t y = 1; p + x * choose2(a) + y * choose2(a + 1) < n; ++y) {
            const std::int64_t rest = n - p - x * choose2(a) - y * choose2(a + 1);
            if (rest > 0 && rest % choose2(a + 2) == 0) return true;
        }
    return false;
}
}  // namespace

TEST_CASE("Frobenius decomposition at the threshold") {
    CHECK(frobenius_threshold(3) == 73);
    CHECK(frobenius_threshold(4) == 161);
    const auto d = frobenius_decompose(3, 73);
    CHECK(d.reconstruct() == 73);
    CHECK(d.x >= 1);
    CHECK(d.y >= 1);
    CHECK(d.z >= 1);
    CHECK(brute_force_exists(3, 73));

    const auto d74 = frobenius_decompose(3, 74);
    CHECK(d74.reconstruct() == 74);
    CHECK(brute_force_exists(3, 74));

    const auto d161 = frobenius_decompose(4, 161);
    CHECK(d161.reconstruct() == 161);
    CHECK(brute_force_exists(4, 161));
}

TEST_CASE("Frobenius decomposition below the threshold") {
    CHECK_THROWS_WITH_AS(frobenius_decompose(3, 72), doctest::Contains("below Frobenius threshold"),
                         std::domain_error);
    CHECK_THROWS_AS(frobenius_decompose(2, 100), std::invalid_argument);
}

TEST_CASE("three-block family realises the budget") {
    for (std::int64_t n = 161; n < 200; ++n) {
        const auto d = frobenius_decompose(4, n);
        const auto fam = decomposition_family(d);
        CHECK(static_cast<std::int64_t>(fam.size()) == n);
        CHECK(support_graph(fam).component_count() == 3);
    }
}

TEST_CASE("growth family") {
    CHECK(cube_root_level(81) == 3);
    CHECK(cube_root_level(200) == 4);
    CHECK(cube_root_level(3000) == 10);
    CHECK(cube_root_level(80) == 2);
    const auto g = phi_lower_bound_family(81);
    CHECK(g.a == 3);
    CHECK(g.family.size() == 81);
    CHECK(lambda_of(g.family) >= 3.0 - 1e-8);
    const auto g200 = phi_lower_bound_family(200);
    CHECK(g200.family.size() == 200);
    CHECK(lambda_of(g200.family) >= 4.0 - 1e-8);
    CHECK_THROWS_AS(phi_lower_bound_family(80), std::invalid_argument);
}
