#pragma once

// Invariant suites run by `trispec verify`.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "trispec/family.hpp"

namespace trispec {

/// Deterministic sampler: the number of vertices is uniform on
/// [min_vertices, max_vertices], the number of triangles uniform on
/// [1, C(v,3)], and the triangles a uniform subset of the triples on {0..v-1}.
class RandomFamilies {
public:
    RandomFamilies(std::uint64_t seed, int min_vertices = 3, int max_vertices = 8);
    TriangleFamily next();
    /// Uniform on {0..n-1} by rejection sampling.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 rng_;
    int min_vertices_;
    int max_vertices_;
};

std::vector<TriangleFamily> random_families(std::size_t count, std::uint64_t seed);

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int c_min = 3, c_max = 5;
    int b_min = 1, b_max = 3;
    std::size_t random_count = 0;
    std::optional<std::uint64_t> seed;  // required when random_count > 0
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    [[nodiscard]] bool pass() const;
    [[nodiscard]] std::size_t failures() const;
};

/// Named families: kn:3..8, intro:1..4 and the T_{c,b} grid of `options`.
std::vector<std::pair<std::string, TriangleFamily>> construction_corpus(const VerifyOptions& options);

/// Suite names: hodge, overlap, counting, rigidity, gcb, mingap, all.
bool is_suite(const std::string& name);
/// Throws std::invalid_argument for an unknown suite, or for random_count > 0 without a seed.
VerifyReport run_suite(const std::string& name, const VerifyOptions& options);

CheckResult check_hodge(const std::string& name, const TriangleFamily& family);
CheckResult check_gcb_spectrum(int c, int b);
CheckResult check_gcb_eigenvectors(int c, int b);

}  // namespace trispec
