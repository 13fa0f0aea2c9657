#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "trispec/family.hpp"

namespace trispec {

/// ceil(lambda - 1e-9), so 5.000000001 maps to 5.
int guarded_ceiling(double lambda);
/// True when lambda lies within 1e-9 of an integer; certificates flag these.
bool near_integer(double lambda);

/// Local structure forced by lambda: with n = ceil(lambda), every support edge
/// lies in >= n-2 triangles and has >= n-2 common neighbours, every vertex
/// lies in >= n-2 triangles and has degree >= n-1, and there are >= n vertices.
struct OverlapCertificate {
    double lambda = 0.0;
    int n = 0;
    int min_edge_codegree = 0;
    int min_common_neighbors = 0;
    int min_degree = 0;
    int min_vertex_triangles = 0;
    int vertex_count = 0;
    bool lambda_near_integer = false;
    bool pass = false;
};

OverlapCertificate check_overlap(const TriangleFamily& family);
OverlapCertificate check_overlap(const TriangleFamily& family, double lambda);

/// v <= 2e/(n-1), e <= 3t/(n-2), v <= 6t/((n-1)(n-2)), checked in integers.
/// Only meaningful for lambda > 2; `applicable` is false otherwise.
struct CountingCertificate {
    std::int64_t v = 0, e = 0, t = 0;
    double lambda = 0.0;
    int n = 0;
    bool applicable = false;
    double vertex_bound_by_edges = 0.0;      // 2e/(n-1)
    double edge_bound = 0.0;                 // 3t/(n-2)
    double vertex_bound_by_triangles = 0.0;  // 6t/((n-1)(n-2))
    bool vertex_by_edges_holds = false;
    bool edges_hold = false;
    bool vertex_by_triangles_holds = false;
    bool lambda_near_integer = false;
    bool pass = false;  // true when not applicable
};

CountingCertificate check_counting(const TriangleFamily& family);
CountingCertificate check_counting(const TriangleFamily& family, double lambda);

enum class RigidityBranch {
    BelowThreshold,   // |F| < C(n,3): lambda <= n-1 asserted
    CliqueAtThreshold,// |F| = C(n,3) and lambda > n-1: lambda = n and support has n vertices
    AtThresholdLow,   // |F| = C(n,3) and lambda <= n-1: nothing to assert
    AboveThreshold,   // |F| > C(n,3): not covered
};

std::string to_string(RigidityBranch branch);

struct RigidityVerdict {
    int n = 0;
    RigidityBranch branch = RigidityBranch::AboveThreshold;
    double lambda = 0.0;
    bool pass = true;
    std::string detail;
};

RigidityVerdict check_rigidity(int n, const TriangleFamily& family);
RigidityVerdict check_rigidity(int n, const TriangleFamily& family, double lambda);

/// Budgets just above C(n,3) where phi <= n-1. `high < low` means empty.
struct ForbiddenInterval {
    int n = 0;
    std::int64_t m = 0;
    std::int64_t low = 0;
    std::int64_t high = 0;
    [[nodiscard]] bool empty() const { return high < low; }
    [[nodiscard]] bool contains(std::int64_t t) const { return low <= t && t <= high; }
};

/// m = max{m >= 1 : (3/2)(m-1)(m+2) < C(n-1,2)}; interval [C(n,3)+1, C(n,3)+C(m+1,2)-1].
ForbiddenInterval forbidden_interval(int n);

/// Lower bound n^2/6 - 5n/(2 sqrt 3) + 3 on the first offset above C(n,3) where phi exceeds n-1.
double first_passage_lower_bound(int n);
/// Upper bound C(n,2) on the same offset.
std::int64_t first_passage_upper_bound(int n);

/// max{n : C(n,3) <= t}; equals Lambda(t) for t >= 3. Requires t >= 1.
int lambda_staircase(std::int64_t t);

enum class WindowVerdict { NotApplicable, Pass, Fail };
std::string to_string(WindowVerdict verdict);

/// For n >= 9, C(n,3) < |F| < C(n+1,3) and lambda > n-1: n+1 <= |V| <= n+3.
WindowVerdict vertex_window_check(const TriangleFamily& family, int n);
WindowVerdict vertex_window_check(const TriangleFamily& family, int n, double lambda);

}  // namespace trispec
