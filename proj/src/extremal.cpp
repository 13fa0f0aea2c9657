#include "trispec/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "trispec/spectra.hpp"

namespace trispec {

namespace {
constexpr double kCeilGuard = 1e-9;
constexpr double kRigidityTol = 1e-8;
}  // namespace

int guarded_ceiling(double lambda) { return static_cast<int>(std::ceil(lambda - kCeilGuard)); }

bool near_integer(double lambda) { return std::abs(lambda - std::round(lambda)) <= kCeilGuard; }

OverlapCertificate check_overlap(const TriangleFamily& family) { return check_overlap(family, lambda_of(family)); }

OverlapCertificate check_overlap(const TriangleFamily& family, double lambda) {
    const auto g = support_graph(family);
    OverlapCertificate cert;
    cert.lambda = lambda;
    cert.n = guarded_ceiling(lambda);
    cert.lambda_near_integer = near_integer(lambda);
    cert.vertex_count = static_cast<int>(g.vertex_count());

    cert.min_edge_codegree = std::numeric_limits<int>::max();
    cert.min_common_neighbors = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        cert.min_edge_codegree = std::min(cert.min_edge_codegree, g.edge_triangle_count(i));
        cert.min_common_neighbors = std::min(cert.min_common_neighbors, g.common_neighbors(i));
    }
    cert.min_degree = std::numeric_limits<int>::max();
    cert.min_vertex_triangles = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        cert.min_degree = std::min(cert.min_degree, g.degree(i));
        cert.min_vertex_triangles = std::min(cert.min_vertex_triangles, g.vertex_triangle_count(i));
    }

    const int n = cert.n;
    cert.pass = cert.min_edge_codegree >= n - 2 && cert.min_common_neighbors >= n - 2 &&
                cert.min_degree >= n - 1 && cert.min_vertex_triangles >= n - 2 && cert.vertex_count >= n;
    return cert;
}

CountingCertificate check_counting(const TriangleFamily& family) { return check_counting(family, lambda_of(family)); }

CountingCertificate check_counting(const TriangleFamily& family, double lambda) {
    const auto g = support_graph(family);
    CountingCertificate cert;
    cert.v = static_cast<std::int64_t>(g.vertex_count());
    cert.e = static_cast<std::int64_t>(g.edge_count());
    cert.t = static_cast<std::int64_t>(family.size());
    cert.lambda = lambda;
    cert.n = guarded_ceiling(lambda);
    cert.lambda_near_integer = near_integer(lambda);
    cert.applicable = cert.n >= 3;
    if (!cert.applicable) {
        cert.pass = true;
        return cert;
    }
    const std::int64_t n = cert.n;
    cert.vertex_bound_by_edges = 2.0 * cert.e / (n - 1);
    cert.edge_bound = 3.0 * cert.t / (n - 2);
    cert.vertex_bound_by_triangles = 6.0 * cert.t / ((n - 1) * (n - 2));
    cert.vertex_by_edges_holds = cert.v * (n - 1) <= 2 * cert.e;
    cert.edges_hold = cert.e * (n - 2) <= 3 * cert.t;
    cert.vertex_by_triangles_holds = cert.v * (n - 1) * (n - 2) <= 6 * cert.t;
    cert.pass = cert.vertex_by_edges_holds && cert.edges_hold && cert.vertex_by_triangles_holds;
    return cert;
}

std::string to_string(RigidityBranch branch) {
    switch (branch) {
        case RigidityBranch::BelowThreshold: return "below_threshold";
        case RigidityBranch::CliqueAtThreshold: return "clique_at_threshold";
        case RigidityBranch::AtThresholdLow: return "at_threshold_low";
        case RigidityBranch::AboveThreshold: return "above_threshold";
    }
    return "?";
}

RigidityVerdict check_rigidity(int n, const TriangleFamily& family) {
    return check_rigidity(n, family, lambda_of(family));
}

RigidityVerdict check_rigidity(int n, const TriangleFamily& family, double lambda) {
    if (n < 3) throw std::invalid_argument("check_rigidity: n must be >= 3");
    RigidityVerdict v;
    v.n = n;
    v.lambda = lambda;
    const auto size = static_cast<std::int64_t>(family.size());
    const auto threshold = choose3(n);
    std::ostringstream detail;
    if (size < threshold) {
        v.branch = RigidityBranch::BelowThreshold;
        v.pass = lambda <= n - 1 + kRigidityTol;
        detail << "|F|=" << size << " < C(" << n << ",3)=" << threshold << ", lambda=" << lambda
               << (v.pass ? " <= " : " > ") << n - 1;
    } else if (size == threshold) {
        if (lambda > n - 1 + kRigidityTol) {
            v.branch = RigidityBranch::CliqueAtThreshold;
            const auto vertices = support_graph(family).vertex_count();
            const bool value_ok = std::abs(lambda - n) <= kRigidityTol;
            const bool clique_ok = static_cast<int>(vertices) == n;
            v.pass = value_ok && clique_ok;
            detail << "lambda=" << lambda << " > " << n - 1 << "; |V|=" << vertices
                   << (clique_ok ? " (complete)" : " (not complete)");
        } else {
            v.branch = RigidityBranch::AtThresholdLow;
            detail << "|F|=C(" << n << ",3) with lambda=" << lambda << " <= " << n - 1;
        }
    } else {
        v.branch = RigidityBranch::AboveThreshold;
        detail << "|F|=" << size << " > C(" << n << ",3)";
    }
    v.detail = detail.str();
    return v;
}

ForbiddenInterval forbidden_interval(int n) {
    if (n < 3) throw std::invalid_argument("forbidden_interval: n must be >= 3");
    const std::int64_t rhs = static_cast<std::int64_t>(n - 1) * (n - 2);  // 2 C(n-1,2)
    std::int64_t m = 1;
    while (3 * m * (m + 3) < rhs) ++m;  // 3 (m'-1)(m'+2) with m' = m+1
    ForbiddenInterval fi;
    fi.n = n;
    fi.m = m;
    fi.low = choose3(n) + 1;
    fi.high = choose3(n) + choose2(m + 1) - 1;
    return fi;
}

double first_passage_lower_bound(int n) {
    const double x = n;
    return x * x / 6.0 - 5.0 * x / (2.0 * std::sqrt(3.0)) + 3.0;
}

std::int64_t first_passage_upper_bound(int n) { return choose2(n); }

int lambda_staircase(std::int64_t t) {
    if (t < 1) throw std::invalid_argument("lambda_staircase: t must be >= 1");
    int n = 3;
    while (choose3(n + 1) <= t) ++n;
    return n;
}

std::string to_string(WindowVerdict verdict) {
    switch (verdict) {
        case WindowVerdict::NotApplicable: return "not_applicable";
        case WindowVerdict::Pass: return "pass";
        case WindowVerdict::Fail: return "fail";
    }
    return "?";
}

WindowVerdict vertex_window_check(const TriangleFamily& family, int n) {
    const auto size = static_cast<std::int64_t>(family.size());
    if (n < 9 || size <= choose3(n) || size >= choose3(n + 1)) return WindowVerdict::NotApplicable;
    return vertex_window_check(family, n, lambda_of(family));
}

WindowVerdict vertex_window_check(const TriangleFamily& family, int n, double lambda) {
    const auto size = static_cast<std::int64_t>(family.size());
    if (n < 9 || size <= choose3(n) || size >= choose3(n + 1)) return WindowVerdict::NotApplicable;
    if (guarded_ceiling(lambda) < n) return WindowVerdict::NotApplicable;
    const auto v = static_cast<int>(support_graph(family).vertex_count());
    return (n + 1 <= v && v <= n + 3) ? WindowVerdict::Pass : WindowVerdict::Fail;
}

}  // namespace trispec
