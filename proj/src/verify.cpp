#include "trispec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "trispec/constructions.hpp"
#include "trispec/extremal.hpp"
#include "trispec/incidence.hpp"
#include "trispec/spectra.hpp"

namespace trispec {

RandomFamilies::RandomFamilies(std::uint64_t seed, int min_vertices, int max_vertices)
    : rng_(seed), min_vertices_(min_vertices), max_vertices_(max_vertices) {
    if (min_vertices < 3 || max_vertices < min_vertices || max_vertices > 64)
        throw std::invalid_argument("RandomFamilies: need 3 <= min_vertices <= max_vertices <= 64");
}

std::uint64_t RandomFamilies::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("RandomFamilies::below(0)");
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return x % n;
}

TriangleFamily RandomFamilies::next() {
    const int v = min_vertices_ + static_cast<int>(below(static_cast<std::uint64_t>(max_vertices_ - min_vertices_ + 1)));
    std::vector<Triangle> all;
    for (int a = 0; a < v; ++a)
        for (int b = a + 1; b < v; ++b)
            for (int c = b + 1; c < v; ++c) all.emplace_back(a, b, c);
    const auto t = 1 + below(all.size());
    for (std::size_t i = 0; i < t; ++i) std::swap(all[i], all[i + below(all.size() - i)]);
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(t), all.end());
    return TriangleFamily(std::move(all));
}

std::vector<TriangleFamily> random_families(std::size_t count, std::uint64_t seed) {
    RandomFamilies gen(seed);
    std::vector<TriangleFamily> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
    return out;
}

bool VerifyReport::pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::vector<std::pair<std::string, TriangleFamily>> construction_corpus(const VerifyOptions& o) {
    std::vector<std::pair<std::string, TriangleFamily>> out;
    for (int n = 3; n <= 8; ++n) out.emplace_back("kn:" + std::to_string(n), complete_family(n));
    const std::vector<TriangleFamily> intro = {
        TriangleFamily{{1, 2, 3}},
        TriangleFamily{{1, 2, 3}, {1, 2, 4}},
        TriangleFamily{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}},
        TriangleFamily{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 3, 4}},
    };
    for (std::size_t k = 0; k < intro.size(); ++k) out.emplace_back("intro:" + std::to_string(k + 1), intro[k]);
    for (int c = o.c_min; c <= o.c_max; ++c)
        for (int b = o.b_min; b <= o.b_max; ++b)
            out.emplace_back("gcb:" + std::to_string(c) + "," + std::to_string(b), gcb_family({c, b}));
    return out;
}

namespace {

constexpr double kSpectrumTol = 1e-8;
constexpr double kClusterRadius = 1e-6;

std::vector<std::pair<std::string, TriangleFamily>> audit_families(const VerifyOptions& o) {
    auto out = construction_corpus(o);
    if (o.random_count > 0) {
        if (!o.seed) throw std::invalid_argument("--random requires --seed");
        const auto rand = random_families(o.random_count, *o.seed);
        for (std::size_t i = 0; i < rand.size(); ++i)
            out.emplace_back("random:" + std::to_string(*o.seed) + "#" + std::to_string(i), rand[i]);
    }
    return out;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
}

std::vector<double> positive_part(const Spectrum& s) {
    return {s.eigenvalues.begin() + static_cast<std::ptrdiff_t>(s.nullity), s.eigenvalues.end()};
}

void run_overlap(const VerifyOptions& o, VerifyReport& r) {
    for (const auto& [name, f] : audit_families(o)) {
        const auto cert = check_overlap(f);
        std::ostringstream d;
        d << "n=" << cert.n << " d_e>=" << cert.min_edge_codegree << " common>=" << cert.min_common_neighbors
          << " d_min=" << cert.min_degree << " vertex_triangles>=" << cert.min_vertex_triangles
          << " |V|=" << cert.vertex_count << (cert.lambda_near_integer ? " lambda~integer" : "");
        r.checks.push_back({"overlap", name, cert.pass, 0.0, d.str()});
    }
}

void run_counting(const VerifyOptions& o, VerifyReport& r) {
    for (const auto& [name, f] : audit_families(o)) {
        const auto cert = check_counting(f);
        std::ostringstream d;
        if (!cert.applicable) {
            d << "not applicable (lambda=" << fmt(cert.lambda) << " <= 2)";
        } else {
            d << "v=" << cert.v << " e=" << cert.e << " t=" << cert.t << " n=" << cert.n
              << " 2e/(n-1)=" << fmt(cert.vertex_bound_by_edges) << " 3t/(n-2)=" << fmt(cert.edge_bound)
              << " 6t/((n-1)(n-2))=" << fmt(cert.vertex_bound_by_triangles);
        }
        r.checks.push_back({"counting", name, cert.pass, 0.0, d.str()});
    }
}

void run_mingap(const VerifyOptions& o, VerifyReport& r) {
    for (const auto& [name, f] : audit_families(o)) {
        const auto c = verify_min_gap(f);
        r.checks.push_back({"mingap", name, c.pass, c.residual,
                            "L1=" + fmt(c.total_gap) + " L0=" + fmt(c.graph_gap) + " lambda=" + fmt(c.lambda)});
    }
}

void run_hodge(const VerifyOptions& o, VerifyReport& r) {
    for (const auto& [name, f] : audit_families(o)) r.checks.push_back(check_hodge(name, f));
}

void run_gcb(const VerifyOptions& o, VerifyReport& r) {
    for (int c = o.c_min; c <= o.c_max; ++c)
        for (int b = o.b_min; b <= o.b_max; ++b) {
            r.checks.push_back(check_gcb_spectrum(c, b));
            r.checks.push_back(check_gcb_eigenvectors(c, b));
        }
}

void rigidity_check(VerifyReport& r, const std::string& name, int n, const TriangleFamily& f) {
    const auto v = check_rigidity(n, f);
    r.checks.push_back({"rigidity", name + " n=" + std::to_string(n) + " " + to_string(v.branch), v.pass, 0.0, v.detail});
}

void run_rigidity(const VerifyOptions& o, VerifyReport& r) {
    for (int n = 3; n <= 8; ++n) rigidity_check(r, "kn:" + std::to_string(n), n, complete_family(n));

    // Every 9-triangle subfamily of K_5.
    const auto k5 = complete_family(5);
    for (std::size_t skip = 0; skip < k5.size(); ++skip) {
        std::vector<Triangle> tris;
        for (std::size_t i = 0; i < k5.size(); ++i)
            if (i != skip) tris.push_back(k5[i]);
        rigidity_check(r, "kn:5-minus-" + std::to_string(skip), 5, TriangleFamily(std::move(tris)));
    }

    // The first 20 triples of K_7 in lexicographic order: C(6,3) triangles, not a clique.
    const auto k7 = complete_family(7);
    rigidity_check(r, "kn:7-prefix-20", 6, TriangleFamily(std::vector<Triangle>(k7.begin(), k7.begin() + 20)));

    for (const auto& [name, f] : audit_families(o)) {
        const int n = lambda_staircase(static_cast<std::int64_t>(f.size())) + 1;
        rigidity_check(r, name, n, f);
    }
}

}  // namespace

CheckResult check_hodge(const std::string& name, const TriangleFamily& family) {
    const auto g = support_graph(family);
    const auto d0 = build_delta0(g);
    const auto d1 = build_delta1(family, g);
    const auto product = d1.entries * d0.entries;
    const bool chain = product.is_zero();

    const auto r0 = exact_rank(d0.entries);
    const auto r1 = exact_rank(d1.entries);
    const auto stacked = stack_rows(d0.entries.transpose(), d1.entries);
    const auto harmonic = g.edge_count() - exact_rank(stacked);
    const bool hodge = r0 + r1 + harmonic == g.edge_count();

    const auto up = positive_part(laplacian_spectrum(build_laplacian(LaplacianKind::L1_up, d0, d1)));
    const auto down = positive_part(laplacian_spectrum(build_laplacian(LaplacianKind::L2_down, d0, d1)));
    double residual = up.size() == down.size() ? 0.0 : INFINITY;
    if (up.size() == down.size())
        for (std::size_t i = 0; i < up.size(); ++i) residual = std::max(residual, std::abs(up[i] - down[i]));
    const bool spectra = residual <= kSpectrumTol;

    std::ostringstream d;
    d << "d1*d0=0:" << (chain ? "yes" : "no") << " rank(d0)=" << r0 << " rank(d1)=" << r1 << " harmonic=" << harmonic
      << " |E|=" << g.edge_count() << " nonzero spectra " << up.size() << "/" << down.size();
    return {"hodge", name, chain && hodge && spectra, residual, d.str()};
}

CheckResult check_gcb_spectrum(int c, int b) {
    const GcbSpec spec{c, b};
    const auto spectrum = laplacian_spectrum(build_laplacian(LaplacianKind::L2_down, gcb_family(spec)));
    const auto expected = gcb_closed_form_spectrum(spec);
    const auto& ev = spectrum.eigenvalues;

    // Cluster sorted eigenvalues whose neighbours lie within the radius.
    std::vector<SpectrumRow> clusters;
    std::vector<double> sums;
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (i == 0 || ev[i] - ev[i - 1] > kClusterRadius) {
            clusters.push_back({ev[i], 0});
            sums.push_back(0.0);
        }
        ++clusters.back().multiplicity;
        sums.back() += ev[i];
    }
    double residual = 0.0;
    bool pass = clusters.size() == expected.size();
    for (std::size_t k = 0; pass && k < clusters.size(); ++k) {
        const double mean = sums[k] / static_cast<double>(clusters[k].multiplicity);
        residual = std::max(residual, std::abs(mean - expected[k].eigenvalue));
        pass = clusters[k].multiplicity == expected[k].multiplicity;
    }
    for (double x : ev) {
        double nearest = INFINITY;
        for (const auto& row : expected) nearest = std::min(nearest, std::abs(x - row.eigenvalue));
        residual = std::max(residual, nearest);
    }
    pass = pass && residual <= kSpectrumTol && spectrum.nullity == static_cast<std::size_t>(expected.front().multiplicity);

    std::ostringstream d;
    for (const auto& cl : clusters) d << fmt(cl.eigenvalue) << "^" << cl.multiplicity << " ";
    d << "expected";
    for (const auto& row : expected) d << " " << row.eigenvalue << "^" << row.multiplicity;
    return {"gcb", "spectrum gcb:" + std::to_string(c) + "," + std::to_string(b), pass, residual, d.str()};
}

CheckResult check_gcb_eigenvectors(int c, int b) {
    const GcbSpec spec{c, b};
    const auto family = gcb_family(spec);
    const auto down = build_laplacian(LaplacianKind::L2_down, family);
    const auto up = build_laplacian(LaplacianKind::L1_up, family);

    bool exact = true;
    std::vector<RationalVector> vs;
    for (int x = 2; b >= 2 && x <= c; ++x)
        for (int y = c + 1; y <= b + c - 1; ++y) {
            vs.push_back(eigvec_c(spec, x, y));
            exact = exact && is_exact_eigenvector(down.matrix, vs.back(), c);
        }
    std::vector<RationalVector> ws;
    for (int x = 1; x <= c; ++x)
        for (int y = x + 1; y <= c; ++y) {
            ws.push_back(eigvec_bc(spec, x, y));
            exact = exact && is_exact_eigenvector(up.matrix, ws.back(), b + c);
        }

    auto rank_of = [](const std::vector<RationalVector>& vecs) -> std::size_t {
        if (vecs.empty()) return 0;
        IntMatrix m(vecs.size(), vecs.front().numerators.size());
        for (std::size_t i = 0; i < vecs.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = vecs[i].numerators[j];
        return exact_rank(m);
    };
    const auto rv = rank_of(vs);
    const auto rw = rank_of(ws);
    const auto want_v = static_cast<std::size_t>((b - 1) * (c - 1));
    const auto want_w = static_cast<std::size_t>(choose2(c));
    std::ostringstream d;
    d << "residuals " << (exact ? "all zero" : "NONZERO") << "; rank v=" << rv << "/" << want_v << " rank w=" << rw
      << "/" << want_w;
    return {"gcb", "eigenvectors gcb:" + std::to_string(c) + "," + std::to_string(b),
            exact && rv == want_v && rw == want_w, exact ? 0.0 : 1.0, d.str()};
}

bool is_suite(const std::string& name) {
    for (const char* s : {"hodge", "overlap", "counting", "rigidity", "gcb", "mingap", "all"})
        if (name == s) return true;
    return false;
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& options) {
    if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
    if (options.random_count > 0 && !options.seed) throw std::invalid_argument("--random requires --seed");
    if (options.c_min < 3 || options.c_max < options.c_min || options.b_min < 1 || options.b_max < options.b_min)
        throw std::invalid_argument("need 3 <= c_min <= c_max and 1 <= b_min <= b_max");

    VerifyReport r;
    const std::vector<std::pair<std::string, std::function<void(const VerifyOptions&, VerifyReport&)>>> suites = {
        {"hodge", run_hodge},       {"overlap", run_overlap}, {"counting", run_counting},
        {"rigidity", run_rigidity}, {"gcb", run_gcb},         {"mingap", run_mingap},
    };
    for (const auto& [suite, fn] : suites)
        if (name == "all" || name == suite) fn(options, r);
    return r;
}

}  // namespace trispec
