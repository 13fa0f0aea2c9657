#include "trispec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace trispec {

namespace {

void jacobi_in_place(std::vector<double>& a, std::size_t n, const JacobiOptions& options) {
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };
    auto diag_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += at(i, i) * at(i, i);
        return std::sqrt(s);
    };

    int sweep = 0;
    double off = off_norm();
    while (off >= options.tolerance * (1.0 + diag_norm())) {
        if (sweep == options.max_sweeps)
            throw NumericalError("Jacobi did not converge after " + std::to_string(sweep) + " sweeps", off);
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double app = at(p, p);
                const double aqq = at(q, q);
                // After a few sweeps, an entry below the last bit of both diagonal entries is dropped.
                const double g = 100.0 * std::abs(apq);
                if (sweep > 4 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
                    at(p, q) = at(q, p) = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = std::abs(theta) > 1e150
                                     ? 0.5 / theta
                                     : (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                double* rowp = &a[p * n];
                double* rowq = &a[q * n];
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = rowp[r];
                    const double arq = rowq[r];
                    const double np = arp - s * (arq + tau * arp);
                    const double nq = arq + s * (arp - tau * arq);
                    rowp[r] = np;
                    rowq[r] = nq;
                    a[r * n + p] = np;
                    a[r * n + q] = nq;
                }
            }
        }
        off = off_norm();
    }
}

// Index sets of the connected components of the nonzero pattern.
std::vector<std::vector<std::size_t>> diagonal_blocks(std::span<const double> m, std::size_t n) {
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i * n + j] != 0.0 || m[j * n + i] != 0.0) parent[find(i)] = find(j);
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> block_of(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = find(i);
        if (block_of[r] == n) {
            block_of[r] = blocks.size();
            blocks.emplace_back();
        }
        blocks[block_of[r]].push_back(i);
    }
    return blocks;
}

}  // namespace

std::vector<double> eigenvalues_symmetric(std::span<const double> matrix, std::size_t n,
                                          const JacobiOptions& options) {
    if (matrix.size() != n * n) throw std::invalid_argument("eigenvalues_symmetric: size mismatch");
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            asym = std::max(asym, std::abs(matrix[i * n + j] - matrix[j * n + i]));
    if (asym >= options.symmetry_tolerance) throw NumericalError("matrix is not symmetric", asym);

    std::vector<double> eig;
    eig.reserve(n);
    for (const auto& block : diagonal_blocks(matrix, n)) {
        const std::size_t k = block.size();
        std::vector<double> a(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) a[i * k + j] = matrix[block[i] * n + block[j]];
        jacobi_in_place(a, k, options);
        for (std::size_t i = 0; i < k; ++i) eig.push_back(a[i * k + i]);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> eigenvalues_symmetric(const IntMatrix& m, const JacobiOptions& options) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenvalues_symmetric: matrix is not square");
    const auto values = m.to_double();
    return eigenvalues_symmetric(values, m.rows(), options);
}

Spectrum laplacian_spectrum(const Laplacian& laplacian) {
    Spectrum s;
    s.source_dim = laplacian.matrix.rows();
    s.eigenvalues = eigenvalues_symmetric(laplacian.matrix);
    const std::size_t rank = exact_rank(laplacian.factor);
    if (rank > s.source_dim) throw std::logic_error("factor rank exceeds matrix dimension");
    s.nullity = s.source_dim - rank;

    if (s.eigenvalues.empty()) return s;
    const double top = s.eigenvalues.back();
    const double band = zero_band(std::abs(top));
    if (s.eigenvalues.front() < -1e-9 * (1.0 + std::abs(top)))
        throw NumericalError("Laplacian spectrum is not positive semidefinite", s.eigenvalues.front());
    for (std::size_t i = 0; i < s.nullity; ++i)
        if (std::abs(s.eigenvalues[i]) >= band) {
            std::ostringstream msg;
            msg << to_string(laplacian.kind) << ": kernel eigenvalue " << s.eigenvalues[i]
                << " outside zero band " << band;
            throw NumericalError(msg.str(), s.eigenvalues[i]);
        }
    if (s.nullity < s.source_dim && s.eigenvalues[s.nullity] <= band) {
        std::ostringstream msg;
        msg << to_string(laplacian.kind) << ": smallest positive eigenvalue " << s.eigenvalues[s.nullity]
            << " inside zero band " << band;
        throw NumericalError(msg.str(), s.eigenvalues[s.nullity]);
    }
    return s;
}

double lambda_min_plus(const Spectrum& spectrum) {
    if (spectrum.nullity >= spectrum.source_dim) throw NumericalError("no positive eigenvalue");
    return spectrum.eigenvalues[spectrum.nullity];
}

double lambda_min_plus(const Laplacian& laplacian) {
    return lambda_min_plus(laplacian_spectrum(laplacian));
}

double lambda_of(const TriangleFamily& family, LaplacianKind kind) {
    if (kind != LaplacianKind::L1_up && kind != LaplacianKind::L2_down)
        throw std::invalid_argument("lambda is defined through L1_up or L2_down");
    return lambda_min_plus(build_laplacian(kind, family));
}

double lambda_of(const TriangleFamily& family) {
    const auto g = support_graph(family);
    const auto kind = g.edge_count() < family.size() ? LaplacianKind::L1_up : LaplacianKind::L2_down;
    return lambda_min_plus(build_laplacian(kind, build_delta0(g), build_delta1(family, g)));
}

SpectralReport spectral_report(const TriangleFamily& family) {
    const auto g = support_graph(family);
    const auto d0 = build_delta0(g);
    const auto d1 = build_delta1(family, g);

    SpectralReport report;
    report.vertex_count = g.vertex_count();
    report.edge_count = g.edge_count();
    report.triangle_count = family.size();
    report.spectrum_source = g.edge_count() < family.size() ? LaplacianKind::L1_up : LaplacianKind::L2_down;

    report.full_spectrum = laplacian_spectrum(build_laplacian(report.spectrum_source, d0, d1));
    report.nullity = report.full_spectrum.nullity;
    report.lambda = lambda_min_plus(report.full_spectrum);
    if (report.full_spectrum.rank() > 1) report.tau = report.full_spectrum.eigenvalues[report.nullity + 1];

    report.lambda_min_plus_L0 = lambda_min_plus(build_laplacian(LaplacianKind::L0_up, d0, d1));
    report.lambda_min_plus_L1_total = lambda_min_plus(build_laplacian(LaplacianKind::L1_total, d0, d1));
    return report;
}

MinGapCheck verify_min_gap(const SpectralReport& report) {
    MinGapCheck check;
    check.total_gap = report.lambda_min_plus_L1_total;
    check.graph_gap = report.lambda_min_plus_L0;
    check.lambda = report.lambda;
    check.residual = std::abs(check.total_gap - std::min(check.graph_gap, check.lambda));
    check.tolerance = 1e-7 * std::max(1.0, check.lambda);
    check.pass = check.residual <= check.tolerance;
    return check;
}

MinGapCheck verify_min_gap(const TriangleFamily& family) {
    return verify_min_gap(spectral_report(family));
}

}  // namespace trispec
