#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "trispec/family.hpp"
#include "trispec/incidence.hpp"

namespace trispec {

class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    [[nodiscard]] double residual() const { return residual_; }

private:
    double residual_;
};

struct JacobiOptions {
    double tolerance = 1e-12;
    int max_sweeps = 100;
    double symmetry_tolerance = 1e-12;
};

/// All eigenvalues of the symmetric n x n row-major matrix, ascending.
/// Cyclic Jacobi rotations with a fixed (p, q) sweep order; stops once the
/// off-diagonal Frobenius norm drops below tolerance * (1 + |diag|).
std::vector<double> eigenvalues_symmetric(std::span<const double> matrix, std::size_t n,
                                          const JacobiOptions& options = {});
std::vector<double> eigenvalues_symmetric(const IntMatrix& m, const JacobiOptions& options = {});

/// Threshold used only to sanity-check the exact nullity against the spectrum.
inline double zero_band(double lambda_max) { return 1e-7 * (1.0 + lambda_max); }

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    std::size_t nullity = 0;          // exact: dim - rank(factor)
    std::size_t source_dim = 0;

    [[nodiscard]] std::size_t rank() const { return source_dim - nullity; }
};

/// Eigenvalues plus exact kernel dimension. Throws NumericalError if the
/// numerical spectrum contradicts the exact nullity or is not PSD.
Spectrum laplacian_spectrum(const Laplacian& laplacian);

/// Smallest positive eigenvalue: the entry at index `nullity` of the spectrum.
/// Throws NumericalError("no positive eigenvalue") for a zero matrix.
double lambda_min_plus(const Laplacian& laplacian);
double lambda_min_plus(const Spectrum& spectrum);

/// lambda(T) from whichever of L1_up and L2_down is smaller.
double lambda_of(const TriangleFamily& family);
/// lambda(T) from a specific matrix; `kind` must be L1_up or L2_down.
double lambda_of(const TriangleFamily& family, LaplacianKind kind);

struct SpectralReport {
    double lambda = 0.0;
    std::optional<double> tau;  // second smallest positive eigenvalue, when rank > 1
    std::size_t nullity = 0;
    Spectrum full_spectrum;
    LaplacianKind spectrum_source = LaplacianKind::L2_down;
    double lambda_min_plus_L0 = 0.0;
    double lambda_min_plus_L1_total = 0.0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t triangle_count = 0;
};

SpectralReport spectral_report(const TriangleFamily& family);

struct MinGapCheck {
    bool pass = false;
    double total_gap = 0.0;   // lambda_min^+(L1_total)
    double graph_gap = 0.0;   // lambda_min^+(L0)
    double lambda = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
};

/// Compares lambda_min^+(L1) against min(lambda_min^+(L0), lambda) with
/// tolerance 1e-7 * max(1, lambda).
MinGapCheck verify_min_gap(const TriangleFamily& family);
MinGapCheck verify_min_gap(const SpectralReport& report);

}  // namespace trispec
