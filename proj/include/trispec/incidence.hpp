#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "trispec/family.hpp"

namespace trispec {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    [[nodiscard]] std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    [[nodiscard]] std::span<const std::int64_t> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<const std::int64_t> data() const { return data_; }

    [[nodiscard]] IntMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_symmetric() const;
    [[nodiscard]] std::int64_t trace() const;
    [[nodiscard]] std::size_t nonzeros() const;
    [[nodiscard]] std::vector<double> to_double() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> operator*(const IntMatrix& a, std::span<const std::int64_t> x);
/// Rows of `top` followed by rows of `bottom`.
IntMatrix stack_rows(const IntMatrix& top, const IntMatrix& bottom);

/// Signed incidence matrix with its row and column simplices in lexicographic order.
template <typename RowSimplex, typename ColSimplex>
struct SignedIncidence {
    std::vector<RowSimplex> rows;
    std::vector<ColSimplex> cols;
    IntMatrix entries;
};

using VertexEdgeIncidence = SignedIncidence<Edge, Vertex>;       // delta_0: |E| x |V|
using EdgeTriangleIncidence = SignedIncidence<Triangle, Edge>;   // delta_1: |T| x |E|

VertexEdgeIncidence build_delta0(const SupportGraph& graph);
/// Throws std::logic_error if a triangle edge is missing from `graph`.
EdgeTriangleIncidence build_delta1(const TriangleFamily& family, const SupportGraph& graph);

enum class LaplacianKind { L0_up, L1_down, L1_up, L2_down, L1_total };

std::string_view to_string(LaplacianKind kind);
/// Accepts the enum names and the short export names (L0, L1down, L1up, L2down, L1).
LaplacianKind parse_laplacian_kind(std::string_view name);

/// A Gram matrix `matrix` = factor^T * factor, kept together with its factor
/// so the kernel dimension can be read off an exact rank.
struct Laplacian {
    LaplacianKind kind;
    IntMatrix matrix;
    IntMatrix factor;
};

Laplacian build_laplacian(LaplacianKind kind, const TriangleFamily& family);
Laplacian build_laplacian(LaplacianKind kind, const VertexEdgeIncidence& d0, const EdgeTriangleIncidence& d1);

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// 64-bit arithmetic and restarts with GMP integers if an entry overflows.
std::size_t exact_rank(const IntMatrix& m);
/// Same elimination, always in GMP integers.
std::size_t exact_rank_bigint(const IntMatrix& m);

}  // namespace trispec
