#include "trispec/incidence.hpp"

#include <stdexcept>
#include <string>

namespace trispec {

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const {
    for (auto v : data_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

std::int64_t IntMatrix::trace() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
}

std::size_t IntMatrix::nonzeros() const {
    std::size_t n = 0;
    for (auto v : data_) n += (v != 0);
    return n;
}

std::vector<double> IntMatrix::to_double() const {
    return {data_.begin(), data_.end()};
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

std::vector<std::int64_t> operator*(const IntMatrix& a, std::span<const std::int64_t> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<std::int64_t> out(a.rows(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

IntMatrix stack_rows(const IntMatrix& top, const IntMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack_rows: column mismatch");
    IntMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out(top.rows() + r, c) = bottom(r, c);
    return out;
}

VertexEdgeIncidence build_delta0(const SupportGraph& graph) {
    VertexEdgeIncidence d0;
    d0.rows.assign(graph.edges().begin(), graph.edges().end());
    d0.cols.assign(graph.vertices().begin(), graph.vertices().end());
    d0.entries = IntMatrix(d0.rows.size(), d0.cols.size());
    for (std::size_t r = 0; r < d0.rows.size(); ++r) {
        const Edge& e = d0.rows[r];
        d0.entries(r, *graph.vertex_index(e.lo())) = sign_edge_vertex(e, e.lo());
        d0.entries(r, *graph.vertex_index(e.hi())) = sign_edge_vertex(e, e.hi());
    }
    return d0;
}

EdgeTriangleIncidence build_delta1(const TriangleFamily& family, const SupportGraph& graph) {
    EdgeTriangleIncidence d1;
    d1.rows.assign(family.begin(), family.end());
    d1.cols.assign(graph.edges().begin(), graph.edges().end());
    d1.entries = IntMatrix(d1.rows.size(), d1.cols.size());
    for (std::size_t r = 0; r < d1.rows.size(); ++r) {
        const Triangle& t = d1.rows[r];
        for (const auto& e : t.edges()) {
            const auto col = graph.edge_index(e);
            if (!col) throw std::logic_error("support graph does not contain an edge of the family");
            d1.entries(r, *col) = sign_triangle_edge(t, e);
        }
    }
    return d1;
}

std::string_view to_string(LaplacianKind kind) {
    switch (kind) {
        case LaplacianKind::L0_up: return "L0_up";
        case LaplacianKind::L1_down: return "L1_down";
        case LaplacianKind::L1_up: return "L1_up";
        case LaplacianKind::L2_down: return "L2_down";
        case LaplacianKind::L1_total: return "L1_total";
    }
    return "?";
}

LaplacianKind parse_laplacian_kind(std::string_view name) {
    if (name == "L0_up" || name == "L0") return LaplacianKind::L0_up;
    if (name == "L1_down" || name == "L1down") return LaplacianKind::L1_down;
    if (name == "L1_up" || name == "L1up") return LaplacianKind::L1_up;
    if (name == "L2_down" || name == "L2down") return LaplacianKind::L2_down;
    if (name == "L1_total" || name == "L1") return LaplacianKind::L1_total;
    throw std::invalid_argument("unknown Laplacian kind: " + std::string(name));
}

Laplacian build_laplacian(LaplacianKind kind, const VertexEdgeIncidence& d0, const EdgeTriangleIncidence& d1) {
    IntMatrix factor;
    switch (kind) {
        case LaplacianKind::L0_up: factor = d0.entries; break;
        case LaplacianKind::L1_down: factor = d0.entries.transpose(); break;
        case LaplacianKind::L1_up: factor = d1.entries; break;
        case LaplacianKind::L2_down: factor = d1.entries.transpose(); break;
        case LaplacianKind::L1_total: factor = stack_rows(d0.entries.transpose(), d1.entries); break;
    }
    IntMatrix gram = factor.transpose() * factor;
    return Laplacian{kind, std::move(gram), std::move(factor)};
}

Laplacian build_laplacian(LaplacianKind kind, const TriangleFamily& family) {
    const auto g = support_graph(family);
    return build_laplacian(kind, build_delta0(g), build_delta1(family, g));
}

}  // namespace trispec
