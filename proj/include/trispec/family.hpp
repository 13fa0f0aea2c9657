#pragma once

// Triangle families, their support graphs, and the boundary sign rules.
//
// Vertices are non-negative integers ordered by value. Triangles and edges
// store their vertices sorted ascending, and a TriangleFamily keeps its
// triangles sorted lexicographically without duplicates, so two families
// compare equal exactly when they contain the same triangles.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trispec {

using Vertex = std::uint32_t;

class Edge {
public:
    Edge(Vertex x, Vertex y);

    [[nodiscard]] Vertex lo() const { return v_[0]; }
    [[nodiscard]] Vertex hi() const { return v_[1]; }
    [[nodiscard]] bool contains(Vertex x) const { return x == v_[0] || x == v_[1]; }

    auto operator<=>(const Edge&) const = default;

private:
    std::array<Vertex, 2> v_;
};

class Triangle {
public:
    Triangle(Vertex a, Vertex b, Vertex c);

    [[nodiscard]] const std::array<Vertex, 3>& vertices() const { return v_; }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return v_[i]; }
    [[nodiscard]] bool contains(Vertex x) const { return x == v_[0] || x == v_[1] || x == v_[2]; }
    [[nodiscard]] bool contains(const Edge& e) const { return contains(e.lo()) && contains(e.hi()); }

    /// The three edges in lexicographic order: {a,b}, {a,c}, {b,c}.
    [[nodiscard]] std::array<Edge, 3> edges() const;

    auto operator<=>(const Triangle&) const = default;

private:
    std::array<Vertex, 3> v_;
};

std::ostream& operator<<(std::ostream& os, const Edge& e);
std::ostream& operator<<(std::ostream& os, const Triangle& t);

/// [T:e]. Zero unless e is an edge of T; +1 when the vertex of T missing
/// from e is the largest or smallest vertex of T, -1 when it is the middle one.
int sign_triangle_edge(const Triangle& t, const Edge& e);

/// [e:x]. +1 for the larger endpoint, -1 for the smaller, 0 otherwise.
int sign_edge_vertex(const Edge& e, Vertex x);

class TriangleFamily {
public:
    TriangleFamily() = default;
    /// Sorts and removes duplicates.
    explicit TriangleFamily(std::vector<Triangle> triangles);
    TriangleFamily(std::initializer_list<std::array<Vertex, 3>> triples);

    [[nodiscard]] std::size_t size() const { return triangles_.size(); }
    [[nodiscard]] bool empty() const { return triangles_.empty(); }
    [[nodiscard]] std::span<const Triangle> triangles() const { return triangles_; }
    [[nodiscard]] const Triangle& operator[](std::size_t i) const { return triangles_[i]; }
    [[nodiscard]] auto begin() const { return triangles_.begin(); }
    [[nodiscard]] auto end() const { return triangles_.end(); }

    /// Sorted distinct vertices covered by the family.
    [[nodiscard]] std::vector<Vertex> vertices() const;
    [[nodiscard]] std::optional<std::size_t> index_of(const Triangle& t) const;
    [[nodiscard]] bool contains(const Triangle& t) const { return index_of(t).has_value(); }

    /// Applies `relabel` (indexed by old label) to every vertex. The map must be
    /// injective on the vertices of the family.
    [[nodiscard]] TriangleFamily relabeled(std::span<const Vertex> relabel) const;

    bool operator==(const TriangleFamily&) const = default;

private:
    std::vector<Triangle> triangles_;
};

/// Order-preserving relabel of `second` onto labels above max(first), then union.
TriangleFamily disjoint_union(const TriangleFamily& first, const TriangleFamily& second);

/// Support graph: all vertices and edges covered by at least one triangle,
/// with the number of triangles containing each edge.
class SupportGraph {
public:
    [[nodiscard]] std::span<const Vertex> vertices() const { return vertices_; }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }
    [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return edges_.size(); }

    [[nodiscard]] std::optional<std::size_t> vertex_index(Vertex x) const;
    [[nodiscard]] std::optional<std::size_t> edge_index(const Edge& e) const;

    /// d_e: triangles of the generating family containing edge i.
    [[nodiscard]] int edge_triangle_count(std::size_t edge_idx) const { return codegree_[edge_idx]; }
    [[nodiscard]] std::span<const int> edge_triangle_counts() const { return codegree_; }

    /// Graph degree of vertex i.
    [[nodiscard]] int degree(std::size_t vertex_idx) const { return degree_[vertex_idx]; }
    /// Triangles of the generating family containing vertex i.
    [[nodiscard]] int vertex_triangle_count(std::size_t vertex_idx) const { return vertex_triangles_[vertex_idx]; }
    /// |N(x) ∩ N(y)| for edge i = {x,y}.
    [[nodiscard]] int common_neighbors(std::size_t edge_idx) const;
    [[nodiscard]] std::size_t component_count() const;

    friend SupportGraph support_graph(const TriangleFamily& family);

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<int> codegree_;
    std::vector<int> degree_;
    std::vector<int> vertex_triangles_;
};

/// Throws std::invalid_argument("empty family") on an empty family.
SupportGraph support_graph(const TriangleFamily& family);

// Family text format: one triangle per line as three whitespace-separated
// non-negative integers; lines whose first non-blank character is '#' and
// blank lines are skipped.

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

TriangleFamily parse_family(std::istream& in);
TriangleFamily parse_family(const std::string& text);
void write_family(std::ostream& out, const TriangleFamily& family);
std::string format_family(const TriangleFamily& family);

inline constexpr std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline constexpr std::int64_t choose3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace trispec
