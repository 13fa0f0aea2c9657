#include "trispec/family.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace trispec {

Edge::Edge(Vertex x, Vertex y) : v_{std::min(x, y), std::max(x, y)} {
    if (x == y) throw std::invalid_argument("edge needs two distinct vertices");
}

Triangle::Triangle(Vertex a, Vertex b, Vertex c) : v_{a, b, c} {
    std::sort(v_.begin(), v_.end());
    if (v_[0] == v_[1] || v_[1] == v_[2])
        throw std::invalid_argument("triangle needs three distinct vertices");
}

std::array<Edge, 3> Triangle::edges() const {
    return {Edge(v_[0], v_[1]), Edge(v_[0], v_[2]), Edge(v_[1], v_[2])};
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << '{' << e.lo() << ',' << e.hi() << '}';
}

std::ostream& operator<<(std::ostream& os, const Triangle& t) {
    return os << '{' << t[0] << ',' << t[1] << ',' << t[2] << '}';
}

int sign_triangle_edge(const Triangle& t, const Edge& e) {
    if (!t.contains(e)) return 0;
    // The removed vertex is the middle one exactly when e = {min, max}.
    return (e.lo() == t[0] && e.hi() == t[2]) ? -1 : 1;
}

int sign_edge_vertex(const Edge& e, Vertex x) {
    if (x == e.hi()) return 1;
    if (x == e.lo()) return -1;
    return 0;
}

TriangleFamily::TriangleFamily(std::vector<Triangle> triangles) : triangles_(std::move(triangles)) {
    std::sort(triangles_.begin(), triangles_.end());
    triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
}

TriangleFamily::TriangleFamily(std::initializer_list<std::array<Vertex, 3>> triples) {
    triangles_.reserve(triples.size());
    for (const auto& t : triples) triangles_.emplace_back(t[0], t[1], t[2]);
    std::sort(triangles_.begin(), triangles_.end());
    triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());
}

std::vector<Vertex> TriangleFamily::vertices() const {
    std::vector<Vertex> out;
    out.reserve(3 * triangles_.size());
    for (const auto& t : triangles_)
        for (Vertex x : t.vertices()) out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<std::size_t> TriangleFamily::index_of(const Triangle& t) const {
    auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
    if (it == triangles_.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - triangles_.begin());
}

TriangleFamily TriangleFamily::relabeled(std::span<const Vertex> relabel) const {
    std::vector<Triangle> out;
    out.reserve(triangles_.size());
    for (const auto& t : triangles_) {
        if (t[2] >= relabel.size()) throw std::out_of_range("relabel map too short");
        out.emplace_back(relabel[t[0]], relabel[t[1]], relabel[t[2]]);
    }
    TriangleFamily result(std::move(out));
    if (result.size() != size()) throw std::invalid_argument("relabel map is not injective");
    return result;
}

TriangleFamily disjoint_union(const TriangleFamily& first, const TriangleFamily& second) {
    if (second.empty()) return first;
    if (first.empty()) return second;
    const Vertex base = first.vertices().back() + 1;
    const auto verts = second.vertices();
    std::vector<Vertex> relabel(verts.back() + 1, 0);
    for (std::size_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = base + static_cast<Vertex>(i);

    std::vector<Triangle> all(first.begin(), first.end());
    for (const auto& t : second) all.emplace_back(relabel[t[0]], relabel[t[1]], relabel[t[2]]);
    return TriangleFamily(std::move(all));
}

std::optional<std::size_t> SupportGraph::vertex_index(Vertex x) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
    if (it == vertices_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> SupportGraph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

int SupportGraph::common_neighbors(std::size_t edge_idx) const {
    const Edge& e = edges_[edge_idx];
    auto neighbors = [&](Vertex x) {
        std::vector<Vertex> out;
        for (const auto& f : edges_) {
            if (f.lo() == x) out.push_back(f.hi());
            else if (f.hi() == x) out.push_back(f.lo());
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto nx = neighbors(e.lo());
    const auto ny = neighbors(e.hi());
    std::vector<Vertex> both;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(both));
    return static_cast<int>(both.size());
}

std::size_t SupportGraph::component_count() const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertices_.size();
    for (const auto& e : edges_) {
        auto a = find(*vertex_index(e.lo()));
        auto b = find(*vertex_index(e.hi()));
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components;
}

SupportGraph support_graph(const TriangleFamily& family) {
    if (family.empty()) throw std::invalid_argument("empty family");
    SupportGraph g;
    g.vertices_ = family.vertices();

    std::map<Edge, int> counts;
    for (const auto& t : family)
        for (const auto& e : t.edges()) ++counts[e];
    g.edges_.reserve(counts.size());
    g.codegree_.reserve(counts.size());
    for (const auto& [e, d] : counts) {
        g.edges_.push_back(e);
        g.codegree_.push_back(d);
    }

    g.degree_.assign(g.vertices_.size(), 0);
    for (const auto& e : g.edges_) {
        ++g.degree_[*g.vertex_index(e.lo())];
        ++g.degree_[*g.vertex_index(e.hi())];
    }
    g.vertex_triangles_.assign(g.vertices_.size(), 0);
    for (const auto& t : family)
        for (Vertex x : t.vertices()) ++g.vertex_triangles_[*g.vertex_index(x)];
    return g;
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

TriangleFamily parse_family(std::istream& in) {
    std::vector<Triangle> triangles;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::vector<long long> values;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(token, &used);
            } catch (const std::exception&) {
                throw ParseError(lineno, "not an integer: '" + token + "'");
            }
            if (used != token.size()) throw ParseError(lineno, "not an integer: '" + token + "'");
            if (v < 0 || v > static_cast<long long>(UINT32_MAX))
                throw ParseError(lineno, "vertex label out of range: " + token);
            values.push_back(v);
        }
        if (values.size() != 3)
            throw ParseError(lineno, "expected 3 vertices, got " + std::to_string(values.size()));
        const auto a = static_cast<Vertex>(values[0]);
        const auto b = static_cast<Vertex>(values[1]);
        const auto c = static_cast<Vertex>(values[2]);
        if (a == b || b == c || a == c) throw ParseError(lineno, "repeated vertex in triangle");
        triangles.emplace_back(a, b, c);
    }
    return TriangleFamily(std::move(triangles));
}

TriangleFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

void write_family(std::ostream& out, const TriangleFamily& family) {
    for (const auto& t : family) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

std::string format_family(const TriangleFamily& family) {
    std::ostringstream out;
    write_family(out, family);
    return out.str();
}

}  // namespace trispec
