#include <doctest.h>

#include <sstream>

#include "trispec/family.hpp"

using namespace trispec;

TEST_CASE("edges and triangles store sorted vertices") {
    const Edge e(5, 2);
    CHECK(e.lo() == 2);
    CHECK(e.hi() == 5);
    CHECK_THROWS_AS(Edge(3, 3), std::invalid_argument);

    const Triangle t(9, 1, 4);
    CHECK(t.vertices() == std::array<Vertex, 3>{1, 4, 9});
    CHECK(t.contains(Edge(1, 9)));
    CHECK_FALSE(t.contains(Edge(2, 9)));
    CHECK_THROWS_AS(Triangle(1, 2, 1), std::invalid_argument);
    const auto es = t.edges();
    CHECK(es[0] == Edge(1, 4));
    CHECK(es[1] == Edge(1, 9));
    CHECK(es[2] == Edge(4, 9));
}

TEST_CASE("triangle-edge signs") {
    const Triangle t(1, 2, 3);
    CHECK(sign_triangle_edge(t, Edge(1, 2)) == 1);
    CHECK(sign_triangle_edge(t, Edge(1, 3)) == -1);
    CHECK(sign_triangle_edge(t, Edge(2, 3)) == 1);
    CHECK(sign_triangle_edge(t, Edge(4, 5)) == 0);
    CHECK(sign_triangle_edge(t, Edge(1, 4)) == 0);
}

TEST_CASE("edge-vertex signs") {
    const Edge e(1, 2);
    CHECK(sign_edge_vertex(e, 2) == 1);
    CHECK(sign_edge_vertex(e, 1) == -1);
    CHECK(sign_edge_vertex(e, 7) == 0);
}

TEST_CASE("families sort and deduplicate") {
    const TriangleFamily f{{3, 2, 1}, {1, 2, 4}, {1, 2, 3}};
    REQUIRE(f.size() == 2);
    CHECK(f[0] == Triangle(1, 2, 3));
    CHECK(f[1] == Triangle(1, 2, 4));
    CHECK(f.vertices() == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(f.index_of(Triangle(1, 2, 4)) == 1);
    CHECK_FALSE(f.index_of(Triangle(2, 3, 4)).has_value());
}

TEST_CASE("relabeling") {
    const TriangleFamily f{{0, 1, 2}, {0, 1, 3}};
    const std::vector<Vertex> map{7, 5, 6, 4};
    CHECK(f.relabeled(map) == TriangleFamily{{5, 6, 7}, {4, 5, 7}});
    const std::vector<Vertex> clash{0, 0, 1, 2};
    CHECK_THROWS((void)f.relabeled(clash));
}

TEST_CASE("support graph of a single triangle") {
    const auto g = support_graph(TriangleFamily{{1, 2, 3}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(g.edge_triangle_count(i) == 1);
}

TEST_CASE("support graph of two triangles on an edge") {
    const auto g = support_graph(TriangleFamily{{1, 2, 3}, {1, 2, 4}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 5);
    CHECK(g.edge_triangle_count(*g.edge_index(Edge(1, 2))) == 2);
    int ones = 0;
    for (int c : g.edge_triangle_counts()) ones += c == 1;
    CHECK(ones == 4);
    CHECK(g.common_neighbors(*g.edge_index(Edge(1, 2))) == 2);
    CHECK(g.degree(*g.vertex_index(3)) == 2);
    CHECK(g.vertex_triangle_count(*g.vertex_index(1)) == 2);
    CHECK(g.component_count() == 1);
}

TEST_CASE("support graph of K4 triples") {
    const auto g = support_graph(TriangleFamily{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    for (int c : g.edge_triangle_counts()) CHECK(c == 2);
}

TEST_CASE("empty family has no support graph") {
    CHECK_THROWS_WITH_AS(support_graph(TriangleFamily{}), "empty family", std::invalid_argument);
}

TEST_CASE("disjoint union") {
    const TriangleFamily one{{1, 2, 3}};
    CHECK(disjoint_union(one, one) == TriangleFamily{{1, 2, 3}, {4, 5, 6}});
    CHECK(disjoint_union(one, TriangleFamily{}) == one);
    CHECK(disjoint_union(TriangleFamily{}, one) == one);

    const TriangleFamily t31{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    const auto u = disjoint_union(t31, t31);
    CHECK(u.size() == 8);
    CHECK(u.vertices().size() == 8);
    CHECK(support_graph(u).component_count() == 2);
}

TEST_CASE("parsing the family text format") {
    const auto f = parse_family("# two triangles\n1 2 3\n\n  4 2 1\n");
    CHECK(f == TriangleFamily{{1, 2, 3}, {1, 2, 4}});
    CHECK(format_family(f) == "1 2 3\n1 2 4\n");
    CHECK(parse_family(format_family(f)) == f);
    CHECK(parse_family("").empty());
}

TEST_CASE("parse errors carry the line number") {
    auto line_of = [](const std::string& text) {
        try {
            parse_family(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("1 2 3\n1 2\n") == 2);
    CHECK(line_of("1 2 3\n# c\n1 2 3 4\n") == 3);
    CHECK(line_of("1 1 2\n") == 1);
    CHECK(line_of("1 -2 3\n") == 1);
    CHECK(line_of("a b c\n") == 1);
    CHECK_THROWS_WITH(parse_family("1 2 3\n1 2\n"), doctest::Contains("line 2"));
}

TEST_CASE("binomials") {
    CHECK(choose2(0) == 0);
    CHECK(choose2(5) == 10);
    CHECK(choose3(2) == 0);
    CHECK(choose3(6) == 20);
    CHECK(choose3(100) == 161700);
}
