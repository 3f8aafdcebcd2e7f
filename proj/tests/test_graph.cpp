#include <doctest.h>

#include <stdexcept>

#include <set>

#include "vizlab/graph.hpp"

using namespace vizlab;

TEST_CASE("from_edges rejects loops and duplicates") {
    CHECK_THROWS_AS(Graph::from_edges({{0, 0}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges({{0, 1}, {1, 0}}, 2), std::invalid_argument);
}

TEST_CASE("basic accessors on the 4-path") {
    Graph g = fixtures::path4();
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.max_degree() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.other_end(0, 0) == 1);
    CHECK(g.find_edge(1, 2).has_value());
    CHECK(!g.find_edge(0, 3).has_value());
    CHECK(g.distance(0, 3) == 3);
    CHECK(g.diameter() == 3);
}

TEST_CASE("components and distances on a disconnected graph") {
    Graph g = Graph::from_edges({{0, 1}, {2, 3}}, 4);
    CHECK(g.distance(0, 3) == kUnreachable);
    auto labels = g.component_labels();
    CHECK(labels[0] == labels[1]);
    CHECK(labels[2] == labels[3]);
    CHECK(labels[0] != labels[2]);
    CHECK(g.component_of(0).size() == 2);
}

TEST_CASE("line graph of the 4-path is a 3-path") {
    Graph g = fixtures::path4();
    LineGraphView lg(g);
    CHECK(lg.num_nodes() == 3);
    CHECK(lg.neighbors(0) == std::vector<EdgeId>{1});
    CHECK(lg.neighbors(1).size() == 2);
    CHECK(lg.distance_within(0, 2, 5) == 2);
    CHECK(!lg.distance_within(0, 2, 1).has_value());
    auto ball = lg.ball({0}, 1);
    CHECK(std::set<EdgeId>(ball.begin(), ball.end()) == std::set<EdgeId>{0, 1});
    Graph lgg = lg.as_graph();
    CHECK(lgg.num_vertices() == 3);
    CHECK(lgg.num_edges() == 2);
}

TEST_CASE("rand_graph respects the degree cap and is reproducible") {
    Graph g = rand_graph(200, 5, 7);
    CHECK(g.num_vertices() == 200);
    CHECK(g.max_degree() <= 5);
    CHECK(g.num_edges() > 0);
    Graph h = rand_graph(200, 5, 7);
    CHECK(g.num_edges() == h.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) CHECK(g.edge(e) == h.edge(e));
}

TEST_CASE("edge list parsing with names and comments") {
    auto [g, names] = parse_edge_list("# sample\na b\nb c\n\nc d # trailing note\n");
    CHECK(g.num_edges() == 3);
    CHECK(names == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(g.edge(2) == std::pair<VertexId, VertexId>{2, 3});
    CHECK_THROWS_AS(parse_edge_list("a b c\n"), std::invalid_argument);
}

TEST_CASE("greedy edge coloring is proper") {
    Graph g = rand_graph(80, 6, 3);
    auto col = greedy_proper_edge_coloring(g, 2 * g.max_degree() - 1);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::set<int> seen;
        for (auto [w, e] : g.incident(v)) {
            CHECK(col[e] >= 1);
            CHECK(seen.insert(col[e]).second);
        }
    }
}

TEST_CASE("distance-k graph joins vertices at distance exactly k") {
    Graph g = fixtures::path4();
    CHECK(power_graph(g, 1).num_edges() == 3);
    Graph g2 = power_graph(g, 2);
    CHECK(g2.find_edge(0, 2).has_value());
    CHECK(g2.find_edge(1, 3).has_value());
    CHECK(!g2.find_edge(0, 3).has_value());
    Graph g3 = power_graph(g, 3);
    CHECK(g3.num_edges() == 1);
    CHECK(g3.find_edge(0, 3).has_value());
}
