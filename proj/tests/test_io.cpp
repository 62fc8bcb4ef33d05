#include <doctest.h>

#include <sstream>

#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/suite.hpp"

using namespace rainbow;

TEST_CASE("graph round trip and comments") {
    std::istringstream in("# a comment\n4 3\n0 1\n# another\n1 2\n2 3\n");
    Graph g = read_graph(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);

    std::ostringstream out;
    write_graph(out, g);
    std::istringstream again(out.str());
    CHECK(read_graph(again).edges() == g.edges());
}

TEST_CASE("dimacs reader converts to 0-based") {
    std::istringstream in("p edge 3 2\ne 1 2\ne 2 3\n");
    Graph g = read_graph(in);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("bad graph input is rejected") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_graph(empty), input_error);
    std::istringstream short_file("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(short_file), input_error);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_AS(read_graph(loop), input_error);
}

TEST_CASE("coloring round trip") {
    Graph g = make_path(4);
    EdgeColoring e{2, {1, 2, 1}};
    std::ostringstream out;
    write_coloring(out, e);
    CHECK(out.str().rfind("c 2 edge", 0) == 0);
    std::istringstream in(out.str());
    CHECK(read_edge_coloring(in, g).color == e.color);

    std::istringstream wrong_kind(out.str());
    CHECK_THROWS_AS(read_vertex_coloring(wrong_kind, g), input_error);

    std::istringstream partial("c 2 edge\n0 1\n1 2\n");
    CHECK_THROWS_AS(read_edge_coloring(partial, g), input_error);

    std::istringstream out_of_range("c 2 edge\n0 1\n1 2\n2 3\n");
    CHECK_THROWS_AS(read_edge_coloring(out_of_range, g), input_error);
}

TEST_CASE("pair set round trip") {
    Graph g = make_corona_of_complete(3);
    PairSet p = PairSet::of({{5, 3}, {3, 4}, {3, 4}}, 6);  // normalized and deduped
    CHECK(p.pairs == std::vector<std::pair<int, int>>{{3, 4}, {3, 5}});
    std::ostringstream out;
    write_pairs(out, p);
    std::istringstream in(out.str());
    CHECK(read_pairs(in, g).pairs == p.pairs);
}

TEST_CASE("generators are deterministic and match the named shapes") {
    Rng a(123), b(123);
    Graph g1 = make_random_connected(7, 40, a);
    Graph g2 = make_random_connected(7, 40, b);
    CHECK(g1.edges() == g2.edges());

    Graph star = make_star(5);
    CHECK(star.vertex_count() == 6);
    CHECK(star.degree(0) == 5);

    Graph fig = make_corona_of_complete(3);
    CHECK(fig.vertex_count() == 6);
    CHECK(fig.edge_count() == 6);

    Graph ph = make_pendant_heavy(1, 5);  // exactly at beta(1)
    CHECK(ph.vertex_count() == 6);
    CHECK(ph.degree(0) == 5);
    CHECK(bridges(ph).count() == 5);
}

TEST_CASE("exhaustive iso-free corpus has the known sizes") {
    CHECK(connected_graphs_up_to_iso(1).size() == 1);
    CHECK(connected_graphs_up_to_iso(2).size() == 1);
    CHECK(connected_graphs_up_to_iso(3).size() == 2);
    CHECK(connected_graphs_up_to_iso(4).size() == 6);
    CHECK(connected_graphs_up_to_iso(5).size() == 21);
    CHECK(connected_graphs_up_to_iso(6).size() == 112);
}

TEST_CASE("fnv checksum is stable") {
    CHECK(fnv1a_checksum("abc") == fnv1a_checksum("abc"));
    CHECK(fnv1a_checksum("abc") != fnv1a_checksum("abd"));
}
