#include <doctest.h>

#include "rainbow/fpt.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/reference.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

TEST_CASE("beta threshold values") {
    CHECK(beta_threshold(1) == 5);
    CHECK(beta_threshold(2) == 42);
    CHECK(beta_threshold(3) == 175);
    CHECK(pendant_hub_requirement(1) == 5);
    CHECK(pendant_hub_requirement(2) == 20);
    CHECK_THROWS_AS(beta_threshold(64), input_error);
}

TEST_CASE("rvc coloring with at most 2p colors") {
    Graph star = make_star(5);
    VertexColoring c = rvc_coloring_2p(star, min_vertex_cover(star));
    CHECK(c.count <= 2);  // one non-leaf in the spanning tree

    Graph p5 = make_path(5);
    VertexColoring c2 = rvc_coloring_2p(p5, min_vertex_cover(p5));
    CHECK(c2.count <= 4);

    Rng rng(51);
    for (int i = 0; i < 30; ++i) {
        int p = 1 + static_cast<int>(rng.below(3));
        int n = p + 2 + static_cast<int>(rng.below(7));
        Graph g = make_cover_structured(p, n, 50, rng);
        VertexSet cover = min_vertex_cover(g);
        VertexColoring col = rvc_coloring_2p(g, cover);  // verification is built in
        CHECK(col.count <= 2 * cover.count());
    }
}

TEST_CASE("srvc coloring with at most p^2 colors") {
    Graph star = make_star(5);
    VertexColoring c = srvc_coloring_p2(star, min_vertex_cover(star));
    CHECK(c.count == 1);  // Q empty, Z = {center}

    Graph c4 = make_cycle(4);
    VertexSet opposite = VertexSet::of(4, {0, 2});
    VertexColoring c2 = srvc_coloring_p2(c4, opposite);
    CHECK(c2.count <= 4);
    CHECK(reference::strong_rainbow_vertex(c4, c2).ok);

    Rng rng(52);
    for (int i = 0; i < 30; ++i) {
        int p = 1 + static_cast<int>(rng.below(3));
        int n = p + 2 + static_cast<int>(rng.below(7));
        Graph g = make_cover_structured(p, n, 50, rng);
        VertexSet cover = min_vertex_cover(g);
        VertexColoring col = srvc_coloring_p2(g, cover);
        CHECK(col.count <= cover.count() * cover.count());
    }
}

TEST_CASE("rc exact coloring above the threshold: stars") {
    for (int q : {5, 9, 12}) {
        Graph star = make_star(q);
        EdgeColoring col = rc_exact_above_threshold(star, min_vertex_cover(star));
        CHECK(col.count == q);
        CHECK(optimize(star, Variant::RC).optimum == q);
    }
    Graph small = make_star(4);  // z = 4 < beta(1)
    CHECK_THROWS_AS(rc_exact_above_threshold(small, min_vertex_cover(small)), input_error);
}

TEST_CASE("rc exact coloring above the threshold: two centers") {
    Graph g = make_pendant_heavy(2, 43);
    VertexSet cover = min_vertex_cover(g);
    CHECK(cover.count() == 2);
    int z = bridges(g).count();
    CHECK(z == 43);
    EdgeColoring col = rc_exact_above_threshold(g, cover);
    CHECK(col.count == z);
}

TEST_CASE("rc exact coloring with types and non-separator cover edges") {
    // Two adjacent centers a=0, b=1; 22 pendants on a, 21 on b; two shared
    // neighbors y1, y2 adjacent to both centers. With the cycle through
    // y1/y2, edge ab is not a separator and {y1, y2} is a type with two
    // cover neighbors; z = 43 >= beta(2) = 42.
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
    int next = 4;
    for (int i = 0; i < 22; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < 21; ++i) edges.emplace_back(1, next++);
    Graph g(next, edges);

    VertexSet cover = min_vertex_cover(g);
    REQUIRE(cover.count() == 2);
    EdgeSet seps = bridges(g);
    REQUIRE(seps.count() == 43);
    REQUIRE(!seps.contains(*g.find_edge(0, 1)));

    EdgeColoring col = rc_exact_above_threshold(g, cover);
    CHECK(col.count == 43);
    // f-edge ab reuses a pendant color above 2p*2^p = 16
    CHECK(col.color[*g.find_edge(0, 1)] == pendant_hub_requirement(2) - 1);
}

TEST_CASE("rc bounded coloring below the threshold") {
    Graph c4 = make_cycle(4);
    EdgeColoring col = rc_bounded_coloring(c4, min_vertex_cover(c4));
    int p = 2;
    CHECK(col.count <= 0 + p * p + (1 << p) * 2 * p);

    Graph k4 = make_complete(4);
    EdgeColoring col2 = rc_bounded_coloring(k4, min_vertex_cover(k4));
    CHECK(col2.count <= k4.edge_count());

    Rng rng(53);
    int done = 0;
    while (done < 30) {
        int p = 1 + static_cast<int>(rng.below(3));
        int n = p + 2 + static_cast<int>(rng.below(7));
        Graph g = make_cover_structured(p, n, 50, rng);
        VertexSet cover = min_vertex_cover(g);
        int vcn = cover.count();
        int z = bridges(g).count();
        if (z >= beta_threshold(vcn)) continue;
        ++done;
        EdgeColoring col3 = rc_bounded_coloring(g, cover);
        CHECK(col3.count <= z + vcn * vcn + (1 << vcn) * 2 * vcn);
    }
}

TEST_CASE("decide_vc examples") {
    Graph star9 = make_star(9);
    WinWinOutcome yes = decide_vc(star9, Variant::RC, 9);
    CHECK(yes.yes);
    CHECK(yes.branch == WinWinBranch::ThresholdExact);
    CHECK(yes.edge_witness->count == 9);
    WinWinOutcome no = decide_vc(star9, Variant::RC, 8);
    CHECK(!no.yes);
    CHECK(no.branch == WinWinBranch::ThresholdExact);

    Graph p6 = make_path(6);  // vcn = 3
    WinWinOutcome rvc6 = decide_vc(p6, Variant::RVC, 6);
    CHECK(rvc6.yes);
    CHECK(rvc6.branch == WinWinBranch::StructuralYes);

    Graph diam2 = make_star(4);
    CHECK(decide_vc(diam2, Variant::SRVC, 1).yes);
}

TEST_CASE("saving_rc examples") {
    Graph k5 = make_complete(5);  // n=5, m=10: m >= n+k for k=5
    WinWinOutcome r = saving_rc(k5, 5);
    CHECK(r.yes);
    CHECK(r.branch == WinWinBranch::StructuralYes);
    CHECK(r.edge_witness->count <= 5);  // m - k

    Graph tree = make_path(6);
    for (int k = 1; k <= 3; ++k) CHECK(!saving_rc(tree, k).yes);  // rc = m exactly

    Graph c6 = make_cycle(6);
    WinWinOutcome c = saving_rc(c6, 2);  // rc(C_6) = 3 <= 4
    CHECK(c.yes);
    CHECK(c.branch == WinWinBranch::BoundedFallback);
}

TEST_CASE("saving_rvc examples") {
    Graph star5 = make_star(5);
    WinWinOutcome r = saving_rvc(star5, 4);
    CHECK(r.yes);
    CHECK(r.branch == WinWinBranch::StructuralYes);
    CHECK(r.vertex_witness->count <= 2);  // n - k = 2

    Graph p5 = make_path(5);  // rvc = 3 = n - 2
    WinWinOutcome fb = saving_rvc(p5, 2);
    CHECK(fb.yes);
    CHECK(fb.branch == WinWinBranch::BoundedFallback);

    CHECK(!saving_rvc(make_path(4), 3).yes);  // rvc(P_4) = 2 > 1
}

TEST_CASE("win-win agreement with the exact solver on a sample") {
    Rng rng(54);
    for (int i = 0; i < 12; ++i) {
        int n = 2 + static_cast<int>(rng.below(6));
        Graph g = make_random_connected(n, 45, rng);
        int m = g.edge_count();
        for (int k = 1; k <= n; ++k) {
            for (Variant v : {Variant::RC, Variant::RVC, Variant::SRVC})
                CHECK(decide_vc(g, v, k).yes == decide(g, v, k).yes);
            CHECK(saving_rvc(g, k).yes == decide(g, Variant::RVC, n - k).yes);
        }
        for (int k = 1; k <= m; ++k) CHECK(saving_rc(g, k).yes == decide(g, Variant::RC, m - k).yes);
    }
}
