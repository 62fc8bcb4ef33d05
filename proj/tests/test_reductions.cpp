#include <doctest.h>

#include "rainbow/generators.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/reference.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

TEST_CASE("coloring -> ssrvc construction") {
    Graph k3 = make_complete(3);
    ColoringToSsrvc art = reduce_coloring_to_ssrvc(k3, 3);

    validate_corona_of_complete(art.instance.graph, 2);
    CHECK(art.instance.graph.vertex_count() == 6);
    CHECK(art.instance.pairs.pairs.size() == 3);  // one pendant pair per edge
    CHECK(art.roles[0].role == VertexRole::Original);
    CHECK(art.roles[3].role == VertexRole::Pendant);

    // forward copies each color to the pendant
    VertexColoring proper{3, {1, 2, 3}};
    VertexColoring fwd = art.forward(proper);
    CHECK(fwd.color == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK(art.backward(fwd).color == proper.color);

    CHECK_THROWS_AS(reduce_coloring_to_ssrvc(k3, 2), input_error);
}

TEST_CASE("edgeless source gives an empty pair set") {
    Graph edgeless(4, {});
    ColoringToSsrvc art = reduce_coloring_to_ssrvc(edgeless, 3);
    CHECK(art.instance.pairs.empty());
    CHECK(decide(art.instance.graph, Variant::SSRVC, 3, {}, &art.instance.pairs).yes);
}

TEST_CASE("ssrvc -> srvc construction on the figure instance") {
    // K_3 ∘ K_1 with P = {{p_0, p_1}, {p_0, p_2}} (pendants 3, 4, 5).
    SsrvcInstance inst{make_corona_of_complete(3), PairSet::of({{3, 4}, {3, 5}}, 6), 3};
    SsrvcToSrvc art = reduce_ssrvc_to_srvc(inst);

    // 6 originals+pendants, 3 x_v, one x1/x2 pair (for {4,5}), s and t.
    CHECK(art.graph.vertex_count() == 13);
    CHECK(diameter(art.graph) == 3);

    int x1 = -1, x2 = -1, s = -1, t = -1;
    for (int v = 0; v < art.graph.vertex_count(); ++v) {
        if (art.roles[v].role == VertexRole::XPath1) x1 = v;
        if (art.roles[v].role == VertexRole::XPath2) x2 = v;
        if (art.roles[v].role == VertexRole::SourceS) s = v;
        if (art.roles[v].role == VertexRole::SinkT) t = v;
    }
    REQUIRE(x1 >= 0);
    CHECK(art.roles[x1].origin == std::vector<int>{4, 5});
    CHECK(art.graph.has_edge(4, x1));
    CHECK(art.graph.has_edge(x1, x2));
    CHECK(art.graph.has_edge(x2, 5));
    CHECK(art.graph.has_edge(s, x1));
    CHECK(art.graph.has_edge(t, x2));
    CHECK(art.graph.has_edge(1, x1));  // hub of pendant 4
    CHECK(art.graph.has_edge(2, x2));  // hub of pendant 5
    for (int y = 0; y < 3; ++y) {
        CHECK(art.graph.has_edge(s, y));
        CHECK(art.graph.has_edge(t, y));
    }

    // the forward scheme: retained colors, x/x1 -> c1, x2/s/t -> c2
    SolveReport sub = decide(inst.graph, Variant::SSRVC, 3, {}, &inst.pairs);
    REQUIRE(sub.yes);
    VertexColoring fwd = art.forward(*sub.vertex_witness);
    CHECK(is_strong_rainbow_vertex(art.graph, fwd).ok);

    CHECK_THROWS_AS(reduce_ssrvc_to_srvc(SsrvcInstance{inst.graph, inst.pairs, 2}), input_error);
}

TEST_CASE("all pendant pairs in P: no x1/x2 gadgets") {
    SsrvcInstance inst{make_corona_of_complete(3), PairSet::of({{3, 4}, {3, 5}, {4, 5}}, 6), 3};
    SsrvcToSrvc art = reduce_ssrvc_to_srvc(inst);
    for (const RoleEntry& r : art.roles) {
        CHECK(r.role != VertexRole::XPath1);
        CHECK(r.role != VertexRole::XPath2);
    }
    CHECK(art.graph.vertex_count() == 6 + 3 + 2);
    CHECK(diameter(art.graph) == 3);
}

TEST_CASE("composed size is quadratic in the source") {
    for (int n = 2; n <= 6; ++n) {
        Graph g = make_path(n);
        ColoringToSsrvc first = reduce_coloring_to_ssrvc(g, 3);
        SsrvcToSrvc second = reduce_ssrvc_to_srvc(first.instance);
        int expected = 3 * n + 2 * (n * (n - 1) / 2 - g.edge_count()) + 2;
        CHECK(second.graph.vertex_count() == expected);
        CHECK(second.graph.vertex_count() <= 2 * n * n + 2);
    }
}

TEST_CASE("check_equivalence examples") {
    SolveLimits limits;

    EquivalenceReport k4 = check_equivalence(reduce_coloring_to_ssrvc(make_complete(4), 3), limits);
    CHECK(!k4.source_yes);  // K_4 is not 3-colorable
    CHECK(!k4.target_yes);

    EquivalenceReport c5 = check_equivalence(reduce_coloring_to_ssrvc(make_cycle(5), 3), limits);
    CHECK(c5.source_yes);
    CHECK(c5.target_yes);
    CHECK(c5.witnesses_cross_checked);

    EquivalenceReport k3 = check_equivalence(reduce_coloring_to_ssrvc(make_complete(3), 3), limits);
    CHECK(k3.source_yes);
}

TEST_CASE("random small instances: both reductions preserve the answer") {
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        int n = 2 + static_cast<int>(rng.below(4));  // up to 5 source vertices
        Graph g = make_random_connected(n, 50, rng);

        ColoringToSsrvc first = reduce_coloring_to_ssrvc(g, 3);
        EquivalenceReport r1 = check_equivalence(first);  // throws on violation
        CHECK(r1.source_yes == reference::chromatic_decide(g, 3));

        SsrvcToSrvc second = reduce_ssrvc_to_srvc(first.instance);
        EquivalenceReport r2 = check_equivalence(second);
        CHECK(r2.source_yes == r1.target_yes);
    }
}

TEST_CASE("forward translation of any valid source witness verifies") {
    Rng rng(42);
    for (int i = 0; i < 10; ++i) {
        int n = 2 + static_cast<int>(rng.below(4));
        Graph g = make_random_connected(n, 60, rng);
        ChromaticReport proper = chromatic_decide(g, 4);
        REQUIRE(proper.yes);

        ColoringToSsrvc first = reduce_coloring_to_ssrvc(g, std::max(3, proper.witness->count));
        VertexColoring fwd = first.forward(*proper.witness);
        CHECK(is_subset_srvc(first.instance.graph, fwd, first.instance.pairs).ok);

        SsrvcToSrvc second = reduce_ssrvc_to_srvc(first.instance);
        VertexColoring fwd2 = second.forward(fwd);
        CHECK(is_strong_rainbow_vertex(second.graph, fwd2).ok);
    }
}

TEST_CASE("theorem-1 reduction rejects degenerate bases") {
    Graph k2 = make_corona_of_complete(1);  // K_1 ∘ K_1 = a single edge
    CHECK_THROWS_AS(reduce_ssrvc_to_srvc(SsrvcInstance{k2, PairSet::of({{0, 1}}, 2), 3}), input_error);
    Graph not_corona = make_cycle(4);
    CHECK_THROWS_AS(reduce_ssrvc_to_srvc(SsrvcInstance{not_corona, PairSet::of({}, 4), 3}), input_error);
}
