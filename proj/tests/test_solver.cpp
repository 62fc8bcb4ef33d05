#include <doctest.h>

#include "rainbow/generators.hpp"
#include "rainbow/reference.hpp"
#include "rainbow/solver.hpp"

using namespace rainbow;

TEST_CASE("decide examples") {
    CHECK(decide(make_complete(4), Variant::RC, 1).yes);

    Graph c6 = make_cycle(6);
    CHECK(!reference::decide_rc(c6, 2));  // oracle for the frozen values
    CHECK(reference::decide_rc(c6, 3));
    CHECK(!decide(c6, Variant::RC, 2).yes);
    CHECK(decide(c6, Variant::RC, 3).yes);

    Graph star = make_star(4);  // diameter 2
    CHECK(decide(star, Variant::SRVC, 1).yes);
}

TEST_CASE("optimize examples") {
    CHECK(optimize(make_path(4), Variant::RC).optimum == 3);   // tree: rc = m
    CHECK(optimize(make_star(5), Variant::RC).optimum == 5);

    CHECK(!reference::decide_rvc(make_path(4), 1));
    CHECK(reference::decide_rvc(make_path(4), 2));
    CHECK(optimize(make_path(4), Variant::RVC).optimum == 2);
}

TEST_CASE("degenerate cases report zero") {
    Graph k1 = make_complete(1);
    SolveReport r = optimize(k1, Variant::RC);
    CHECK(r.optimum == 0);
    CHECK(r.edge_witness->count == 0);

    Graph k4 = make_complete(4);  // diameter 1: no internal vertices needed
    CHECK(optimize(k4, Variant::RVC).optimum == 0);
    CHECK(optimize(k4, Variant::SRVC).optimum == 0);
    CHECK(decide(k4, Variant::SRVC, 0).yes);

    Graph star = make_star(3);
    CHECK(!decide(star, Variant::RVC, 0).yes);  // diameter 2 needs a color
}

TEST_CASE("ssrvc decide") {
    Graph corona3 = make_corona_of_complete(3);
    PairSet p = PairSet::of({{3, 4}, {3, 5}, {4, 5}}, 6);

    CHECK(reference::decide_ssrvc(corona3, 3, p));
    CHECK(!reference::decide_ssrvc(corona3, 2, p));
    SolveReport yes = decide(corona3, Variant::SSRVC, 3, {}, &p);
    CHECK(yes.yes);
    CHECK(yes.vertex_witness->count <= 3);
    CHECK(!decide(corona3, Variant::SSRVC, 2, {}, &p).yes);

    PairSet empty = PairSet::of({}, 6);
    CHECK(decide(corona3, Variant::SSRVC, 1, {}, &empty).yes);
    CHECK(optimize(corona3, Variant::SSRVC, {}, &empty).optimum == 0);

    CHECK_THROWS_AS(decide(corona3, Variant::SSRVC, 3), input_error);
    CHECK_THROWS_AS(decide(corona3, Variant::RC, 3, {}, &p), input_error);
}

TEST_CASE("chromatic decide examples") {
    CHECK(!chromatic_decide(make_complete(4), 3).yes);
    CHECK(chromatic_decide(make_complete(4), 4).yes);
    CHECK(!chromatic_decide(make_cycle(5), 2).yes);
    CHECK(chromatic_decide(make_cycle(5), 3).yes);

    CHECK(reference::chromatic_decide(make_petersen(), 3));
    ChromaticReport petersen = chromatic_decide(make_petersen(), 3);
    CHECK(petersen.yes);
    CHECK(petersen.witness->count <= 3);
}

TEST_CASE("decide agrees with unrestricted enumeration") {
    Rng rng(31);
    int instances = 0;
    while (instances < 12) {
        int n = 2 + static_cast<int>(rng.below(5));  // n <= 6
        Graph g = make_random_connected(n, 45, rng);
        if (g.edge_count() > 9) continue;  // keep k^m enumeration cheap
        ++instances;
        for (int k = 1; k <= 3; ++k) {
            CHECK(decide(g, Variant::RC, k).yes == reference::decide_rc(g, k));
            CHECK(decide(g, Variant::SRC, k).yes == reference::decide_src(g, k));
            CHECK(decide(g, Variant::RVC, k).yes == reference::decide_rvc(g, k));
            CHECK(decide(g, Variant::SRVC, k).yes == reference::decide_srvc(g, k));
        }
    }
}

TEST_CASE("yes witnesses pass and monotonicity holds") {
    Rng rng(32);
    for (int i = 0; i < 15; ++i) {
        int n = 2 + static_cast<int>(rng.below(6));
        Graph g = make_random_connected(n, 50, rng);
        for (Variant v : {Variant::RC, Variant::SRC, Variant::RVC, Variant::SRVC}) {
            int prev_yes_at = -1;
            for (int k = 0; k <= n; ++k) {
                SolveReport r = decide(g, v, k);  // witness self-checked inside
                if (r.yes && prev_yes_at < 0) prev_yes_at = k;
                if (prev_yes_at >= 0 && k >= prev_yes_at) CHECK(r.yes);  // monotone in k
                if (r.yes) CHECK(r.witness_colors() <= k);
            }
            SolveReport opt = optimize(g, v);
            CHECK(opt.optimum == prev_yes_at);
        }
    }
}

TEST_CASE("lower bound invariants on a sample") {
    Rng rng(33);
    for (int i = 0; i < 10; ++i) {
        int n = 2 + static_cast<int>(rng.below(6));
        Graph g = make_random_connected(n, 50, rng);
        int z = bridges(g).count();
        int rc = optimize(g, Variant::RC).optimum;
        int src = optimize(g, Variant::SRC, {}, nullptr, rc).optimum;
        int rvc = optimize(g, Variant::RVC).optimum;
        int srvc = optimize(g, Variant::SRVC, {}, nullptr, rvc).optimum;
        CHECK(rc >= z);
        CHECK(src >= rc);
        CHECK(srvc >= rvc);
        CHECK(rc <= n - 1);
        CHECK(rvc <= n);
        if (rc == 2) CHECK(src == 2);  // rc = 2 iff src = 2
    }
}

TEST_CASE("budget errors instead of wrong answers") {
    Graph g = make_cycle(6);
    SolveLimits tiny{3};
    CHECK_THROWS_AS(decide(g, Variant::RC, 3, tiny), budget_exceeded);
}
