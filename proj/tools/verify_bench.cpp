// Benchmark comparing the three verifier engines on identical inputs:
// the naive path-enumeration reference (serial), the subset DP run serially,
// and the subset DP with the per-source loop under OpenMP.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rainbow/fpt.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/reference.hpp"
#include "rainbow/verify.hpp"

namespace {

using namespace rainbow;
using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f, int reps) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        f();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

struct Case {
    std::string name;
    Graph g;
    EdgeColoring edge;
    VertexColoring vertex;
    bool use_edge;
    bool naive_feasible;
};

EdgeColoring random_edge_coloring(const Graph& g, int c, Rng& rng) {
    EdgeColoring col{c, std::vector<int>(g.edge_count())};
    for (int& x : col.color) x = 1 + static_cast<int>(rng.below(c));
    return col;
}

VertexColoring random_vertex_coloring(const Graph& g, int c, Rng& rng) {
    VertexColoring col{c, std::vector<int>(g.vertex_count())};
    for (int& x : col.color) x = 1 + static_cast<int>(rng.below(c));
    return col;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    Rng rng(7);

    std::vector<Case> cases;
    {
        Graph g = make_random_connected(40, 12, rng);
        cases.push_back({"random n=40 rc c=14", g, random_edge_coloring(g, 14, rng), {}, true, false});
    }
    {
        Graph g = make_random_connected(28, 20, rng);
        cases.push_back({"random n=28 rc c=12", g, random_edge_coloring(g, 12, rng), {}, true, true});
    }
    {
        Graph g = make_corona_of_complete(14);
        cases.push_back({"corona K14 srvc c=10", g, {}, random_vertex_coloring(g, 10, rng), false, true});
    }
    {
        Graph g = make_random_connected(48, 15, rng);
        cases.push_back({"random n=48 rvc c=13", g, {}, random_vertex_coloring(g, 13, rng), false, false});
    }
    {
        Graph g = make_pendant_heavy(2, 60);
        VertexSet cover = min_vertex_cover(g);
        cases.push_back({"pendant-heavy z=60 lemma7", g, rc_exact_above_threshold(g, cover), {}, true, false});
    }

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel column equals serial\n");
#endif
    std::printf("%-28s %6s %6s | %10s %10s %10s %8s\n", "case", "n", "m", "naive ms", "serial ms",
                "parallel ms", "speedup");

    for (const Case& c : cases) {
        VerifyOptions serial;
        serial.parallel = false;
        VerifyOptions parallel;
        parallel.parallel = true;

        auto run = [&](const VerifyOptions& opts) {
            if (c.use_edge)
                return is_rainbow_edge(c.g, c.edge, opts).ok;
            return is_strong_rainbow_vertex(c.g, c.vertex, opts).ok;
        };

        double naive_ms = -1;
        if (c.naive_feasible) {
            naive_ms = time_ms(
                [&] {
                    if (c.use_edge)
                        (void)reference::rainbow_edge(c.g, c.edge);
                    else
                        (void)reference::strong_rainbow_vertex(c.g, c.vertex);
                },
                reps);
        }
        bool serial_ok = false, parallel_ok = false;
        double serial_ms = time_ms([&] { serial_ok = run(serial); }, reps);
        double parallel_ms = time_ms([&] { parallel_ok = run(parallel); }, reps);
        if (serial_ok != parallel_ok) {
            std::printf("ENGINE MISMATCH on %s\n", c.name.c_str());
            return 1;
        }

        char naive_buf[32];
        if (naive_ms < 0)
            std::snprintf(naive_buf, sizeof naive_buf, "%10s", "-");
        else
            std::snprintf(naive_buf, sizeof naive_buf, "%10.3f", naive_ms);
        std::printf("%-28s %6d %6d | %s %10.3f %10.3f %7.2fx\n", c.name.c_str(), c.g.vertex_count(),
                    c.g.edge_count(), naive_buf, serial_ms, parallel_ms,
                    parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
    }
    return 0;
}
