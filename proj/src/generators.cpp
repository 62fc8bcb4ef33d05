#include "rainbow/generators.hpp"

namespace rainbow {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw input_error("Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return x % n;
}

Graph make_path(int n) {
    if (n < 1) throw input_error("make_path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw input_error("make_cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw input_error("make_complete: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
    if (leaves < 0) throw input_error("make_star: negative leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, std::move(edges));
}

Graph make_corona_of_complete(int base) {
    return corona(make_complete(base), make_complete(1));
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, std::move(edges));
}

Graph make_random_connected(int n, int percent, Rng& rng) {
    if (n < 1) throw input_error("make_random_connected: n must be >= 1");
    if (percent < 1 || percent > 100) throw input_error("make_random_connected: percent in [1,100]");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(percent, 100)) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw input_error("make_random_connected: rejection sampling failed; raise the edge probability");
}

Graph make_cover_structured(int p, int n, int cover_edge_percent, Rng& rng) {
    if (p < 1 || n < p + 1) throw input_error("make_cover_structured: need n > p >= 1");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < p; ++u)
            for (int v = u + 1; v < p; ++v)
                if (rng.chance(cover_edge_percent, 100)) edges.emplace_back(u, v);
        for (int v = p; v < n; ++v) {
            std::uint64_t subset = rng.below((std::uint64_t{1} << p) - 1) + 1;  // nonempty
            for (int u = 0; u < p; ++u)
                if ((subset >> u) & 1) edges.emplace_back(u, v);
        }
        Graph g(n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw input_error("make_cover_structured: rejection sampling failed");
}

Graph make_pendant_heavy(int p, int bridge_count) {
    if (p < 1) throw input_error("make_pendant_heavy: p must be >= 1");
    int pendants = bridge_count - (p - 1);
    if (pendants < p) throw input_error("make_pendant_heavy: bridge count too small for p centers");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);  // center chain
    int next = p;
    for (int i = 0; i < pendants; ++i) edges.emplace_back(i % p, next++);
    return Graph(next, std::move(edges));
}

}  // namespace rainbow
