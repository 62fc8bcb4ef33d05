#pragma once

#include <cstdint>
#include <random>

#include "rainbow/graph.hpp"

namespace rainbow {

// Deterministic cross-platform RNG: mt19937_64 with hand-rolled draws
// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, n) via rejection.
    std::uint64_t below(std::uint64_t n);

    // Bernoulli with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_star(int leaves);                 // K_{1,leaves}: center 0
Graph make_corona_of_complete(int base);     // K_base ∘ K_1
Graph make_petersen();

// Erdős–Rényi conditioned on connectivity by rejection; edge probability is
// percent/100.
Graph make_random_connected(int n, int percent, Rng& rng);

// Cover-structured random graph: vertices 0..p-1 form the cover, every other
// vertex attaches to a nonempty random subset of it; optional cover-cover
// edges. Guarantees vcn <= p.
Graph make_cover_structured(int p, int n, int cover_edge_percent, Rng& rng);

// p centers chained by edges, bridges-p+1 pendants distributed round-robin;
// exactly `bridge_count` bridges, vertex cover number p (given enough
// pendants per center).
Graph make_pendant_heavy(int p, int bridge_count);

}  // namespace rainbow
