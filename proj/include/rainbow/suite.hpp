#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

struct BenchRecord {
    std::string instance;  // generator + parameters + seed
    std::string check;
    bool pass = false;
    std::string witness_checksum;  // empty when no witness applies
    std::string detail;
    double wall_ms = 0.0;  // excluded from deterministic output unless requested
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    int instances = 0;
    std::string detail;
    double wall_ms = 0.0;
    std::vector<BenchRecord> records;
};

struct SuiteConfig {
    std::uint64_t seed = 0;
    SolveLimits limits;
    bool parallel = true;
};

std::vector<int> all_criteria();
CriterionResult run_criterion(int id, const SuiteConfig& cfg);
std::vector<CriterionResult> run_suite(const SuiteConfig& cfg);

// Exhaustive isomorphism-free connected graphs on exactly n vertices
// (canonical adjacency mask minimized over all vertex permutations).
const std::vector<Graph>& connected_graphs_up_to_iso(int n);

std::vector<Graph> random_connected_corpus(int count, int max_n, std::uint64_t seed);
std::vector<Graph> cover_structured_corpus(int count, int max_p, int max_n, std::uint64_t seed);

}  // namespace rainbow
