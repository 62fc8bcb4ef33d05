#include "rainbow/suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>

#include "rainbow/fpt.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/reference.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string describe(const Graph& g) {
    return "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count());
}

std::string checksum_of(const EdgeColoring& c) {
    std::ostringstream os;
    write_coloring(os, c);
    return fnv1a_checksum(os.str());
}

std::string checksum_of(const VertexColoring& c) {
    std::ostringstream os;
    write_coloring(os, c);
    return fnv1a_checksum(os.str());
}

// Runs one instance check, folding any solver/construction error into a
// failing record rather than aborting the whole criterion.
template <typename Fn>
BenchRecord run_record(const std::string& instance, const std::string& check, Fn&& fn) {
    BenchRecord rec;
    rec.instance = instance;
    rec.check = check;
    auto t0 = Clock::now();
    try {
        fn(rec);
    } catch (const std::exception& e) {
        rec.pass = false;
        rec.detail = e.what();
    }
    rec.wall_ms = ms_since(t0);
    return rec;
}

struct CriterionBuilder {
    CriterionResult result;
    explicit CriterionBuilder(int id, std::string name) {
        result.id = id;
        result.name = std::move(name);
        result.pass = true;
    }
    void add(BenchRecord rec) {
        if (!rec.pass && result.detail.empty()) result.detail = rec.instance + ": " + rec.detail;
        result.pass = result.pass && rec.pass;
        ++result.instances;
        result.records.push_back(std::move(rec));
    }
    CriterionResult finish(Clock::time_point t0) {
        result.wall_ms = ms_since(t0);
        return std::move(result);
    }
};

// ---- criterion 1: reduction soundness ------------------------------------

CriterionResult criterion_reductions(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(1, "reduction soundness (coloring -> ssrvc -> diameter-3 srvc, k=3)");
    for (int n = 2; n <= 6; ++n) {
        const auto& graphs = connected_graphs_up_to_iso(n);
        std::vector<BenchRecord> recs(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
        for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
            const Graph& g = graphs[i];
            recs[i] = run_record("exhaustive-n" + std::to_string(n) + "#" + std::to_string(i), describe(g),
                                 [&](BenchRecord& rec) {
                                     ColoringToSsrvc first = reduce_coloring_to_ssrvc(g, 3);
                                     EquivalenceReport r1 = check_equivalence(first, cfg.limits);
                                     SsrvcToSrvc second = reduce_ssrvc_to_srvc(first.instance);
                                     EquivalenceReport r2 = check_equivalence(second, cfg.limits);
                                     bool diam_ok = diameter(second.graph) == 3;
                                     rec.pass = r1.target_yes == r2.source_yes &&
                                                r1.source_yes == r2.target_yes && diam_ok;
                                     rec.detail = std::string("chromatic=") + (r1.source_yes ? "yes" : "no") +
                                                  " ssrvc=" + (r1.target_yes ? "yes" : "no") +
                                                  " srvc=" + (r2.target_yes ? "yes" : "no") +
                                                  " diam3=" + (diam_ok ? "yes" : "no");
                                 });
        }
        for (auto& r : recs) out.add(std::move(r));
    }
    return out.finish(t0);
}

// ---- criterion 2: srvc(G) <= 1 iff diam(G) <= 2 ---------------------------

CriterionResult criterion_srvc_characterization(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(2, "srvc characterization: decide(SRVC,1) iff diam <= 2");
    std::vector<Graph> corpus = random_connected_corpus(200, 8, cfg.seed + 2);
    std::vector<BenchRecord> recs(corpus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
    for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
        const Graph& g = corpus[i];
        recs[i] = run_record("random#" + std::to_string(i), describe(g), [&](BenchRecord& rec) {
            bool yes = decide(g, Variant::SRVC, 1, cfg.limits).yes;
            bool want = diameter(g) <= 2;
            rec.pass = yes == want;
            rec.detail = "decide=" + std::to_string(yes) + " diam<=2=" + std::to_string(want);
        });
    }
    for (auto& r : recs) out.add(std::move(r));
    return out.finish(t0);
}

// ---- criterion 3: Lemma 5 bounds ------------------------------------------

CriterionResult criterion_vertex_bounds(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(3, "vertex-cover colorings: rvc <= 2p and srvc <= p^2");
    std::vector<Graph> corpus = cover_structured_corpus(100, 3, 10, cfg.seed + 3);
    std::vector<BenchRecord> recs(corpus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
    for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
        const Graph& g = corpus[i];
        recs[i] = run_record("coverstruct#" + std::to_string(i), describe(g), [&](BenchRecord& rec) {
            VertexSet cover = min_vertex_cover(g);
            int p = cover.count();
            VertexColoring c1 = rvc_coloring_2p(g, cover);     // self-verifying
            VertexColoring c2 = srvc_coloring_p2(g, cover);    // self-verifying
            SolveReport rvc = optimize(g, Variant::RVC, cfg.limits);
            SolveReport srvc = optimize(g, Variant::SRVC, cfg.limits, nullptr, rvc.optimum);
            rec.pass = c1.count <= 2 * p && c2.count <= p * p && rvc.optimum <= 2 * p &&
                       srvc.optimum <= p * p;
            rec.witness_checksum = checksum_of(c1);
            rec.detail = "p=" + std::to_string(p) + " rvc=" + std::to_string(rvc.optimum) +
                         " srvc=" + std::to_string(srvc.optimum) + " colors=" + std::to_string(c1.count) + "/" +
                         std::to_string(c2.count);
        });
    }
    for (auto& r : recs) out.add(std::move(r));
    return out.finish(t0);
}

// ---- criterion 4: Lemma 6 separator bound ----------------------------------

int separators_not_pendant_incident(const Graph& g, const VertexSet& cover) {
    EdgeSet seps = bridges(g);
    int count = 0;
    seps.for_each([&](int e) {
        const Edge& ed = g.edge(e);
        bool pendant_outside = (g.is_pendant(ed.u) && !cover.contains(ed.u)) ||
                               (g.is_pendant(ed.v) && !cover.contains(ed.v));
        if (!pendant_outside) ++count;
    });
    return count;
}

CriterionResult criterion_separator_bound(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(4, "separators not pendant-incident <= 2p-2");
    std::vector<Graph> corpus = cover_structured_corpus(100, 3, 10, cfg.seed + 3);
    for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
        const Graph& g = corpus[i];
        out.add(run_record("coverstruct#" + std::to_string(i), describe(g), [&](BenchRecord& rec) {
            VertexSet cover = min_vertex_cover(g);
            int p = cover.count();
            int cnt = separators_not_pendant_incident(g, cover);
            rec.pass = cnt <= 2 * p - 2;
            rec.detail = "count=" + std::to_string(cnt) + " bound=" + std::to_string(2 * p - 2);
        }));
    }
    return out.finish(t0);
}

// ---- criterion 5: Lemma 7 exactness ----------------------------------------

CriterionResult criterion_threshold_exact(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(5, "rc = z above the beta threshold");
    for (int q = 5; q <= 12; ++q) {
        Graph g = make_star(q);
        out.add(run_record("star" + std::to_string(q), describe(g), [&](BenchRecord& rec) {
            EdgeColoring col = rc_exact_above_threshold(g, min_vertex_cover(g));
            SolveReport opt = optimize(g, Variant::RC, cfg.limits);
            rec.pass = col.count == q && opt.optimum == q;
            rec.witness_checksum = checksum_of(col);
            rec.detail = "colors=" + std::to_string(col.count) + " rc=" + std::to_string(opt.optimum);
        }));
    }
    for (int i = 0; i < 10; ++i) {
        Graph g = make_pendant_heavy(2, 42 + i);
        out.add(run_record("pendant-heavy-z" + std::to_string(42 + i), describe(g), [&](BenchRecord& rec) {
            int z = bridges(g).count();
            EdgeColoring col = rc_exact_above_threshold(g, min_vertex_cover(g));
            rec.pass = col.count == z && z >= beta_threshold(2);
            rec.witness_checksum = checksum_of(col);
            rec.detail = "z=" + std::to_string(z) + " colors=" + std::to_string(col.count);
        }));
    }
    return out.finish(t0);
}

// ---- criterion 6: Lemma 8 bound ---------------------------------------------

CriterionResult criterion_bounded_coloring(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(6, "rc coloring within z + p^2 + 2^p*2p below the threshold");
    Rng rng(cfg.seed + 6);
    int accepted = 0, attempts = 0;
    while (accepted < 50 && attempts < 5000) {
        ++attempts;
        int p = 1 + static_cast<int>(rng.below(3));
        int n = p + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(10 - p - 1)));
        Graph g = make_cover_structured(p, n, 50, rng);
        VertexSet cover = min_vertex_cover(g);
        int vcn = cover.count();
        int z = bridges(g).count();
        if (z >= beta_threshold(vcn)) continue;
        ++accepted;
        out.add(run_record("coverstruct-a" + std::to_string(attempts), describe(g), [&](BenchRecord& rec) {
            EdgeColoring col = rc_bounded_coloring(g, cover);
            std::int64_t bound = z + static_cast<std::int64_t>(vcn) * vcn + (std::int64_t{1} << vcn) * 2 * vcn;
            rec.pass = col.count <= bound;
            rec.witness_checksum = checksum_of(col);
            rec.detail = "z=" + std::to_string(z) + " colors=" + std::to_string(col.count) +
                         " bound=" + std::to_string(bound);
        }));
    }
    if (accepted < 50) {
        BenchRecord rec;
        rec.instance = "generator";
        rec.check = "corpus";
        rec.pass = false;
        rec.detail = "could not generate 50 instances with z < beta(vcn)";
        out.add(std::move(rec));
    }
    return out.finish(t0);
}

// ---- criterion 7: win-win agreement -----------------------------------------

CriterionResult criterion_winwin(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(7, "decide_vc / saving_rc / saving_rvc agree with the exact solver");
    std::vector<Graph> corpus = random_connected_corpus(200, 8, cfg.seed + 7);
    std::vector<BenchRecord> recs(corpus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
    for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
        const Graph& g = corpus[i];
        recs[i] = run_record("random#" + std::to_string(i), describe(g), [&](BenchRecord& rec) {
            int n = g.vertex_count();
            int m = g.edge_count();
            rec.pass = true;
            auto note = [&](const std::string& msg) {
                rec.pass = false;
                if (rec.detail.empty()) rec.detail = msg;
            };

            VerifyOptions serial;
            serial.parallel = false;
            for (Variant variant : {Variant::RC, Variant::RVC, Variant::SRVC}) {
                for (int k = 1; k <= n; ++k) {
                    WinWinOutcome ww = decide_vc(g, variant, k, cfg.limits);
                    SolveReport ex = decide(g, variant, k, cfg.limits);
                    if (ww.yes != ex.yes) {
                        note(to_string(variant) + " k=" + std::to_string(k) + ": winwin=" +
                             std::to_string(ww.yes) + " exact=" + std::to_string(ex.yes));
                        continue;
                    }
                    if (ww.yes && ww.branch != WinWinBranch::BoundedFallback) {
                        bool witness_ok = false;
                        int colors = -1;
                        if (ww.edge_witness) {
                            colors = ww.edge_witness->count;
                            witness_ok = colors <= k && is_rainbow_edge(g, *ww.edge_witness, serial).ok;
                        } else if (ww.vertex_witness) {
                            colors = ww.vertex_witness->count;
                            witness_ok = colors <= k &&
                                         (variant == Variant::RVC
                                              ? is_rainbow_vertex(g, *ww.vertex_witness, serial).ok
                                              : is_strong_rainbow_vertex(g, *ww.vertex_witness, serial).ok);
                        }
                        if (!witness_ok)
                            note(to_string(variant) + " k=" + std::to_string(k) + ": structural witness (" +
                                 std::to_string(colors) + " colors) failed re-verification");
                    }
                }
            }
            for (int k = 1; k <= m; ++k) {
                WinWinOutcome sv = saving_rc(g, k, cfg.limits);
                bool exact = decide(g, Variant::RC, m - k, cfg.limits).yes;
                if (sv.yes != exact)
                    note("saving-rc k=" + std::to_string(k) + ": winwin=" + std::to_string(sv.yes) +
                         " exact=" + std::to_string(exact));
            }
            for (int k = 1; k <= n; ++k) {
                WinWinOutcome sv = saving_rvc(g, k, cfg.limits);
                bool exact = n - k >= 0 ? decide(g, Variant::RVC, n - k, cfg.limits).yes : false;
                if (sv.yes != exact)
                    note("saving-rvc k=" + std::to_string(k) + ": winwin=" + std::to_string(sv.yes) +
                         " exact=" + std::to_string(exact));
            }
        });
    }
    for (auto& r : recs) out.add(std::move(r));
    return out.finish(t0);
}

// ---- criterion 8: verifier vs naive oracle ----------------------------------

CriterionResult criterion_verifier_oracle(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(8, "verifiers match exhaustive path enumeration");
    for (int n = 1; n <= 6; ++n) {
        const auto& graphs = connected_graphs_up_to_iso(n);
        std::vector<BenchRecord> recs(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
        for (int i = 0; i < static_cast<int>(graphs.size()); ++i) {
            const Graph& g = graphs[i];
            recs[i] = run_record("exhaustive-n" + std::to_string(n) + "#" + std::to_string(i), describe(g),
                                 [&](BenchRecord& rec) {
                                     Rng rng(cfg.seed + 8000 + n * 100 + i);
                                     rec.pass = true;
                                     for (int variant = 0; variant < 4 && rec.pass; ++variant) {
                                         for (int rep = 0; rep < 200 && rec.pass; ++rep) {
                                             int c = 1 + static_cast<int>(rng.below(4));
                                             if (variant < 2) {
                                                 EdgeColoring col{c, {}};
                                                 col.color.resize(g.edge_count());
                                                 for (int& x : col.color) x = 1 + static_cast<int>(rng.below(c));
                                                 VerifyResult fast =
                                                     variant == 0 ? is_rainbow_edge(g, col)
                                                                  : is_strong_rainbow_edge(g, col);
                                                 VerifyResult naive =
                                                     variant == 0 ? reference::rainbow_edge(g, col)
                                                                  : reference::strong_rainbow_edge(g, col);
                                                 if (fast.ok != naive.ok || fast.failing_pair != naive.failing_pair) {
                                                     rec.pass = false;
                                                     rec.detail = "edge variant " + std::to_string(variant) +
                                                                  " mismatch at rep " + std::to_string(rep);
                                                 }
                                             } else {
                                                 VertexColoring col{c, {}};
                                                 col.color.resize(g.vertex_count());
                                                 for (int& x : col.color) x = 1 + static_cast<int>(rng.below(c));
                                                 VerifyResult fast =
                                                     variant == 2 ? is_rainbow_vertex(g, col)
                                                                  : is_strong_rainbow_vertex(g, col);
                                                 VerifyResult naive =
                                                     variant == 2 ? reference::rainbow_vertex(g, col)
                                                                  : reference::strong_rainbow_vertex(g, col);
                                                 if (fast.ok != naive.ok || fast.failing_pair != naive.failing_pair) {
                                                     rec.pass = false;
                                                     rec.detail = "vertex variant " + std::to_string(variant) +
                                                                  " mismatch at rep " + std::to_string(rep);
                                                 }
                                             }
                                         }
                                     }
                                 });
        }
        for (auto& r : recs) out.add(std::move(r));
    }
    return out.finish(t0);
}

// ---- criterion 9: solver sanity table -----------------------------------------

CriterionResult criterion_sanity(const SuiteConfig& cfg) {
    auto t0 = Clock::now();
    CriterionBuilder out(9, "solver sanity: rc(tree)=m, rc(K_n)=1, rc(C_6)=3, rvc(P_4)=2, strong >= plain");

    auto expect_opt = [&](const std::string& name, const Graph& g, Variant v, int want) {
        out.add(run_record(name, "optimize " + to_string(v), [&](BenchRecord& rec) {
            SolveReport r = optimize(g, v, cfg.limits);
            rec.pass = r.optimum == want;
            if (r.edge_witness) rec.witness_checksum = checksum_of(*r.edge_witness);
            if (r.vertex_witness) rec.witness_checksum = checksum_of(*r.vertex_witness);
            rec.detail = "got " + std::to_string(r.optimum) + " want " + std::to_string(want);
        }));
    };

    // Trees: rc equals the edge count.
    expect_opt("path5", make_path(5), Variant::RC, 4);
    expect_opt("star5", make_star(5), Variant::RC, 5);
    Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    expect_opt("spider7", spider, Variant::RC, 6);

    for (int n = 2; n <= 8; ++n) expect_opt("complete" + std::to_string(n), make_complete(n), Variant::RC, 1);

    // Frozen values recomputed here with the unrestricted reference oracle.
    out.add(run_record("cycle6", "rc via brute force", [&](BenchRecord& rec) {
        Graph g = make_cycle(6);
        bool naive2 = reference::decide_rc(g, 2);
        bool naive3 = reference::decide_rc(g, 3);
        SolveReport r = optimize(g, Variant::RC, cfg.limits);
        rec.pass = !naive2 && naive3 && r.optimum == 3;
        rec.detail = "rc=" + std::to_string(r.optimum);
    }));
    out.add(run_record("path4", "rvc via brute force", [&](BenchRecord& rec) {
        Graph g = make_path(4);
        bool naive1 = reference::decide_rvc(g, 1);
        bool naive2 = reference::decide_rvc(g, 2);
        SolveReport r = optimize(g, Variant::RVC, cfg.limits);
        rec.pass = !naive1 && naive2 && r.optimum == 2;
        rec.detail = "rvc=" + std::to_string(r.optimum);
    }));

    std::vector<Graph> corpus = random_connected_corpus(200, 8, cfg.seed + 9);
    std::vector<BenchRecord> recs(corpus.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.parallel)
#endif
    for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
        const Graph& g = corpus[i];
        recs[i] = run_record("random#" + std::to_string(i), describe(g), [&](BenchRecord& rec) {
            int rc = optimize(g, Variant::RC, cfg.limits).optimum;
            int src = optimize(g, Variant::SRC, cfg.limits, nullptr, rc).optimum;
            int rvc = optimize(g, Variant::RVC, cfg.limits).optimum;
            int srvc = optimize(g, Variant::SRVC, cfg.limits, nullptr, rvc).optimum;
            int z = bridges(g).count();
            rec.pass = src >= rc && rc >= z && srvc >= rvc && rc <= g.vertex_count() - 1 &&
                       rvc <= g.vertex_count();
            rec.detail = "rc=" + std::to_string(rc) + " src=" + std::to_string(src) +
                         " rvc=" + std::to_string(rvc) + " srvc=" + std::to_string(srvc);
        });
    }
    for (auto& r : recs) out.add(std::move(r));
    return out.finish(t0);
}

}  // namespace

std::vector<int> all_criteria() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

CriterionResult run_criterion(int id, const SuiteConfig& cfg) {
    switch (id) {
        case 1: return criterion_reductions(cfg);
        case 2: return criterion_srvc_characterization(cfg);
        case 3: return criterion_vertex_bounds(cfg);
        case 4: return criterion_separator_bound(cfg);
        case 5: return criterion_threshold_exact(cfg);
        case 6: return criterion_bounded_coloring(cfg);
        case 7: return criterion_winwin(cfg);
        case 8: return criterion_verifier_oracle(cfg);
        case 9: return criterion_sanity(cfg);
        default: throw input_error("unknown criterion " + std::to_string(id));
    }
}

std::vector<CriterionResult> run_suite(const SuiteConfig& cfg) {
    std::vector<CriterionResult> out;
    for (int id : all_criteria()) out.push_back(run_criterion(id, cfg));
    return out;
}

const std::vector<Graph>& connected_graphs_up_to_iso(int n) {
    static std::map<int, std::vector<Graph>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    if (n < 1 || n > 7) throw input_error("connected_graphs_up_to_iso: n out of range");
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    int pc = static_cast<int>(all_pairs.size());

    std::vector<int> pair_index(n * n, -1);
    for (int i = 0; i < pc; ++i) {
        auto [u, v] = all_pairs[i];
        pair_index[u * n + v] = pair_index[v * n + u] = i;
    }

    // Pair-index relabeling table per permutation.
    std::vector<std::vector<int>> perm_tables;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        std::vector<int> table(pc);
        for (int i = 0; i < pc; ++i) {
            auto [u, v] = all_pairs[i];
            table[i] = pair_index[perm[u] * n + perm[v]];
        }
        perm_tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<char> seen(std::size_t{1} << pc, 0);
    std::vector<Graph> graphs;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pc); ++mask) {
        if (n > 1 && __builtin_popcount(mask) < n - 1) continue;

        // Connectivity over the mask.
        std::uint32_t comp = 1;  // vertex bitmask
        bool grew = true;
        while (grew) {
            grew = false;
            for (int i = 0; i < pc; ++i) {
                if (!((mask >> i) & 1)) continue;
                auto [u, v] = all_pairs[i];
                bool cu = (comp >> u) & 1, cv = (comp >> v) & 1;
                if (cu != cv) {
                    comp |= (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
                    grew = true;
                }
            }
        }
        if (comp != (std::uint32_t{1} << n) - 1) continue;

        std::uint32_t canonical = mask;
        for (const auto& table : perm_tables) {
            std::uint32_t relabeled = 0;
            std::uint32_t rest = mask;
            while (rest) {
                int i = __builtin_ctz(rest);
                rest &= rest - 1;
                relabeled |= std::uint32_t{1} << table[i];
            }
            canonical = std::min(canonical, relabeled);
        }
        if (seen[canonical]) continue;
        seen[canonical] = 1;

        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < pc; ++i)
            if ((mask >> i) & 1) edges.push_back(all_pairs[i]);
        graphs.emplace_back(n, std::move(edges));
    }
    return cache.emplace(n, std::move(graphs)).first->second;
}

std::vector<Graph> random_connected_corpus(int count, int max_n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int n = 2 + static_cast<int>(rng.below(max_n - 1));
        int percent = 25 + static_cast<int>(rng.below(60));
        out.push_back(make_random_connected(n, percent, rng));
    }
    return out;
}

std::vector<Graph> cover_structured_corpus(int count, int max_p, int max_n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        int p = 1 + static_cast<int>(rng.below(max_p));
        int n = p + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - p)));
        out.push_back(make_cover_structured(p, n, 50, rng));
    }
    return out;
}

}  // namespace rainbow
