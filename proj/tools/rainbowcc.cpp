#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/fpt.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/io.hpp"
#include "rainbow/reductions.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/suite.hpp"
#include "rainbow/verify.hpp"

namespace {

using nlohmann::json;
using namespace rainbow;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInvariant = 4;

struct SolveArgs {
    std::string graph_path;
    std::string variant = "rc";
    int k = -1;
    std::string pairs_path;
    std::uint64_t budget = 100'000'000;
    std::string witness_out;
    std::string out_path;
    bool as_json = false;
};

json coloring_json(const EdgeColoring& c) {
    return json{{"kind", "edge"}, {"count", c.count}, {"colors", c.color}};
}
json coloring_json(const VertexColoring& c) {
    return json{{"kind", "vertex"}, {"count", c.count}, {"colors", c.color}};
}

void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out_path);
        if (!f) throw input_error("cannot write " + out_path);
        f << payload;
    }
}

void write_witness_files(const std::string& path, const SolveReport& r) {
    if (path.empty()) return;
    if (r.edge_witness) write_coloring_file(path, *r.edge_witness);
    if (r.vertex_witness) write_coloring_file(path, *r.vertex_witness);
}

int run_solve(const SolveArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    auto variant = variant_from_string(args.variant);
    if (!variant) throw input_error("unknown variant " + args.variant);

    std::optional<PairSet> pairs;
    if (*variant == Variant::SSRVC) {
        if (args.pairs_path.empty()) throw input_error("ssrvc requires --pairs");
        pairs = read_pairs_file(args.pairs_path, g);
    } else if (!args.pairs_path.empty()) {
        throw input_error("--pairs is only meaningful for ssrvc");
    }

    SolveLimits limits{args.budget};
    SolveReport r = args.k >= 0 ? decide(g, *variant, args.k, limits, pairs ? &*pairs : nullptr)
                                : optimize(g, *variant, limits, pairs ? &*pairs : nullptr);

    std::ostringstream text;
    json doc;
    doc["variant"] = to_string(r.variant);
    doc["mode"] = r.mode == SolveMode::Decide ? "decide" : "optimize";
    doc["nodes_expanded"] = r.nodes_expanded;
    doc["budget"] = args.budget;
    text << "variant: " << to_string(r.variant) << "\n";
    if (r.mode == SolveMode::Decide) {
        doc["k"] = r.k;
        doc["answer"] = r.yes ? "yes" : "no";
        text << "k: " << r.k << "\nanswer: " << (r.yes ? "yes" : "no") << "\n";
    } else {
        doc["optimum"] = r.optimum;
        text << "optimum: " << r.optimum << "\n";
    }
    text << "nodes: " << r.nodes_expanded << "\n";
    if (r.edge_witness) {
        doc["witness"] = coloring_json(*r.edge_witness);
        text << "witness:\n";
        write_coloring(text, *r.edge_witness);
    }
    if (r.vertex_witness) {
        doc["witness"] = coloring_json(*r.vertex_witness);
        text << "witness:\n";
        write_coloring(text, *r.vertex_witness);
    }

    emit(args.out_path, args.as_json ? doc.dump(2) + "\n" : text.str());
    write_witness_files(args.witness_out, r);
    return (r.mode == SolveMode::Decide && !r.yes) ? kExitNo : kExitYes;
}

struct VerifyArgs {
    std::string graph_path;
    std::string coloring_path;
    std::string variant = "rc";
    std::string pairs_path;
};

int run_verify(const VerifyArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    auto variant = variant_from_string(args.variant);
    if (!variant) throw input_error("unknown variant " + args.variant);

    std::ifstream cf(args.coloring_path);
    if (!cf) throw input_error("cannot open " + args.coloring_path);

    VerifyResult res;
    switch (*variant) {
        case Variant::RC: res = is_rainbow_edge(g, read_edge_coloring(cf, g)); break;
        case Variant::SRC: res = is_strong_rainbow_edge(g, read_edge_coloring(cf, g)); break;
        case Variant::RVC: res = is_rainbow_vertex(g, read_vertex_coloring(cf, g)); break;
        case Variant::SRVC: res = is_strong_rainbow_vertex(g, read_vertex_coloring(cf, g)); break;
        case Variant::SSRVC: {
            if (args.pairs_path.empty()) throw input_error("ssrvc requires --pairs");
            PairSet p = read_pairs_file(args.pairs_path, g);
            res = is_subset_srvc(g, read_vertex_coloring(cf, g), p);
            break;
        }
    }
    if (res.ok) {
        std::cout << "ok\n";
        return kExitYes;
    }
    std::cout << "fail " << res.failing_pair->first << " " << res.failing_pair->second << "\n";
    return kExitNo;
}

struct ReduceArgs {
    std::string graph_path;
    std::string from = "coloring";
    std::string to = "srvc";
    int k = 3;
    std::string pairs_path;
    std::string out_prefix = "reduction";
    std::string dot_path;
};

int run_reduce(const ReduceArgs& args) {
    Graph g = read_graph_file(args.graph_path);

    auto emit_target = [&](const Graph& target, const PairSet* pairs, const std::vector<RoleEntry>& roles) {
        write_graph_file(args.out_prefix + ".graph", target);
        if (pairs) write_pairs_file(args.out_prefix + ".pairs", *pairs);
        write_roles_file(args.out_prefix + ".roles", roles);
        if (!args.dot_path.empty()) {
            std::ofstream dot(args.dot_path);
            write_dot(dot, target);
        }
        std::cout << "graph: " << args.out_prefix << ".graph (n=" << target.vertex_count()
                  << " m=" << target.edge_count() << ")\n";
        if (pairs) std::cout << "pairs: " << args.out_prefix << ".pairs (" << pairs->pairs.size() << ")\n";
        std::cout << "roles: " << args.out_prefix << ".roles\n";
    };

    if (args.from == "coloring" && args.to == "ssrvc") {
        ColoringToSsrvc art = reduce_coloring_to_ssrvc(g, args.k);
        emit_target(art.instance.graph, &art.instance.pairs, art.roles);
        return kExitYes;
    }
    if (args.from == "coloring" && args.to == "srvc") {
        ColoringToSsrvc first = reduce_coloring_to_ssrvc(g, args.k);
        SsrvcToSrvc second = reduce_ssrvc_to_srvc(first.instance);
        emit_target(second.graph, nullptr, second.roles);
        return kExitYes;
    }
    if (args.from == "ssrvc" && args.to == "srvc") {
        if (args.pairs_path.empty()) throw input_error("--from ssrvc requires --pairs");
        SsrvcInstance inst{g, read_pairs_file(args.pairs_path, g), args.k};
        SsrvcToSrvc art = reduce_ssrvc_to_srvc(inst);
        emit_target(art.graph, nullptr, art.roles);
        return kExitYes;
    }
    throw input_error("unsupported reduction " + args.from + " -> " + args.to);
}

struct GenerateArgs {
    std::string family = "path";
    int n = 5;
    int base = 3;
    int p = 1;
    int bridge_count = 5;
    int percent = 50;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string dot_path;
};

int run_generate(const GenerateArgs& args) {
    Rng rng(args.seed);
    Graph g = [&] {
        if (args.family == "path") return make_path(args.n);
        if (args.family == "cycle") return make_cycle(args.n);
        if (args.family == "complete") return make_complete(args.n);
        if (args.family == "star") return make_star(args.n - 1);
        if (args.family == "corona") return make_corona_of_complete(args.base);
        if (args.family == "random-connected") return make_random_connected(args.n, args.percent, rng);
        if (args.family == "pendant-heavy") return make_pendant_heavy(args.p, args.bridge_count);
        throw input_error("unknown family " + args.family);
    }();

    std::ostringstream os;
    os << "# family=" << args.family << " seed=" << args.seed << "\n";
    write_graph(os, g);
    emit(args.out_path, os.str());
    if (!args.dot_path.empty()) {
        std::ofstream dot(args.dot_path);
        write_dot(dot, g);
    }
    return kExitYes;
}

struct FptArgs {
    std::string graph_path;
    std::string variant;
    std::string saving;
    int k = 1;
    std::uint64_t budget = 100'000'000;
    std::string witness_out;
    bool as_json = false;
};

int run_fpt(const FptArgs& args) {
    Graph g = read_graph_file(args.graph_path);
    SolveLimits limits{args.budget};
    if (args.variant.empty() == args.saving.empty())
        throw input_error("use exactly one of --variant or --saving");

    WinWinOutcome out;
    std::string problem;
    if (!args.saving.empty()) {
        if (args.saving == "rc")
            out = saving_rc(g, args.k, limits);
        else if (args.saving == "rvc")
            out = saving_rvc(g, args.k, limits);
        else
            throw input_error("--saving must be rc or rvc");
        problem = "saving-" + args.saving;
    } else {
        auto variant = variant_from_string(args.variant);
        if (!variant) throw input_error("unknown variant " + args.variant);
        out = decide_vc(g, *variant, args.k, limits);
        problem = args.variant;
    }

    if (args.as_json) {
        json doc{{"problem", problem},
                 {"k", args.k},
                 {"branch", to_string(out.branch)},
                 {"answer", out.yes ? "yes" : "no"},
                 {"solver_nodes", out.solver_nodes}};
        if (out.edge_witness) doc["witness"] = coloring_json(*out.edge_witness);
        if (out.vertex_witness) doc["witness"] = coloring_json(*out.vertex_witness);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "problem: " << problem << "\nk: " << args.k << "\nbranch: " << to_string(out.branch)
                  << "\nanswer: " << (out.yes ? "yes" : "no") << "\n";
        if (out.edge_witness) write_coloring(std::cout, *out.edge_witness);
        if (out.vertex_witness) write_coloring(std::cout, *out.vertex_witness);
    }
    if (!args.witness_out.empty()) {
        if (out.edge_witness) write_coloring_file(args.witness_out, *out.edge_witness);
        if (out.vertex_witness) write_coloring_file(args.witness_out, *out.vertex_witness);
    }
    return out.yes ? kExitYes : kExitNo;
}

struct BenchArgs {
    std::uint64_t seed = 0;
    std::uint64_t budget = 100'000'000;
    std::vector<int> criteria;
    std::string out_path;
    bool as_json = false;
    bool timings = false;
    bool records = false;
};

int run_bench(const BenchArgs& args) {
    SuiteConfig cfg;
    cfg.seed = args.seed;
    cfg.limits.node_budget = args.budget;
    std::vector<int> ids = args.criteria.empty() ? all_criteria() : args.criteria;

    bool all_pass = true;
    json doc;
    doc["seed"] = args.seed;
    doc["criteria"] = json::array();
    std::ostringstream text;
    text << "# seed=" << args.seed << "\n";

    for (int id : ids) {
        CriterionResult r = run_criterion(id, cfg);
        all_pass = all_pass && r.pass;
        json jc{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"instances", r.instances}};
        if (!r.detail.empty()) jc["detail"] = r.detail;
        if (args.timings) jc["wall_ms"] = r.wall_ms;
        text << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " [" << r.instances
             << " instances]";
        if (args.timings) text << " (" << r.wall_ms << " ms)";
        text << "\n";
        if (args.records || !r.pass) {
            jc["records"] = json::array();
            for (const BenchRecord& rec : r.records) {
                if (!args.records && rec.pass) continue;
                json jr{{"instance", rec.instance}, {"check", rec.check}, {"pass", rec.pass}};
                if (!rec.witness_checksum.empty()) jr["witness_checksum"] = rec.witness_checksum;
                if (!rec.detail.empty()) jr["detail"] = rec.detail;
                if (args.timings) jr["wall_ms"] = rec.wall_ms;
                jc["records"].push_back(jr);
                if (!rec.pass)
                    text << "  fail " << rec.instance << " " << rec.check << ": " << rec.detail << "\n";
            }
        }
        doc["criteria"].push_back(jc);
    }
    emit(args.out_path, args.as_json ? doc.dump(2) + "\n" : text.str());
    return all_pass ? kExitYes : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow connectivity toolkit: solve, verify, reduce, generate, fpt, bench"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "exact decision or optimization for rc/src/rvc/srvc/ssrvc");
    solve_cmd->add_option("graph", solve_args.graph_path, "graph file")->required();
    solve_cmd->add_option("--variant", solve_args.variant, "rc|src|rvc|srvc|ssrvc")->required();
    solve_cmd->add_option("--k", solve_args.k, "decide number <= k (omit to optimize)");
    solve_cmd->add_option("--pairs", solve_args.pairs_path, "pair-set file (ssrvc)");
    solve_cmd->add_option("--budget", solve_args.budget, "search node budget");
    solve_cmd->add_option("--witness-out", solve_args.witness_out, "write the witness coloring here");
    solve_cmd->add_option("--out", solve_args.out_path, "write the report here instead of stdout");
    solve_cmd->add_flag("--json", solve_args.as_json, "emit JSON");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check a coloring certificate");
    verify_cmd->add_option("graph", verify_args.graph_path, "graph file")->required();
    verify_cmd->add_option("--coloring", verify_args.coloring_path, "coloring file")->required();
    verify_cmd->add_option("--variant", verify_args.variant, "rc|src|rvc|srvc|ssrvc")->required();
    verify_cmd->add_option("--pairs", verify_args.pairs_path, "pair-set file (ssrvc)");

    ReduceArgs reduce_args;
    auto* reduce_cmd = app.add_subcommand("reduce", "build hardness-reduction instances");
    reduce_cmd->add_option("graph", reduce_args.graph_path, "source graph file")->required();
    reduce_cmd->add_option("--from", reduce_args.from, "coloring|ssrvc");
    reduce_cmd->add_option("--to", reduce_args.to, "ssrvc|srvc");
    reduce_cmd->add_option("--k", reduce_args.k, "color budget (>= 3)");
    reduce_cmd->add_option("--pairs", reduce_args.pairs_path, "pair-set file (for --from ssrvc)");
    reduce_cmd->add_option("--out", reduce_args.out_prefix, "output prefix");
    reduce_cmd->add_option("--dot", reduce_args.dot_path, "also write a DOT rendering");

    GenerateArgs gen_args;
    auto* gen_cmd = app.add_subcommand("generate", "instance generators");
    gen_cmd->add_option("--family", gen_args.family,
                        "path|cycle|complete|star|corona|random-connected|pendant-heavy")
        ->required();
    gen_cmd->add_option("--n", gen_args.n, "vertex count");
    gen_cmd->add_option("--base", gen_args.base, "corona base clique size");
    gen_cmd->add_option("--p", gen_args.p, "pendant-heavy center count");
    gen_cmd->add_option("--bridges", gen_args.bridge_count, "pendant-heavy bridge count");
    gen_cmd->add_option("--percent", gen_args.percent, "random edge probability in percent");
    gen_cmd->add_option("--seed", gen_args.seed, "RNG seed (recorded in the output)");
    gen_cmd->add_option("--out", gen_args.out_path, "output file (default stdout)");
    gen_cmd->add_option("--dot", gen_args.dot_path, "also write a DOT rendering");

    FptArgs fpt_args;
    auto* fpt_cmd = app.add_subcommand("fpt", "win-win procedures (vertex cover / saving)");
    fpt_cmd->add_option("graph", fpt_args.graph_path, "graph file")->required();
    fpt_cmd->add_option("--variant", fpt_args.variant, "rc|rvc|srvc (vertex-cover dispatch)");
    fpt_cmd->add_option("--saving", fpt_args.saving, "rc|rvc (saving-k)");
    fpt_cmd->add_option("--k", fpt_args.k, "bound / colors saved")->required();
    fpt_cmd->add_option("--budget", fpt_args.budget, "solver fallback budget");
    fpt_cmd->add_option("--witness-out", fpt_args.witness_out, "write the witness coloring here");
    fpt_cmd->add_flag("--json", fpt_args.as_json, "emit JSON");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "run the acceptance matrix");
    bench_cmd->add_option("--seed", bench_args.seed, "corpus seed");
    bench_cmd->add_option("--budget", bench_args.budget, "solver node budget");
    bench_cmd->add_option("--criteria", bench_args.criteria, "criteria ids (default: all)");
    bench_cmd->add_option("--out", bench_args.out_path, "write the report here");
    bench_cmd->add_flag("--json", bench_args.as_json, "emit JSON");
    bench_cmd->add_flag("--timings", bench_args.timings, "include wall times (non-reproducible bytes)");
    bench_cmd->add_flag("--records", bench_args.records, "include every per-instance record");

    try {
        app.parse(argc, argv);
        if (*solve_cmd) return run_solve(solve_args);
        if (*verify_cmd) return run_verify(verify_args);
        if (*reduce_cmd) return run_reduce(reduce_args);
        if (*gen_cmd) return run_generate(gen_args);
        if (*fpt_cmd) return run_fpt(fpt_args);
        if (*bench_cmd) return run_bench(bench_args);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const invariant_violation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
