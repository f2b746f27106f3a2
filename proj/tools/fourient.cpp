// Command-line front end: loads a JSON problem file (vertices, edges, A, B),
// runs the requested count / class / verification routine, and prints a
// deterministic JSON or table report on stdout. Timing goes to stderr so the
// stdout payload is byte-identical across runs.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourient/enumeration.hpp"
#include "fourient/equivalence.hpp"
#include "fourient/problem.hpp"
#include "fourient/series.hpp"

namespace {

using nlohmann::json;
using namespace fourient;

constexpr int kExitVerdictFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeGuard = 3;

struct Options {
    std::string graph_path;
    std::string solid = "none";
    std::string mode = "cyc";
    std::string which;
    std::string format = "json";
    std::uint64_t seed = 1;
    int max_n = 5;
    int threads = 1;
};

json problem_json(const ProblemFile& problem) {
    json doc;
    doc["digest"] = problem.digest();
    doc["name"] = problem.name;
    doc["vertices"] = problem.vertices;
    json edges = json::array();
    for (const Edge& e : problem.edges) edges.push_back({e.tail, e.head});
    doc["edges"] = std::move(edges);
    json a = json::array();
    for (const VertexPair& p : problem.a_pairs) a.push_back({p.u, p.v});
    doc["A"] = std::move(a);
    json b = json::array();
    for (const VertexPair& p : problem.b_pairs) b.push_back({p.u, p.v});
    doc["B"] = std::move(b);
    return doc;
}

json counts_json(const CountReport& report) {
    json counts = json::array();
    for (const auto& [mask, count] : report.counts) {
        counts.push_back({{"solid_mask", mask}, {"count", count}});
    }
    return counts;
}

void emit_count_table(std::ostream& out, const CountReport& report, bool with_verdict) {
    out << "solid_mask  count\n";
    for (const auto& [mask, count] : report.counts) {
        out << mask << "  " << count << "\n";
    }
    if (with_verdict) out << "verdict: " << (report.verdict ? "true" : "false") << "\n";
}

void emit_report(const Options& opt, const json& report) {
    if (opt.format == "json") {
        std::cout << report.dump(2) << "\n";
    }
}

// ---- count ----------------------------------------------------------------

int run_count(const Options& opt) {
    const ProblemFile problem = ProblemFile::load(opt.graph_path);
    const Multigraph g = problem.graph();
    const ConstraintSystem c = problem.constraints();
    const SolidSpec spec = parse_solid_spec(opt.solid, g.edge_count());

    json report;
    report["command"] = "count";
    report["input"] = problem_json(problem);
    report["parameters"] = {{"solid", spec.text}, {"threads", opt.threads}};

    bool verdict_ok = true;
    if (spec.mask.has_value()) {
        const std::uint64_t count = count_valid(g, c, *spec.mask, opt.threads);
        report["results"] = {{"solid_mask", *spec.mask}, {"count", count}};
        if (opt.format == "table") {
            std::cout << "solid_mask " << *spec.mask << " count " << count << "\n";
        }
    } else {
        const CountReport counts = verify_solid_set_independence(g, c, kMaxEdgesAllSolidSets, opt.threads);
        report["results"] = {{"counts", counts_json(counts)}, {"verdict", counts.verdict}};
        report["verdict"] = counts.verdict;
        verdict_ok = counts.verdict;
        if (opt.format == "table") emit_count_table(std::cout, counts, true);
    }
    emit_report(opt, report);
    return verdict_ok ? 0 : kExitVerdictFalse;
}

// ---- classes ---------------------------------------------------------------

json class_json(const EquivalenceClass& cls, int edge_count) {
    json entry;
    entry["representative"] = cls.representative.to_string();
    entry["size"] = cls.size;
    json two_way = json::array();
    json zero_way = json::array();
    for (int e = 0; e < edge_count; ++e) {
        if ((cls.two_way_edges >> e) & 1) two_way.push_back(e);
        if ((cls.zero_way_edges >> e) & 1) zero_way.push_back(e);
    }
    entry["two_way_edges"] = std::move(two_way);
    entry["zero_way_edges"] = std::move(zero_way);
    return entry;
}

int run_classes(const Options& opt) {
    const ProblemFile problem = ProblemFile::load(opt.graph_path);
    const Multigraph g = problem.graph();
    const ConstraintSystem c = problem.constraints();
    const ReversalMode mode = reversal_mode_from_string(opt.mode);
    const SolidSpec spec = parse_solid_spec(opt.solid, g.edge_count());

    json report;
    report["command"] = "classes";
    report["input"] = problem_json(problem);
    report["parameters"] = {{"solid", spec.text}, {"mode", to_string(mode)}};

    bool verdict_ok = true;
    if (spec.mask.has_value()) {
        const ClassPartition partition = equivalence_classes(g, c, *spec.mask, mode);
        const ClassPartition valid = filter_valid_classes(partition, g, c, mode);
        json classes = json::array();
        for (const EquivalenceClass& cls : valid.classes) {
            classes.push_back(class_json(cls, g.edge_count()));
        }
        report["results"] = {{"solid_mask", *spec.mask},
                             {"member_count", partition.members.size()},
                             {"class_count", partition.classes.size()},
                             {"valid_class_count", valid.classes.size()},
                             {"valid_classes", std::move(classes)}};
        if (opt.format == "table") {
            std::cout << "members " << partition.members.size() << " classes "
                      << partition.classes.size() << " valid_classes " << valid.classes.size()
                      << "\n";
            for (const EquivalenceClass& cls : valid.classes) {
                std::cout << cls.representative.to_string() << "  size " << cls.size << "\n";
            }
        }
    } else {
        const CountReport counts = verify_class_solid_set_independence(g, c, mode);
        report["results"] = {{"counts", counts_json(counts)}, {"verdict", counts.verdict}};
        report["verdict"] = counts.verdict;
        verdict_ok = counts.verdict;
        if (opt.format == "table") emit_count_table(std::cout, counts, true);
    }
    emit_report(opt, report);
    return verdict_ok ? 0 : kExitVerdictFalse;
}

// ---- verify ----------------------------------------------------------------

std::vector<BigInt> random_weights(std::mt19937_64& rng, int count) {
    // Values in [-3, 3], derived directly from the engine output so the
    // stream is identical across compilers.
    std::vector<BigInt> weights;
    weights.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        weights.emplace_back(static_cast<long>(rng() % 7) - 3);
    }
    return weights;
}

int run_verify(const Options& opt) {
    json report;
    report["command"] = "verify";
    report["parameters"] = {{"which", opt.which}};
    bool verdict = false;

    if (opt.which == "ira") {
        report["parameters"]["max_n"] = opt.max_n;
        const IraReport ira = verify_ira(opt.max_n);
        json lhs = json::array();
        json rhs = json::array();
        for (int n = 0; n <= ira.lhs.order(); ++n) {
            lhs.push_back(ira.lhs.coefficient(n).str());
            rhs.push_back(ira.rhs.coefficient(n).str());
        }
        json weighted = json::array();
        for (const BigInt& value : ira.tournament_weighted_sums) weighted.push_back(value.str());
        report["results"] = {{"max_n", ira.max_n},
                             {"strongly_connected_tournaments", ira.tournament_counts},
                             {"strongly_connected_digraphs", ira.digraph_counts},
                             {"tournament_weighted_sums", std::move(weighted)},
                             {"lhs_egf", std::move(lhs)},
                             {"rhs_egf", std::move(rhs)}};
        verdict = ira.verdict;
        if (opt.format == "table") {
            std::cout << "t:";
            for (std::uint64_t t : ira.tournament_counts) std::cout << " " << t;
            std::cout << "\ns:";
            for (std::uint64_t s : ira.digraph_counts) std::cout << " " << s;
            std::cout << "\nverdict: " << (verdict ? "true" : "false") << "\n";
        }
    } else {
        const ProblemFile problem = ProblemFile::load(opt.graph_path);
        const Multigraph g = problem.graph();
        const ConstraintSystem c = problem.constraints();
        report["input"] = problem_json(problem);

        if (opt.which == "main") {
            const CountReport counts = verify_solid_set_independence(g, c, kMaxEdgesAllSolidSets, opt.threads);
            report["results"] = {{"counts", counts_json(counts)}, {"verdict", counts.verdict}};
            verdict = counts.verdict;
            if (opt.format == "table") emit_count_table(std::cout, counts, true);
        } else if (opt.which == "eqclass-cyc" || opt.which == "eqclass-coc" ||
                   opt.which == "eqclass-cc") {
            const ReversalMode mode = reversal_mode_from_string(opt.which.substr(8));
            const CountReport counts = verify_class_solid_set_independence(g, c, mode);
            report["results"] = {{"mode", to_string(mode)},
                                 {"counts", counts_json(counts)},
                                 {"verdict", counts.verdict}};
            verdict = counts.verdict;
            if (opt.format == "table") emit_count_table(std::cout, counts, true);
        } else if (opt.which == "identity") {
            report["parameters"]["seed"] = opt.seed;
            std::mt19937_64 rng(opt.seed);
            ArcWeights weights;
            weights.y = random_weights(rng, 2 * g.edge_count());
            weights.z = random_weights(rng, 2 * g.edge_count());
            const IdentityValue value = eval_identity(g, weights);
            json y = json::array();
            json z = json::array();
            for (const BigInt& w : weights.y) y.push_back(static_cast<long>(w));
            for (const BigInt& w : weights.z) z.push_back(static_cast<long>(w));
            report["results"] = {{"y", std::move(y)},
                                 {"z", std::move(z)},
                                 {"orientation_side", value.orientation_side.str()},
                                 {"fourientation_side", value.fourientation_side.str()},
                                 {"verdict", value.equal()}};
            verdict = value.equal();
            if (opt.format == "table") {
                std::cout << "orientation_side " << value.orientation_side << "\n"
                          << "fourientation_side " << value.fourientation_side << "\n"
                          << "verdict: " << (verdict ? "true" : "false") << "\n";
            }
        } else {
            throw problem_error("unknown verification '" + opt.which +
                                "' (expected main, eqclass-cyc, eqclass-coc, eqclass-cc, "
                                "identity or ira)");
        }
    }

    report["verdict"] = verdict;
    emit_report(opt, report);
    return verdict ? 0 : kExitVerdictFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of constrained graph orientations, subgraphs and "
                 "fourientations"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* cmd, bool graph_required) {
        auto* graph = cmd->add_option("--graph", opt.graph_path, "problem file (JSON)");
        if (graph_required) graph->required();
        cmd->add_option("--format", opt.format, "json or table")
            ->check(CLI::IsMember({"json", "table"}));
    };

    CLI::App* count = app.add_subcommand("count", "count valid fourientations per solid set");
    add_common(count, true);
    count->add_option("--solid", opt.solid, "none, all, every, or edge index list");
    count->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* classes = app.add_subcommand("classes", "reversal equivalence classes");
    add_common(classes, true);
    classes->add_option("--solid", opt.solid, "none, all, every, or edge index list");
    classes->add_option("--mode", opt.mode, "cyc, coc or cc")
        ->check(CLI::IsMember({"cyc", "coc", "cc"}));

    CLI::App* verify = app.add_subcommand("verify", "run a built-in verification");
    verify->add_option("which", opt.which,
                       "main, eqclass-cyc, eqclass-coc, eqclass-cc, identity or ira")
        ->required();
    add_common(verify, false);
    verify->add_option("--seed", opt.seed, "seed for the identity weights");
    verify->add_option("--max-n", opt.max_n, "truncation order for ira")->check(CLI::PositiveNumber);
    verify->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    const auto started = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        if (count->parsed()) {
            exit_code = run_count(opt);
        } else if (classes->parsed()) {
            exit_code = run_classes(opt);
        } else {
            if (opt.which != "ira" && opt.graph_path.empty()) {
                throw problem_error("--graph is required for this verification");
            }
            exit_code = run_verify(opt);
        }
    } catch (const size_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
    return exit_code;
}
