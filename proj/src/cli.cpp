#include "glcs/cli.hpp"

#include <CLI11.hpp>

#include "glcs/cyclic_lcs.hpp"
#include "glcs/dag_lcs.hpp"
#include "glcs/errors.hpp"
#include "glcs/graph_io.hpp"
#include "glcs/oracle.hpp"

namespace glcs {

namespace {

// unrolling depth used by `oracle seq-ic` on cyclic targets without --max-unroll
constexpr size_t default_probe_unroll = 4;

std::string format_length(ExtLen len) {
    if (len.is_pos_inf()) {
        return "inf";
    }
    if (len.is_neg_inf()) {
        return "no-solution";
    }
    return std::to_string(len.value());
}

AtomicGraph load_atomic(const std::string& path) {
    try {
        return atomize(read_graph_file(path));
    }
    catch (const ParseError& e) {
        throw InvalidGraph(e.line() == 0 ? e.reason() : path + ": " + e.what());
    }
}

void run_lcs(const std::string& p1, const std::string& p2, std::ostream& out) {
    auto g1 = load_atomic(p1);
    auto g2 = load_atomic(p2);
    out << lcs_dag(g1, g2) << "\n";
}

void run_seq_ic(const std::string& p1, const std::string& p2, const std::string& p3,
                bool witness, std::ostream& out) {
    auto g1 = load_atomic(p1);
    auto g2 = load_atomic(p2);
    auto g3 = load_atomic(p3);
    if (g1.empty() || g2.empty() || g3.empty()) {
        throw EmptyGraph();
    }
    if (!is_acyclic(g3)) {
        throw CyclicConstraint();
    }
    if (is_acyclic(g1) && is_acyclic(g2)) {
        if (witness) {
            auto solution = solve_seq_ic_dag(g1, g2, g3);
            out << format_length(solution.length);
            if (solution.witness) {
                out << " " << format_label(*solution.witness);
            }
            out << "\n";
        }
        else {
            out << format_length(seq_ic_lcs_dag(g1, g2, g3)) << "\n";
        }
        return;
    }
    // cyclic targets have no finite witness to offer
    out << format_length(seq_ic_lcs_cyclic(g1, g2, g3)) << "\n";
}

void run_oracle_seq_ic(const std::string& p1, const std::string& p2, const std::string& p3,
                       size_t max_unroll, std::ostream& out) {
    auto g1 = load_atomic(p1);
    auto g2 = load_atomic(p2);
    auto g3 = load_atomic(p3);
    if (g1.empty() || g2.empty() || g3.empty()) {
        throw EmptyGraph();
    }
    if (!is_acyclic(g3)) {
        throw CyclicConstraint();
    }
    if (max_unroll == 0 && is_acyclic(g1) && is_acyclic(g2)) {
        out << format_length(oracle_seq_ic(g1, g2, g3)) << "\n";
        return;
    }
    auto probe = oracle_infinite_probe(g1, g2, g3, max_unroll == 0 ? default_probe_unroll : max_unroll);
    out << (probe.verdict == ProbeVerdict::growing ? "growing" : "stable");
    for (auto value : probe.values) {
        out << " " << format_length(value);
    }
    out << "\n";
}

}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Longest common subsequences of labeled graphs", "glcs"};
    app.require_subcommand(1);

    std::string path1, path2, path3;

    auto* lcs = app.add_subcommand("lcs", "LCS length of two acyclic graphs");
    lcs->add_option("g1", path1, "first graph file")->required();
    lcs->add_option("g2", path2, "second graph file")->required();

    bool witness = false;
    auto* seq_ic = app.add_subcommand("seq-ic", "LCS of g1 and g2 containing a maximal path string of g3");
    seq_ic->add_option("g1", path1, "first target graph file")->required();
    seq_ic->add_option("g2", path2, "second target graph file")->required();
    seq_ic->add_option("g3", path3, "acyclic constraint graph file")->required();
    seq_ic->add_flag("--witness", witness, "also print an optimal string (acyclic targets only)");

    size_t max_unroll = 0;
    auto* oracle = app.add_subcommand("oracle", "brute-force reference answers");
    oracle->require_subcommand(1);
    auto* oracle_seq_ic = oracle->add_subcommand("seq-ic", "enumerate maximal paths, or probe cyclic targets");
    oracle_seq_ic->add_option("g1", path1, "first target graph file")->required();
    oracle_seq_ic->add_option("g2", path2, "second target graph file")->required();
    oracle_seq_ic->add_option("g3", path3, "acyclic constraint graph file")->required();
    oracle_seq_ic->add_option("--max-unroll", max_unroll,
                              "probe with back edges taken up to 1..N times")
        ->check(CLI::Range(size_t(2), size_t(64)));

    auto* atomize_cmd = app.add_subcommand("atomize", "print the one-character-per-vertex form");
    atomize_cmd->add_option("g", path1, "graph file")->required();

    auto* condense_cmd = app.add_subcommand("condense", "print the strongly connected component graph");
    condense_cmd->add_option("g", path1, "graph file")->required();

    std::uint64_t seed = 0;
    size_t vertices = 0, edges = 0, alphabet = 0;
    bool dag_only = false;
    auto* gen = app.add_subcommand("gen", "print a random graph file");
    gen->add_option("--seed", seed, "64-bit seed")->required();
    gen->add_option("--vertices", vertices, "number of vertices")->required();
    gen->add_option("--edges", edges, "number of edges")->required();
    gen->add_option("--alphabet", alphabet, "number of distinct label characters")->required();
    gen->add_flag("--dag", dag_only, "only generate acyclic graphs");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_invalid_input;
    }

    try {
        if (lcs->parsed()) {
            run_lcs(path1, path2, out);
        }
        else if (seq_ic->parsed()) {
            run_seq_ic(path1, path2, path3, witness, out);
        }
        else if (oracle_seq_ic->parsed()) {
            run_oracle_seq_ic(path1, path2, path3, max_unroll, out);
        }
        else if (atomize_cmd->parsed()) {
            out << serialize_graph(load_atomic(path1));
        }
        else if (condense_cmd->parsed()) {
            out << serialize_graph(condense(load_atomic(path1)));
        }
        else if (gen->parsed()) {
            out << serialize_graph(gen_random_graph(seed, vertices, edges, alphabet, dag_only));
        }
    }
    catch (const StructuralError& e) {
        err << "error: " << e.what() << "\n";
        return exit_structural;
    }
    catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return exit_too_large;
    }
    catch (const GlcsError& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid_input;
    }
    return exit_ok;
}

}
