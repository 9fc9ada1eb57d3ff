#ifndef glcs_oracle_hpp
#define glcs_oracle_hpp

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "glcs/ext_len.hpp"
#include "glcs/graph.hpp"

/*
 * Brute-force references for the DP engines. Nothing here shares code with
 * the table fills; every answer is obtained from the problem definitions by
 * enumeration.
 *
 * The graph-level oracle rests on one reduction: every path of a DAG extends
 * to a maximal path without losing subsequences, and the constraint string is
 * drawn from maximal path strings of g3 exactly. So the SEQ-IC-LCS of three
 * DAGs is the maximum of the string SEQ-IC-LCS over all triples of maximal
 * path strings.
 */
namespace glcs {

struct EnumerationCaps {
    size_t max_count = 5000;
    size_t max_len = 32;
};

struct PathStringSet {
    std::set<std::u32string> strings;
    bool truncated = false;
};

/*
 * Acyclic graphs: label strings of every source-to-sink path. Cyclic graphs:
 * label strings of walks from the entry points (in-degree 0 vertices and the
 * vertices of source components) that stop at a sink or at max_len
 * characters. truncated is set whenever a cap binds.
 */
PathStringSet maximal_path_strings(const AtomicGraph& graph, EnumerationCaps caps = {});

// Max over maximal-path string pairs of lcs_strings. Throws TooLarge.
size_t oracle_lcs(const AtomicGraph& g1, const AtomicGraph& g2, EnumerationCaps caps = {});

// Max over maximal-path string triples of seq_ic_lcs_strings. Throws TooLarge.
ExtLen oracle_seq_ic(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3,
                     EnumerationCaps caps = {});

enum class ProbeVerdict { growing, stable };

struct ProbeResult {
    std::vector<ExtLen> values;  // values[t - 1] for unroll count t
    ProbeVerdict verdict = ProbeVerdict::stable;
};

/*
 * Desk-scale test for unbounded answers: oracle_seq_ic on the unrolled
 * targets for t = 1..t_max. Growing if the last two values strictly
 * increase, stable if they are equal. Requires t_max >= 2.
 */
ProbeResult oracle_infinite_probe(const AtomicGraph& g1, const AtomicGraph& g2,
                                  const AtomicGraph& g3, size_t t_max,
                                  EnumerationCaps caps = {});

/*
 * Exact SEQ-IC-LCS for arbitrary targets and an acyclic constraint, by a
 * longest-path search over the product of the three graphs. A state records
 * the last matched vertex of each target (any later match must be reachable
 * by at least one edge) and the last vertex of g3 matched so far along a path
 * starting at an in-degree 0 vertex. Accepting states sit on a sink of g3. A
 * cycle through a useful state means +inf. Cost grows with
 * |V1||V2||V3| * |V1||V2|, so only for small graphs.
 */
ExtLen oracle_seq_ic_product(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3);

/*
 * All strings of length <= max_len that are subsequences of some path string,
 * including the empty string. Each overload walks its own representation:
 * chains of label positions for LabeledGraph, vertices for AtomicGraph, and
 * character sets for CondensedGraph (self-loops allow repeats).
 */
std::set<std::u32string> bounded_subsequences(const LabeledGraph& graph, size_t max_len);
std::set<std::u32string> bounded_subsequences(const AtomicGraph& graph, size_t max_len);
std::set<std::u32string> bounded_subsequences(const CondensedGraph& graph, size_t max_len);

// Unbiased draw from [0, bound) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/*
 * Deterministic random graph from a 64-bit seed (std::mt19937_64). Vertex ids
 * are 1..n_vertices with single-character labels drawn uniformly from the
 * first alphabet_size characters of [a-z][A-Z][0-9]. With dag_only, edges go
 * forward in a random vertex order; otherwise any ordered pair, self-loops
 * included, is a candidate. Throws InfeasibleShape if n_edges exceeds the
 * number of candidates or the alphabet is empty or too large.
 */
LabeledGraph gen_random_graph(std::uint64_t seed, size_t n_vertices, size_t n_edges,
                              size_t alphabet_size, bool dag_only);

}

#endif /* glcs_oracle_hpp */
