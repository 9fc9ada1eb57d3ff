#ifndef glcs_dag_lcs_hpp
#define glcs_dag_lcs_hpp

#include <cstddef>
#include <optional>
#include <string>

#include "glcs/dp_tables.hpp"
#include "glcs/ext_len.hpp"
#include "glcs/graph.hpp"

namespace glcs {

/*
 * LCS table of two acyclic atomic graphs: at(i, j) is the length of a longest
 * common subsequence of the path strings ending at the i-th vertex of g1 and
 * the j-th vertex of g2 (1-based topological ranks).
 */
DpTable2 lcs_table(const AtomicGraph& g1, const TopoOrder& order1,
                   const AtomicGraph& g2, const TopoOrder& order2);

// Length of a longest string in Subseq(g1) & Subseq(g2). Throws CyclicGraph.
size_t lcs_dag(const AtomicGraph& g1, const AtomicGraph& g2);

struct SeqIcOptions {
    // Lets a label-triple match start a candidate from nothing when the
    // constraint vertex has no in-coming edges. Disabling it is only useful
    // for testing the recurrence's base case.
    bool seed_single_match = true;
};

/*
 * The full SEQ-IC table over three acyclic atomic graphs. at(i, j, k) for
 * k >= 1 is the length of a longest common subsequence of the path strings
 * ending at the i-th vertex of g1 and the j-th vertex of g2 that contains a
 * left-maximal path string of g3 ending at its k-th vertex, or -inf. Layer
 * k = 0 holds lcs_table.
 *
 * Every matched cell scans its in(i) x in(j) x in(k) predecessor triples, so
 * the fill runs in O(|E1||E2||E3|) time over O(|V1||V2||V3|) cells.
 */
DpTable3 seq_ic_table(const AtomicGraph& g1, const TopoOrder& order1,
                      const AtomicGraph& g2, const TopoOrder& order2,
                      const AtomicGraph& g3, const TopoOrder& order3,
                      const SeqIcOptions& options = {});

/*
 * Length of a longest common subsequence of g1 and g2 containing a maximal
 * path string of g3 as a subsequence; -inf when no such string exists.
 * Throws EmptyGraph if any graph is empty and CyclicGraph if any is cyclic.
 */
ExtLen seq_ic_lcs_dag(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3,
                      const SeqIcOptions& options = {});

struct DagSeqIcSolution {
    ExtLen length;
    std::optional<std::u32string> witness;
};

// Length plus one optimal string, recovered by tracing back through the table.
DagSeqIcSolution solve_seq_ic_dag(const AtomicGraph& g1, const AtomicGraph& g2,
                                  const AtomicGraph& g3);

// nullopt exactly when seq_ic_lcs_dag is -inf
std::optional<std::u32string> seq_ic_lcs_dag_witness(const AtomicGraph& g1, const AtomicGraph& g2,
                                                     const AtomicGraph& g3);

}

#endif /* glcs_dag_lcs_hpp */
