#ifndef glcs_cyclic_lcs_hpp
#define glcs_cyclic_lcs_hpp

#include <cstddef>
#include <vector>

#include "glcs/dp_tables.hpp"
#include "glcs/ext_len.hpp"
#include "glcs/graph.hpp"

namespace glcs {

/*
 * Pairwise intersections of the label sets of two condensed graphs, indexed
 * by component index. common(i, j) is sorted; has_common(i, j) is the flag
 * matrix M.
 */
class LabelIntersectionIndex {
public:
    LabelIntersectionIndex() = default;
    LabelIntersectionIndex(size_t n1, size_t n2)
        : n1_(n1), n2_(n2), flags_(n1 * n2, false), sets_(n1 * n2) {}

    size_t rows() const { return n1_; }
    size_t cols() const { return n2_; }
    bool has_common(size_t i, size_t j) const { return flags_[i * n2_ + j]; }
    const std::vector<char32_t>& common(size_t i, size_t j) const { return sets_[i * n2_ + j]; }
    // membership of c in common(i, j), by binary search
    bool contains(size_t i, size_t j, char32_t c) const;

    void set_common(size_t i, size_t j, std::vector<char32_t> chars);

private:
    size_t n1_ = 0;
    size_t n2_ = 0;
    std::vector<bool> flags_;
    std::vector<std::vector<char32_t>> sets_;
};

LabelIntersectionIndex build_intersection_index(const CondensedGraph& h1, const CondensedGraph& h2);

/*
 * The D-hat table over two condensed target graphs and an acyclic constraint
 * graph, with the same shape and indexing as DpTable3 (i, j are 1-based ranks
 * of h1, h2 under order1, order2). Layer 0 holds the unconstrained LCS values,
 * +inf where two cyclic components share a character.
 */
DpTable3Hat seq_ic_table_cyclic(const CondensedGraph& h1, const TopoOrder& order1,
                                const CondensedGraph& h2, const TopoOrder& order2,
                                const AtomicGraph& g3, const TopoOrder& order3,
                                const LabelIntersectionIndex& index);

/*
 * SEQ-IC-LCS where g1 and g2 may contain cycles. Returns +inf when the
 * candidate set holds strings of unbounded length and -inf when it is empty.
 * Throws CyclicConstraint if g3 is cyclic and EmptyGraph on empty inputs.
 */
ExtLen seq_ic_lcs_cyclic(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3);

/*
 * Layered unrolling: times + 1 copies of the graph, where tree, forward and
 * cross edges of a fixed DFS stay inside a layer and back edges (self-loops
 * included) step to the next layer. Copies unreachable from layer 0 are
 * dropped. The result is acyclic, and its path strings are exactly the walk
 * strings of the input that traverse back edges at most `times` times in total.
 */
AtomicGraph unroll_bounded(const AtomicGraph& graph, size_t times);

}

#endif /* glcs_cyclic_lcs_hpp */
