#include "glcs/cyclic_lcs.hpp"

#include <algorithm>
#include <iterator>

#include "glcs/errors.hpp"
#include "ranked.hpp"

namespace glcs {

bool LabelIntersectionIndex::contains(size_t i, size_t j, char32_t c) const {
    const auto& chars = common(i, j);
    return std::binary_search(chars.begin(), chars.end(), c);
}

void LabelIntersectionIndex::set_common(size_t i, size_t j, std::vector<char32_t> chars) {
    flags_[i * n2_ + j] = !chars.empty();
    sets_[i * n2_ + j] = std::move(chars);
}

LabelIntersectionIndex build_intersection_index(const CondensedGraph& h1, const CondensedGraph& h2) {
    LabelIntersectionIndex index(h1.size(), h2.size());
    for (size_t i = 0; i < h1.size(); ++i) {
        const auto& set1 = h1.component(i).label_set;
        for (size_t j = 0; j < h2.size(); ++j) {
            const auto& set2 = h2.component(j).label_set;
            std::vector<char32_t> common;
            std::set_intersection(set1.begin(), set1.end(), set2.begin(), set2.end(),
                                  std::back_inserter(common));
            index.set_common(i, j, std::move(common));
        }
    }
    return index;
}

namespace {

// A condensed graph re-addressed by 1-based rank; preds include the self-loop.
struct RankedCondensed {
    size_t size = 0;
    std::vector<size_t> component;   // rank -> component index
    std::vector<bool> cyclic;
    std::vector<std::vector<size_t>> preds;
};

RankedCondensed rank_condensed(const CondensedGraph& graph, const TopoOrder& topo) {
    RankedCondensed ranked;
    ranked.size = graph.size();
    ranked.component.assign(graph.size() + 1, 0);
    ranked.cyclic.assign(graph.size() + 1, false);
    ranked.preds.resize(graph.size() + 1);
    for (size_t c = 0; c < graph.size(); ++c) {
        size_t r = topo.rank[c] + 1;
        ranked.component[r] = c;
        ranked.cyclic[r] = graph.component(c).is_cyclic;
        for (size_t d : graph.in_edges(c)) {
            ranked.preds[r].push_back(topo.rank[d] + 1);
        }
        std::sort(ranked.preds[r].begin(), ranked.preds[r].end());
    }
    return ranked;
}

// Unconstrained layer k = 0.
void fill_base_layer(DpTable3Hat& table, const RankedCondensed& r1, const RankedCondensed& r2,
                     const LabelIntersectionIndex& index) {
    const ExtLen zero = ExtLen::finite(0);
    for (size_t i = 1; i <= r1.size; ++i) {
        for (size_t j = 1; j <= r2.size; ++j) {
            const bool common = index.has_common(r1.component[i], r2.component[j]);
            ExtLen best;
            if (r1.cyclic[i] && r2.cyclic[j] && common) {
                best = ExtLen::pos_inf();
            }
            else if (common) {
                // one side is a single non-cyclic vertex, so (x, y) is never (i, j)
                best = one_len;
                for (size_t x : r1.preds[i]) {
                    for (size_t y : r2.preds[j]) {
                        best = std::max(best, table.at(x, y, 0) + one_len);
                    }
                }
            }
            else {
                best = zero;
                for (size_t x : r1.preds[i]) {
                    if (x != i) {
                        best = std::max(best, table.at(x, j, 0));
                    }
                }
                for (size_t y : r2.preds[j]) {
                    if (y != j) {
                        best = std::max(best, table.at(i, y, 0));
                    }
                }
            }
            table.at(i, j, 0) = best;
        }
    }
}

/*
 * Cell (i, j, k >= 1) when both components are cyclic. A non-empty candidate
 * set can be pumped with a shared character, so the only outcomes are +inf
 * and -inf unless the components share nothing.
 */
ExtLen cyclic_pair_cell(const DpTable3Hat& table, const RankedCondensed& r1,
                        const RankedCondensed& r2, const detail::RankedGraph& r3,
                        size_t i, size_t j, size_t k, bool constraint_match, bool common) {
    const auto& preds1 = r1.preds[i];
    const auto& preds2 = r2.preds[j];
    const auto& preds3 = r3.preds[k];
    if (constraint_match) {
        for (size_t x : preds1) {
            for (size_t y : preds2) {
                if (preds3.empty()) {
                    if (!table.at(x, y, 0).is_neg_inf()) {
                        return ExtLen::pos_inf();
                    }
                }
                else {
                    for (size_t z : preds3) {
                        if (!table.at(x, y, z).is_neg_inf()) {
                            return ExtLen::pos_inf();
                        }
                    }
                }
            }
        }
        return ExtLen::neg_inf();
    }
    if (common) {
        for (size_t x : preds1) {
            for (size_t y : preds2) {
                // (i, j, k) itself is the cell being computed and still -inf
                if ((x != i || y != j) && !table.at(x, y, k).is_neg_inf()) {
                    return ExtLen::pos_inf();
                }
            }
        }
        return ExtLen::neg_inf();
    }
    ExtLen best = ExtLen::neg_inf();
    for (size_t x : preds1) {
        if (x != i) {
            best = std::max(best, table.at(x, j, k));
        }
    }
    for (size_t y : preds2) {
        if (y != j) {
            best = std::max(best, table.at(i, y, k));
        }
    }
    return best;
}

// Cell (i, j, k >= 1) when at least one component is a plain vertex.
ExtLen mixed_pair_cell(const DpTable3Hat& table, const RankedCondensed& r1,
                       const RankedCondensed& r2, const detail::RankedGraph& r3,
                       size_t i, size_t j, size_t k, bool constraint_match, bool common) {
    const auto& preds1 = r1.preds[i];
    const auto& preds2 = r2.preds[j];
    const auto& preds3 = r3.preds[k];
    ExtLen best = ExtLen::neg_inf();
    if (constraint_match) {
        if (preds3.empty()) {
            best = one_len;
        }
        for (size_t x : preds1) {
            for (size_t y : preds2) {
                if (preds3.empty()) {
                    best = std::max(best, table.at(x, y, 0) + one_len);
                }
                else {
                    for (size_t z : preds3) {
                        best = std::max(best, table.at(x, y, z) + one_len);
                    }
                }
            }
        }
    }
    else if (common) {
        for (size_t x : preds1) {
            for (size_t y : preds2) {
                best = std::max(best, table.at(x, y, k) + one_len);
            }
        }
    }
    else {
        for (size_t x : preds1) {
            if (x != i) {
                best = std::max(best, table.at(x, j, k));
            }
        }
        for (size_t y : preds2) {
            if (y != j) {
                best = std::max(best, table.at(i, y, k));
            }
        }
    }
    return best;
}

}

DpTable3Hat seq_ic_table_cyclic(const CondensedGraph& h1, const TopoOrder& order1,
                                const CondensedGraph& h2, const TopoOrder& order2,
                                const AtomicGraph& g3, const TopoOrder& order3,
                                const LabelIntersectionIndex& index) {
    auto r1 = rank_condensed(h1, order1);
    auto r2 = rank_condensed(h2, order2);
    auto r3 = detail::rank_graph(g3, order3);

    DpTable3Hat table(r1.size, r2.size, r3.size);
    fill_base_layer(table, r1, r2, index);

    for (size_t i = 1; i <= r1.size; ++i) {
        for (size_t j = 1; j <= r2.size; ++j) {
            const size_t c1 = r1.component[i], c2 = r2.component[j];
            const bool common = index.has_common(c1, c2);
            const bool both_cyclic = r1.cyclic[i] && r2.cyclic[j];
            for (size_t k = 1; k <= r3.size; ++k) {
                const bool constraint_match = common && index.contains(c1, c2, r3.label[k]);
                table.at(i, j, k) = both_cyclic
                    ? cyclic_pair_cell(table, r1, r2, r3, i, j, k, constraint_match, common)
                    : mixed_pair_cell(table, r1, r2, r3, i, j, k, constraint_match, common);
            }
        }
    }
    return table;
}

ExtLen seq_ic_lcs_cyclic(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3) {
    if (g1.empty() || g2.empty() || g3.empty()) {
        throw EmptyGraph();
    }
    if (!is_acyclic(g3)) {
        throw CyclicConstraint();
    }
    auto h1 = condense(g1);
    auto h2 = condense(g2);
    auto order1 = topo_sort(h1);
    auto order2 = topo_sort(h2);
    auto order3 = topo_sort(g3);
    auto index = build_intersection_index(h1, h2);
    auto table = seq_ic_table_cyclic(h1, order1, h2, order2, g3, order3, index);

    ExtLen best = ExtLen::neg_inf();
    for (size_t v : sink_vertices(g3)) {
        size_t k = order3.rank[v] + 1;
        for (size_t i = 1; i <= table.dim1(); ++i) {
            for (size_t j = 1; j <= table.dim2(); ++j) {
                best = std::max(best, table.at(i, j, k));
            }
        }
    }
    return best;
}

AtomicGraph unroll_bounded(const AtomicGraph& graph, size_t times) {
    const size_t n = graph.size();

    // classify back edges with an iterative DFS, roots in index order
    enum class Mark { white, gray, black };
    std::vector<Mark> mark(n, Mark::white);
    std::vector<std::pair<size_t, size_t>> back_edges, layer_edges;
    std::vector<std::pair<size_t, size_t>> stack;
    for (size_t root = 0; root < n; ++root) {
        if (mark[root] != Mark::white) {
            continue;
        }
        mark[root] = Mark::gray;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, pos] = stack.back();
            if (pos < graph.out_edges(v).size()) {
                size_t w = graph.out_edges(v)[pos++];
                if (mark[w] == Mark::gray) {
                    back_edges.emplace_back(v, w);
                }
                else {
                    layer_edges.emplace_back(v, w);
                    if (mark[w] == Mark::white) {
                        mark[w] = Mark::gray;
                        stack.emplace_back(w, 0);
                    }
                }
            }
            else {
                mark[v] = Mark::black;
                stack.pop_back();
            }
        }
    }

    const size_t layers = times + 1;
    std::vector<std::vector<size_t>> out(n * layers);
    for (size_t l = 0; l < layers; ++l) {
        for (const auto& [u, w] : layer_edges) {
            out[l * n + u].push_back(l * n + w);
        }
        if (l + 1 < layers) {
            for (const auto& [u, w] : back_edges) {
                out[l * n + u].push_back((l + 1) * n + w);
            }
        }
    }

    std::vector<bool> keep(n * layers, false);
    std::vector<size_t> queue;
    for (size_t v = 0; v < n; ++v) {
        keep[v] = true;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        size_t v = queue.back();
        queue.pop_back();
        for (size_t w : out[v]) {
            if (!keep[w]) {
                keep[w] = true;
                queue.push_back(w);
            }
        }
    }

    std::vector<size_t> new_index(n * layers, 0);
    std::vector<char32_t> labels;
    for (size_t copy = 0; copy < n * layers; ++copy) {
        if (keep[copy]) {
            new_index[copy] = labels.size();
            labels.push_back(graph.label(copy % n));
        }
    }
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t copy = 0; copy < n * layers; ++copy) {
        if (!keep[copy]) {
            continue;
        }
        for (size_t w : out[copy]) {
            edges.emplace_back(new_index[copy], new_index[w]);
        }
    }
    return AtomicGraph(std::move(labels), edges);
}

}
