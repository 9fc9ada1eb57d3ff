#ifndef glcs_ranked_hpp
#define glcs_ranked_hpp

#include <algorithm>
#include <cstddef>
#include <vector>

#include "glcs/graph.hpp"

namespace glcs::detail {

// An acyclic atomic graph re-addressed by 1-based topological rank.
struct RankedGraph {
    size_t size = 0;
    std::vector<char32_t> label;              // [0] unused
    std::vector<std::vector<size_t>> preds;   // ascending ranks
    std::vector<bool> is_sink;
};

inline RankedGraph rank_graph(const AtomicGraph& graph, const TopoOrder& topo) {
    RankedGraph ranked;
    ranked.size = graph.size();
    ranked.label.assign(graph.size() + 1, 0);
    ranked.preds.resize(graph.size() + 1);
    ranked.is_sink.assign(graph.size() + 1, false);
    for (size_t v = 0; v < graph.size(); ++v) {
        size_t r = topo.rank[v] + 1;
        ranked.label[r] = graph.label(v);
        ranked.is_sink[r] = graph.out_edges(v).empty();
        for (size_t u : graph.in_edges(v)) {
            ranked.preds[r].push_back(topo.rank[u] + 1);
        }
        std::sort(ranked.preds[r].begin(), ranked.preds[r].end());
    }
    return ranked;
}

}

#endif /* glcs_ranked_hpp */
