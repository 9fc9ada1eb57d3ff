#ifndef glcs_graph_hpp
#define glcs_graph_hpp

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace glcs {

using vertex_id = std::uint64_t;

/*
 * A directed graph whose vertices carry non-empty strings. This is the form
 * that users write down; every DP runs on the atomized form below.
 *
 * Invariants are enforced on insertion: ids are unique, labels are non-empty,
 * edge endpoints exist and no edge is repeated. Self-loops are allowed.
 */
class LabeledGraph {
public:
    struct Vertex {
        vertex_id id;
        std::u32string label;
    };

    LabeledGraph() = default;

    // throws InvalidGraph
    void add_vertex(vertex_id id, std::u32string label);
    // throws InvalidGraph
    void add_edge(vertex_id from, vertex_id to);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<vertex_id, vertex_id>>& edges() const { return edges_; }

    bool has_vertex(vertex_id id) const { return index_.count(id) != 0; }
    bool has_edge(vertex_id from, vertex_id to) const;
    size_t vertex_size() const { return vertices_.size(); }
    size_t edge_size() const { return edges_.size(); }
    // position of the vertex in vertices()
    size_t index_of(vertex_id id) const { return index_.at(id); }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

private:
    std::vector<Vertex> vertices_;
    std::vector<std::pair<vertex_id, vertex_id>> edges_;
    std::unordered_map<vertex_id, size_t> index_;
    std::unordered_map<vertex_id, std::vector<vertex_id>> out_;
};

inline bool operator==(const LabeledGraph::Vertex& a, const LabeledGraph::Vertex& b) {
    return a.id == b.id && a.label == b.label;
}

/*
 * A directed graph with one character per vertex, addressed by dense index.
 * Duplicate edges passed to the constructor are collapsed.
 */
class AtomicGraph {
public:
    AtomicGraph() = default;
    AtomicGraph(std::vector<char32_t> labels,
                const std::vector<std::pair<size_t, size_t>>& edges);

    size_t size() const { return labels_.size(); }
    size_t edge_size() const { return edge_count_; }
    bool empty() const { return labels_.empty(); }

    char32_t label(size_t v) const { return labels_[v]; }
    const std::vector<char32_t>& labels() const { return labels_; }
    const std::vector<size_t>& out_edges(size_t v) const { return out_[v]; }
    const std::vector<size_t>& in_edges(size_t v) const { return in_[v]; }
    size_t in_degree(size_t v) const { return in_[v].size(); }
    bool has_edge(size_t from, size_t to) const;
    bool has_self_loop(size_t v) const { return has_edge(v, v); }

    // (from, to) pairs in ascending order
    std::vector<std::pair<size_t, size_t>> edge_list() const;

private:
    std::vector<char32_t> labels_;
    std::vector<std::vector<size_t>> out_;
    std::vector<std::vector<size_t>> in_;
    size_t edge_count_ = 0;
};

/*
 * A topological order: order[r] is the vertex at (0-based) rank r and rank is
 * the inverse permutation. The DP tables use 1-based ranks, rank + 1, keeping
 * index 0 for the empty-prefix layer.
 */
struct TopoOrder {
    std::vector<size_t> order;
    std::vector<size_t> rank;
};

/*
 * The quotient of an AtomicGraph over its strongly connected components.
 *
 * A component is cyclic when it has two or more members or its single member
 * carries a self-loop; exactly the cyclic components carry a self-loop edge.
 * Components are numbered in a topological order of the component DAG, ties
 * broken by smallest member vertex, so index order is itself a valid order.
 * In-edge lists include the self-loop.
 */
class CondensedGraph {
public:
    struct Component {
        std::vector<char32_t> label_set;  // sorted, unique
        bool is_cyclic = false;
        std::vector<size_t> members;      // ascending original indexes
    };

    size_t size() const { return components_.size(); }
    bool empty() const { return components_.empty(); }
    const Component& component(size_t c) const { return components_[c]; }
    const std::vector<Component>& components() const { return components_; }
    const std::vector<size_t>& out_edges(size_t c) const { return out_[c]; }
    const std::vector<size_t>& in_edges(size_t c) const { return in_[c]; }
    size_t component_of(size_t original_vertex) const { return member_map_[original_vertex]; }
    const std::vector<size_t>& member_map() const { return member_map_; }

    bool has_self_loop(size_t c) const { return components_[c].is_cyclic; }
    // in-edge list empty, self-loops included in the test
    bool no_incoming_at_all(size_t c) const { return in_[c].empty(); }
    // some in-edge comes from another component
    bool has_strict_predecessor(size_t c) const {
        return in_[c].size() > (has_self_loop(c) ? 1 : 0);
    }

private:
    friend CondensedGraph condense(const AtomicGraph& graph);

    std::vector<Component> components_;
    std::vector<std::vector<size_t>> out_;
    std::vector<std::vector<size_t>> in_;
    std::vector<size_t> member_map_;
};

// Expand every vertex label into a chain of single-character vertices, in
// ascending vertex id order.
AtomicGraph atomize(const LabeledGraph& graph);

// Kahn's algorithm, ties broken by ascending vertex index. Throws CyclicGraph.
TopoOrder topo_sort(const AtomicGraph& graph);
// Order of the component DAG; self-loops are not ordering constraints.
TopoOrder topo_sort(const CondensedGraph& graph);

bool is_acyclic(const AtomicGraph& graph);

CondensedGraph condense(const AtomicGraph& graph);

// Vertices with no out-going edges, ascending.
std::vector<size_t> sink_vertices(const AtomicGraph& graph);

}

#endif /* glcs_graph_hpp */
