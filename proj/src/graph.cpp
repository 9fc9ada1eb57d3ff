#include "glcs/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "glcs/errors.hpp"

namespace glcs {

void LabeledGraph::add_vertex(vertex_id id, std::u32string label) {
    if (label.empty()) {
        throw InvalidGraph("vertex " + std::to_string(id) + " has an empty label");
    }
    if (index_.count(id)) {
        throw InvalidGraph("duplicate vertex id " + std::to_string(id));
    }
    index_[id] = vertices_.size();
    vertices_.push_back(Vertex{id, std::move(label)});
}

void LabeledGraph::add_edge(vertex_id from, vertex_id to) {
    if (!index_.count(from)) {
        throw InvalidGraph("edge endpoint " + std::to_string(from) + " is not a declared vertex");
    }
    if (!index_.count(to)) {
        throw InvalidGraph("edge endpoint " + std::to_string(to) + " is not a declared vertex");
    }
    if (has_edge(from, to)) {
        throw InvalidGraph("duplicate edge " + std::to_string(from) + " -> " + std::to_string(to));
    }
    out_[from].push_back(to);
    edges_.emplace_back(from, to);
}

bool LabeledGraph::has_edge(vertex_id from, vertex_id to) const {
    auto it = out_.find(from);
    if (it == out_.end()) {
        return false;
    }
    return std::find(it->second.begin(), it->second.end(), to) != it->second.end();
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

AtomicGraph::AtomicGraph(std::vector<char32_t> labels,
                         const std::vector<std::pair<size_t, size_t>>& edges)
    : labels_(std::move(labels)), out_(labels_.size()), in_(labels_.size()) {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (const auto& [from, to] : sorted) {
        if (from >= labels_.size() || to >= labels_.size()) {
            throw InvalidGraph("atomic edge endpoint out of range");
        }
        out_[from].push_back(to);
        in_[to].push_back(from);
    }
    edge_count_ = sorted.size();
}

bool AtomicGraph::has_edge(size_t from, size_t to) const {
    const auto& nexts = out_[from];
    return std::binary_search(nexts.begin(), nexts.end(), to);
}

std::vector<std::pair<size_t, size_t>> AtomicGraph::edge_list() const {
    std::vector<std::pair<size_t, size_t>> edges;
    edges.reserve(edge_count_);
    for (size_t v = 0; v < size(); ++v) {
        for (size_t w : out_[v]) {
            edges.emplace_back(v, w);
        }
    }
    return edges;
}

AtomicGraph atomize(const LabeledGraph& graph) {
    std::vector<size_t> by_id(graph.vertex_size());
    std::iota(by_id.begin(), by_id.end(), 0);
    std::sort(by_id.begin(), by_id.end(), [&](size_t a, size_t b) {
        return graph.vertices()[a].id < graph.vertices()[b].id;
    });

    // first and last chain vertex of every labeled vertex
    std::vector<size_t> first(graph.vertex_size()), last(graph.vertex_size());
    std::vector<char32_t> labels;
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t idx : by_id) {
        const auto& label = graph.vertices()[idx].label;
        first[idx] = labels.size();
        for (size_t p = 0; p < label.size(); ++p) {
            if (p != 0) {
                edges.emplace_back(labels.size() - 1, labels.size());
            }
            labels.push_back(label[p]);
        }
        last[idx] = labels.size() - 1;
    }
    for (const auto& [from, to] : graph.edges()) {
        edges.emplace_back(last[graph.index_of(from)], first[graph.index_of(to)]);
    }
    return AtomicGraph(std::move(labels), edges);
}

namespace {

// Kahn's algorithm over an arbitrary successor relation; returns a partial
// order when the relation has a cycle.
std::vector<size_t> kahn_order(size_t n,
                               const std::function<const std::vector<size_t>&(size_t)>& nexts,
                               const std::function<bool(size_t, size_t)>& counts) {
    std::vector<size_t> in_degree(n, 0);
    for (size_t v = 0; v < n; ++v) {
        for (size_t w : nexts(v)) {
            if (counts(v, w)) {
                ++in_degree[w];
            }
        }
    }
    std::priority_queue<size_t, std::vector<size_t>, std::greater<size_t>> ready;
    for (size_t v = 0; v < n; ++v) {
        if (in_degree[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (size_t w : nexts(v)) {
            if (counts(v, w) && --in_degree[w] == 0) {
                ready.push(w);
            }
        }
    }
    return order;
}

TopoOrder make_order(std::vector<size_t> order) {
    TopoOrder topo;
    topo.rank.resize(order.size());
    for (size_t r = 0; r < order.size(); ++r) {
        topo.rank[order[r]] = r;
    }
    topo.order = std::move(order);
    return topo;
}

}

TopoOrder topo_sort(const AtomicGraph& graph) {
    auto order = kahn_order(graph.size(),
                            [&](size_t v) -> const std::vector<size_t>& { return graph.out_edges(v); },
                            [](size_t, size_t) { return true; });
    if (order.size() != graph.size()) {
        throw CyclicGraph();
    }
    return make_order(std::move(order));
}

TopoOrder topo_sort(const CondensedGraph& graph) {
    auto order = kahn_order(graph.size(),
                            [&](size_t c) -> const std::vector<size_t>& { return graph.out_edges(c); },
                            [](size_t c, size_t d) { return c != d; });
    if (order.size() != graph.size()) {
        throw CyclicGraph("component graph contains a cycle");
    }
    return make_order(std::move(order));
}

bool is_acyclic(const AtomicGraph& graph) {
    auto order = kahn_order(graph.size(),
                            [&](size_t v) -> const std::vector<size_t>& { return graph.out_edges(v); },
                            [](size_t, size_t) { return true; });
    return order.size() == graph.size();
}

namespace {

// Iterative Tarjan; returns the component id of every vertex, components
// numbered in completion order (a reverse topological order).
std::vector<size_t> tarjan_components(const AtomicGraph& graph, size_t& num_components) {
    const size_t n = graph.size();
    constexpr size_t unvisited = -1;
    std::vector<size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<size_t> stack;
    // (vertex, next out-edge position)
    std::vector<std::pair<size_t, size_t>> call_stack;
    size_t next_index = 0;
    num_components = 0;

    for (size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        call_stack.emplace_back(root, 0);
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call_stack.empty()) {
            auto& [v, pos] = call_stack.back();
            const auto& nexts = graph.out_edges(v);
            if (pos < nexts.size()) {
                size_t w = nexts[pos++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.emplace_back(w, 0);
                }
                else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            size_t done = v;
            call_stack.pop_back();
            if (!call_stack.empty()) {
                size_t parent = call_stack.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = num_components;
                } while (w != done);
                ++num_components;
            }
        }
    }
    return comp;
}

}

CondensedGraph condense(const AtomicGraph& graph) {
    size_t num_raw = 0;
    auto raw = tarjan_components(graph, num_raw);

    std::vector<std::vector<size_t>> raw_members(num_raw);
    for (size_t v = 0; v < graph.size(); ++v) {
        raw_members[raw[v]].push_back(v);
    }
    std::vector<std::vector<size_t>> raw_out(num_raw);
    for (size_t v = 0; v < graph.size(); ++v) {
        for (size_t w : graph.out_edges(v)) {
            if (raw[v] != raw[w]) {
                raw_out[raw[v]].push_back(raw[w]);
            }
        }
    }
    for (auto& nexts : raw_out) {
        std::sort(nexts.begin(), nexts.end());
        nexts.erase(std::unique(nexts.begin(), nexts.end()), nexts.end());
    }

    // renumber so that index order is topological, ties by smallest member
    std::vector<size_t> in_degree(num_raw, 0);
    for (const auto& nexts : raw_out) {
        for (size_t d : nexts) {
            ++in_degree[d];
        }
    }
    auto by_min_member = [&](size_t a, size_t b) { return raw_members[a][0] > raw_members[b][0]; };
    std::priority_queue<size_t, std::vector<size_t>, decltype(by_min_member)> ready(by_min_member);
    for (size_t c = 0; c < num_raw; ++c) {
        if (in_degree[c] == 0) {
            ready.push(c);
        }
    }
    std::vector<size_t> renumber(num_raw);
    size_t next = 0;
    while (!ready.empty()) {
        size_t c = ready.top();
        ready.pop();
        renumber[c] = next++;
        for (size_t d : raw_out[c]) {
            if (--in_degree[d] == 0) {
                ready.push(d);
            }
        }
    }

    CondensedGraph condensed;
    condensed.components_.resize(num_raw);
    condensed.out_.resize(num_raw);
    condensed.in_.resize(num_raw);
    condensed.member_map_.resize(graph.size());
    for (size_t c = 0; c < num_raw; ++c) {
        auto& comp = condensed.components_[renumber[c]];
        comp.members = raw_members[c];
        for (size_t v : comp.members) {
            comp.label_set.push_back(graph.label(v));
            condensed.member_map_[v] = renumber[c];
        }
        std::sort(comp.label_set.begin(), comp.label_set.end());
        comp.label_set.erase(std::unique(comp.label_set.begin(), comp.label_set.end()),
                             comp.label_set.end());
        comp.is_cyclic = comp.members.size() >= 2 || graph.has_self_loop(comp.members.front());
    }
    for (size_t c = 0; c < num_raw; ++c) {
        size_t from = renumber[c];
        for (size_t d : raw_out[c]) {
            condensed.out_[from].push_back(renumber[d]);
            condensed.in_[renumber[d]].push_back(from);
        }
    }
    for (size_t c = 0; c < num_raw; ++c) {
        if (condensed.components_[c].is_cyclic) {
            condensed.out_[c].push_back(c);
            condensed.in_[c].push_back(c);
        }
        std::sort(condensed.out_[c].begin(), condensed.out_[c].end());
        std::sort(condensed.in_[c].begin(), condensed.in_[c].end());
    }
    return condensed;
}

std::vector<size_t> sink_vertices(const AtomicGraph& graph) {
    std::vector<size_t> sinks;
    for (size_t v = 0; v < graph.size(); ++v) {
        if (graph.out_edges(v).empty()) {
            sinks.push_back(v);
        }
    }
    return sinks;
}

}
