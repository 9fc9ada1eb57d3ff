#include "glcs/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "glcs/cyclic_lcs.hpp"
#include "glcs/errors.hpp"
#include "glcs/string_lcs.hpp"

namespace glcs {

namespace {

// reach[v] = vertices reachable from v by a path of at least one edge
std::vector<std::vector<size_t>> strict_reachability(size_t n,
                                                     const std::function<const std::vector<size_t>&(size_t)>& nexts) {
    std::vector<std::vector<size_t>> reach(n);
    std::vector<bool> seen(n);
    std::vector<size_t> stack;
    for (size_t v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), false);
        stack.assign(nexts(v).begin(), nexts(v).end());
        while (!stack.empty()) {
            size_t w = stack.back();
            stack.pop_back();
            if (seen[w]) {
                continue;
            }
            seen[w] = true;
            for (size_t x : nexts(w)) {
                stack.push_back(x);
            }
        }
        for (size_t w = 0; w < n; ++w) {
            if (seen[w]) {
                reach[v].push_back(w);
            }
        }
    }
    return reach;
}

std::vector<std::vector<size_t>> strict_reachability(const AtomicGraph& graph) {
    return strict_reachability(graph.size(),
                               [&](size_t v) -> const std::vector<size_t>& { return graph.out_edges(v); });
}

/*
 * Breadth-first growth of the subsequence set. A state is a position where
 * the last character was matched; a string survives if some position matches
 * its next character among the successors of its current positions.
 */
std::set<std::u32string> grow_subsequences(size_t num_states,
                                           const std::vector<char32_t>& alphabet,
                                           const std::function<bool(size_t, char32_t)>& matches,
                                           const std::vector<std::vector<size_t>>& successors,
                                           size_t max_len) {
    std::set<std::u32string> found{std::u32string()};
    struct Entry {
        std::u32string text;
        std::vector<bool> at;
    };
    std::vector<Entry> frontier;
    frontier.push_back(Entry{std::u32string(), std::vector<bool>()});
    for (size_t len = 0; len < max_len && !frontier.empty(); ++len) {
        std::vector<Entry> next;
        for (const auto& entry : frontier) {
            std::vector<bool> candidates(num_states, entry.text.empty());
            if (!entry.text.empty()) {
                for (size_t s = 0; s < num_states; ++s) {
                    if (entry.at[s]) {
                        for (size_t t : successors[s]) {
                            candidates[t] = true;
                        }
                    }
                }
            }
            for (char32_t c : alphabet) {
                std::vector<bool> at(num_states, false);
                bool any = false;
                for (size_t s = 0; s < num_states; ++s) {
                    if (candidates[s] && matches(s, c)) {
                        at[s] = true;
                        any = true;
                    }
                }
                if (any) {
                    Entry grown{entry.text + c, std::move(at)};
                    found.insert(grown.text);
                    next.push_back(std::move(grown));
                }
            }
        }
        frontier = std::move(next);
    }
    return found;
}

std::vector<char32_t> sorted_unique(std::vector<char32_t> chars) {
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    return chars;
}

}

PathStringSet maximal_path_strings(const AtomicGraph& graph, EnumerationCaps caps) {
    PathStringSet result;
    const bool acyclic = is_acyclic(graph);

    std::vector<size_t> starts;
    if (acyclic) {
        for (size_t v = 0; v < graph.size(); ++v) {
            if (graph.in_degree(v) == 0) {
                starts.push_back(v);
            }
        }
    }
    else {
        // in-degree 0 vertices plus every vertex of a component with no entry
        auto condensed = condense(graph);
        for (size_t c = 0; c < condensed.size(); ++c) {
            if (!condensed.has_strict_predecessor(c)) {
                for (size_t v : condensed.component(c).members) {
                    starts.push_back(v);
                }
            }
        }
        std::sort(starts.begin(), starts.end());
    }

    size_t emitted = 0;
    std::u32string text;
    std::function<void(size_t)> walk = [&](size_t v) {
        if (result.truncated) {
            return;
        }
        text.push_back(graph.label(v));
        const auto& nexts = graph.out_edges(v);
        if (nexts.empty() || text.size() >= caps.max_len) {
            if (!nexts.empty()) {
                result.truncated = true;
            }
            if (++emitted > caps.max_count) {
                result.truncated = true;
            }
            else {
                result.strings.insert(text);
            }
        }
        else {
            for (size_t w : nexts) {
                walk(w);
            }
        }
        text.pop_back();
    };
    for (size_t s : starts) {
        walk(s);
    }
    return result;
}

namespace {

PathStringSet capped_paths(const AtomicGraph& graph, EnumerationCaps caps) {
    if (!is_acyclic(graph)) {
        throw CyclicGraph("the enumeration oracle needs acyclic graphs");
    }
    auto paths = maximal_path_strings(graph, caps);
    if (paths.truncated) {
        throw TooLarge("path enumeration exceeded the oracle caps");
    }
    return paths;
}

}

size_t oracle_lcs(const AtomicGraph& g1, const AtomicGraph& g2, EnumerationCaps caps) {
    auto p1 = capped_paths(g1, caps);
    auto p2 = capped_paths(g2, caps);
    size_t best = 0;
    for (const auto& s1 : p1.strings) {
        for (const auto& s2 : p2.strings) {
            best = std::max(best, lcs_strings(s1, s2));
        }
    }
    return best;
}

ExtLen oracle_seq_ic(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3,
                     EnumerationCaps caps) {
    if (g1.empty() || g2.empty() || g3.empty()) {
        throw EmptyGraph();
    }
    auto p1 = capped_paths(g1, caps);
    auto p2 = capped_paths(g2, caps);
    auto p3 = capped_paths(g3, caps);
    ExtLen best = ExtLen::neg_inf();
    for (const auto& s1 : p1.strings) {
        for (const auto& s2 : p2.strings) {
            // nothing beats the unconstrained LCS of this pair
            if (best.is_finite() && lcs_strings(s1, s2) <= best.value()) {
                continue;
            }
            for (const auto& q : p3.strings) {
                best = std::max(best, seq_ic_lcs_strings(s1, s2, q));
            }
        }
    }
    return best;
}

ProbeResult oracle_infinite_probe(const AtomicGraph& g1, const AtomicGraph& g2,
                                  const AtomicGraph& g3, size_t t_max, EnumerationCaps caps) {
    if (t_max < 2) {
        throw std::invalid_argument("oracle_infinite_probe needs t_max >= 2");
    }
    if (!is_acyclic(g3)) {
        throw CyclicConstraint();
    }
    ProbeResult probe;
    for (size_t t = 1; t <= t_max; ++t) {
        probe.values.push_back(oracle_seq_ic(unroll_bounded(g1, t), unroll_bounded(g2, t), g3, caps));
    }
    const auto last = probe.values[t_max - 1];
    const auto before = probe.values[t_max - 2];
    probe.verdict = last > before ? ProbeVerdict::growing : ProbeVerdict::stable;
    return probe;
}

ExtLen oracle_seq_ic_product(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3) {
    if (g1.empty() || g2.empty() || g3.empty()) {
        throw EmptyGraph();
    }
    if (!is_acyclic(g3)) {
        throw CyclicConstraint();
    }
    const size_t n1 = g1.size(), n2 = g2.size(), n3 = g3.size();
    auto reach1 = strict_reachability(g1);
    auto reach2 = strict_reachability(g2);
    std::vector<size_t> all1(n1), all2(n2);
    std::iota(all1.begin(), all1.end(), 0);
    std::iota(all2.begin(), all2.end(), 0);
    std::vector<size_t> sources3;
    for (size_t s = 0; s < n3; ++s) {
        if (g3.in_degree(s) == 0) {
            sources3.push_back(s);
        }
    }

    // slot 0 of each coordinate is "nothing matched yet"
    const size_t num_states = (n1 + 1) * (n2 + 1) * (n3 + 1);
    auto encode = [&](size_t u, size_t v, size_t s) { return (u * (n2 + 1) + v) * (n3 + 1) + s; };

    std::vector<std::vector<size_t>> succ(num_states);
    std::vector<bool> reached(num_states, false);
    std::vector<size_t> stack{encode(0, 0, 0)};
    reached[encode(0, 0, 0)] = true;
    while (!stack.empty()) {
        size_t state = stack.back();
        stack.pop_back();
        size_t s = state % (n3 + 1);
        size_t v = (state / (n3 + 1)) % (n2 + 1);
        size_t u = state / ((n3 + 1) * (n2 + 1));
        const auto& next1 = u == 0 ? all1 : reach1[u - 1];
        const auto& next2 = v == 0 ? all2 : reach2[v - 1];
        const auto& next3 = s == 0 ? sources3 : g3.out_edges(s - 1);
        for (size_t a : next1) {
            for (size_t b : next2) {
                char32_t c = g1.label(a);
                if (g2.label(b) != c) {
                    continue;
                }
                std::vector<size_t> targets{encode(a + 1, b + 1, s)};
                for (size_t w : next3) {
                    if (g3.label(w) == c) {
                        targets.push_back(encode(a + 1, b + 1, w + 1));
                    }
                }
                for (size_t t : targets) {
                    succ[state].push_back(t);
                    if (!reached[t]) {
                        reached[t] = true;
                        stack.push_back(t);
                    }
                }
            }
        }
    }

    std::vector<std::vector<size_t>> pred(num_states);
    for (size_t state = 0; state < num_states; ++state) {
        for (size_t t : succ[state]) {
            pred[t].push_back(state);
        }
    }
    std::vector<bool> useful(num_states, false);
    for (size_t state = 0; state < num_states; ++state) {
        size_t s = state % (n3 + 1);
        if (reached[state] && s != 0 && g3.out_edges(s - 1).empty() && !useful[state]) {
            useful[state] = true;
            stack.push_back(state);
            while (!stack.empty()) {
                size_t x = stack.back();
                stack.pop_back();
                for (size_t p : pred[x]) {
                    if (!useful[p]) {
                        useful[p] = true;
                        stack.push_back(p);
                    }
                }
            }
        }
    }
    if (!useful[encode(0, 0, 0)]) {
        return ExtLen::neg_inf();
    }

    // longest path over useful states; leftover states after Kahn mean a cycle
    std::vector<size_t> in_degree(num_states, 0);
    for (size_t state = 0; state < num_states; ++state) {
        if (useful[state]) {
            for (size_t t : succ[state]) {
                if (useful[t]) {
                    ++in_degree[t];
                }
            }
        }
    }
    std::vector<long long> longest(num_states, -1);
    std::vector<size_t> ready;
    size_t num_useful = 0;
    for (size_t state = 0; state < num_states; ++state) {
        if (useful[state]) {
            ++num_useful;
            if (in_degree[state] == 0) {
                ready.push_back(state);
            }
        }
    }
    longest[encode(0, 0, 0)] = 0;
    size_t processed = 0;
    long long best = -1;
    while (!ready.empty()) {
        size_t state = ready.back();
        ready.pop_back();
        ++processed;
        size_t s = state % (n3 + 1);
        if (s != 0 && g3.out_edges(s - 1).empty() && longest[state] >= 0) {
            best = std::max(best, longest[state]);
        }
        for (size_t t : succ[state]) {
            if (!useful[t]) {
                continue;
            }
            if (longest[state] >= 0) {
                longest[t] = std::max(longest[t], longest[state] + 1);
            }
            if (--in_degree[t] == 0) {
                ready.push_back(t);
            }
        }
    }
    if (processed != num_useful) {
        return ExtLen::pos_inf();
    }
    return best < 0 ? ExtLen::neg_inf() : ExtLen::finite(static_cast<std::uint64_t>(best));
}

std::set<std::u32string> bounded_subsequences(const LabeledGraph& graph, size_t max_len) {
    const auto& vertices = graph.vertices();
    std::vector<size_t> offset(vertices.size() + 1, 0);
    for (size_t v = 0; v < vertices.size(); ++v) {
        offset[v + 1] = offset[v] + vertices[v].label.size();
    }
    std::vector<std::vector<size_t>> out(vertices.size());
    for (const auto& [from, to] : graph.edges()) {
        out[graph.index_of(from)].push_back(graph.index_of(to));
    }
    auto vertex_reach = strict_reachability(vertices.size(),
                                            [&](size_t v) -> const std::vector<size_t>& { return out[v]; });

    // a position is (vertex, offset into its label)
    std::vector<size_t> owner(offset.back());
    std::vector<char32_t> chars(offset.back());
    std::vector<char32_t> alphabet;
    for (size_t v = 0; v < vertices.size(); ++v) {
        for (size_t p = 0; p < vertices[v].label.size(); ++p) {
            owner[offset[v] + p] = v;
            chars[offset[v] + p] = vertices[v].label[p];
            alphabet.push_back(vertices[v].label[p]);
        }
    }
    std::vector<std::vector<size_t>> successors(offset.back());
    for (size_t pos = 0; pos < offset.back(); ++pos) {
        size_t v = owner[pos];
        for (size_t later = pos + 1; later < offset[v + 1]; ++later) {
            successors[pos].push_back(later);
        }
        for (size_t w : vertex_reach[v]) {
            for (size_t q = offset[w]; q < offset[w + 1]; ++q) {
                successors[pos].push_back(q);
            }
        }
    }
    return grow_subsequences(offset.back(), sorted_unique(alphabet),
                             [&](size_t pos, char32_t c) { return chars[pos] == c; },
                             successors, max_len);
}

std::set<std::u32string> bounded_subsequences(const AtomicGraph& graph, size_t max_len) {
    return grow_subsequences(graph.size(), sorted_unique(graph.labels()),
                             [&](size_t v, char32_t c) { return graph.label(v) == c; },
                             strict_reachability(graph), max_len);
}

std::set<std::u32string> bounded_subsequences(const CondensedGraph& graph, size_t max_len) {
    std::vector<char32_t> alphabet;
    for (const auto& comp : graph.components()) {
        alphabet.insert(alphabet.end(), comp.label_set.begin(), comp.label_set.end());
    }
    auto reach = strict_reachability(graph.size(),
                                     [&](size_t c) -> const std::vector<size_t>& { return graph.out_edges(c); });
    return grow_subsequences(graph.size(), sorted_unique(alphabet),
                             [&](size_t c, char32_t ch) {
                                 const auto& set = graph.component(c).label_set;
                                 return std::binary_search(set.begin(), set.end(), ch);
                             },
                             reach, max_len);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: empty range");
    }
    // values below threshold would bias the modulo
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        std::uint64_t r = rng();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

LabeledGraph gen_random_graph(std::uint64_t seed, size_t n_vertices, size_t n_edges,
                              size_t alphabet_size, bool dag_only) {
    static const std::u32string symbols =
        U"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    if (n_vertices == 0) {
        throw InfeasibleShape("a generated graph needs at least one vertex");
    }
    if (alphabet_size == 0 || alphabet_size > symbols.size()) {
        throw InfeasibleShape("alphabet size must be between 1 and " + std::to_string(symbols.size()));
    }
    const size_t max_edges = dag_only ? n_vertices * (n_vertices - 1) / 2 : n_vertices * n_vertices;
    if (n_edges > max_edges) {
        throw InfeasibleShape(std::to_string(n_edges) + " edges exceed the maximum of " +
                              std::to_string(max_edges) + " for this shape");
    }

    std::mt19937_64 rng(seed);
    LabeledGraph graph;
    for (size_t v = 0; v < n_vertices; ++v) {
        graph.add_vertex(v + 1, std::u32string(1, symbols[uniform_below(rng, alphabet_size)]));
    }

    std::vector<size_t> position(n_vertices);
    std::iota(position.begin(), position.end(), 0);
    if (dag_only) {
        for (size_t i = n_vertices; i > 1; --i) {
            std::swap(position[i - 1], position[uniform_below(rng, i)]);
        }
    }
    std::vector<std::pair<size_t, size_t>> candidates;
    for (size_t u = 0; u < n_vertices; ++u) {
        for (size_t w = 0; w < n_vertices; ++w) {
            if (!dag_only || position[u] < position[w]) {
                candidates.emplace_back(u, w);
            }
        }
    }
    // partial Fisher-Yates: the first n_edges slots are the sample
    for (size_t i = 0; i < n_edges; ++i) {
        std::swap(candidates[i], candidates[i + uniform_below(rng, candidates.size() - i)]);
    }
    candidates.resize(n_edges);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [u, w] : candidates) {
        graph.add_edge(u + 1, w + 1);
    }
    return graph;
}

}
