#ifndef glcs_test_helpers_hpp
#define glcs_test_helpers_hpp

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "glcs/ext_len.hpp"
#include "glcs/graph.hpp"
#include "glcs/oracle.hpp"

namespace glcs::test {

inline AtomicGraph atomic(const std::u32string& labels,
                          const std::vector<std::pair<size_t, size_t>>& edges = {}) {
    return AtomicGraph(std::vector<char32_t>(labels.begin(), labels.end()), edges);
}

// unary path spelling s
inline AtomicGraph chain(const std::u32string& s) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 1; i < s.size(); ++i) {
        edges.emplace_back(i - 1, i);
    }
    return atomic(s, edges);
}

inline AtomicGraph self_loop(char32_t c) {
    return atomic(std::u32string(1, c), {{0, 0}});
}

// Written out by hand so the string oracles share nothing with the library.
inline bool contains_subsequence(const std::u32string& hay, const std::u32string& needle) {
    size_t pos = 0;
    for (char32_t c : hay) {
        if (pos < needle.size() && needle[pos] == c) {
            ++pos;
        }
    }
    return pos == needle.size();
}

inline std::vector<std::u32string> all_subsequences(const std::u32string& s) {
    std::vector<std::u32string> subs;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s.size()); ++mask) {
        std::u32string sub;
        for (size_t i = 0; i < s.size(); ++i) {
            if (mask >> i & 1) {
                sub.push_back(s[i]);
            }
        }
        subs.push_back(std::move(sub));
    }
    return subs;
}

// Exhaustive: longest subsequence of a that is in b and contains p.
inline ExtLen brute_seq_ic(const std::u32string& a, const std::u32string& b, const std::u32string& p) {
    ExtLen best = ExtLen::neg_inf();
    for (const auto& z : all_subsequences(a)) {
        if (contains_subsequence(b, z) && contains_subsequence(z, p)) {
            best = std::max(best, ExtLen::finite(z.size()));
        }
    }
    return best;
}

inline size_t brute_lcs(const std::u32string& a, const std::u32string& b) {
    size_t best = 0;
    for (const auto& z : all_subsequences(a)) {
        if (z.size() > best && contains_subsequence(b, z)) {
            best = z.size();
        }
    }
    return best;
}

inline std::u32string random_string(std::mt19937_64& rng, size_t max_len, size_t alphabet) {
    size_t len = uniform_below(rng, max_len + 1);
    std::u32string s;
    for (size_t i = 0; i < len; ++i) {
        s.push_back(U'a' + uniform_below(rng, alphabet));
    }
    return s;
}

// labels of length 1..3 on up to 6 vertices, edges including self-loops
inline LabeledGraph random_labeled(std::mt19937_64& rng) {
    LabeledGraph graph;
    size_t n = 1 + uniform_below(rng, 6);
    for (size_t v = 0; v < n; ++v) {
        std::u32string label;
        size_t len = 1 + uniform_below(rng, 3);
        for (size_t p = 0; p < len; ++p) {
            label.push_back(U'a' + uniform_below(rng, 2));
        }
        // ids deliberately out of order
        graph.add_vertex(10 * (n - v), label);
    }
    size_t m = uniform_below(rng, n * n + 1);
    for (size_t e = 0; e < m; ++e) {
        vertex_id from = 10 * (1 + uniform_below(rng, n));
        vertex_id to = 10 * (1 + uniform_below(rng, n));
        if (!graph.has_edge(from, to)) {
            graph.add_edge(from, to);
        }
    }
    return graph;
}

// random DAG with 1..max_vertices vertices and at most max_edges edges
inline AtomicGraph random_dag(std::mt19937_64& rng, size_t max_vertices, size_t max_edges,
                              size_t alphabet) {
    size_t n = 1 + uniform_below(rng, max_vertices);
    size_t limit = std::min(max_edges, n * (n - 1) / 2);
    size_t m = uniform_below(rng, limit + 1);
    return atomize(gen_random_graph(rng(), n, m, alphabet, true));
}

// random graph that may contain cycles and self-loops
inline AtomicGraph random_digraph(std::mt19937_64& rng, size_t max_vertices, size_t max_edges,
                                  size_t alphabet) {
    size_t n = 1 + uniform_below(rng, max_vertices);
    size_t limit = std::min(max_edges, n * n);
    size_t m = uniform_below(rng, limit + 1);
    return atomize(gen_random_graph(rng(), n, m, alphabet, false));
}

}

#endif /* glcs_test_helpers_hpp */
