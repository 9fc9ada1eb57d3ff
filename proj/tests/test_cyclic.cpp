#include <doctest.h>

#include <algorithm>
#include <iterator>

#include "glcs/cyclic_lcs.hpp"
#include "glcs/dag_lcs.hpp"
#include "glcs/errors.hpp"
#include "glcs/oracle.hpp"
#include "curated.hpp"
#include "helpers.hpp"

using namespace glcs;
using namespace glcs::test;

namespace {

// true iff some walk of g (any start) spells s
bool spelled_by_walk(const AtomicGraph& g, const std::u32string& s) {
    std::vector<bool> at(g.size(), false);
    for (size_t v = 0; v < g.size(); ++v) {
        at[v] = !s.empty() && g.label(v) == s[0];
    }
    for (size_t p = 1; p < s.size(); ++p) {
        std::vector<bool> next(g.size(), false);
        for (size_t v = 0; v < g.size(); ++v) {
            if (at[v]) {
                for (size_t w : g.out_edges(v)) {
                    next[w] = next[w] || g.label(w) == s[p];
                }
            }
        }
        at = std::move(next);
    }
    return std::find(at.begin(), at.end(), true) != at.end();
}

// reach[c][d]: component d reachable from c, c itself included
std::vector<std::vector<bool>> component_closure(const CondensedGraph& h) {
    std::vector<std::vector<bool>> reach(h.size(), std::vector<bool>(h.size(), false));
    // index order is topological, so one backward sweep suffices
    for (size_t c = h.size(); c-- > 0;) {
        reach[c][c] = true;
        for (size_t d : h.out_edges(c)) {
            for (size_t e = 0; e < h.size(); ++e) {
                reach[c][e] = reach[c][e] || reach[d][e];
            }
        }
    }
    return reach;
}

}

TEST_SUITE("cyclic") {

TEST_CASE("intersection index") {
    auto h_a = condense(atomic(U"a"));
    auto index = build_intersection_index(h_a, h_a);
    CHECK(index.has_common(0, 0));
    CHECK(index.common(0, 0) == std::vector<char32_t>{U'a'});

    auto h_ab = condense(atomic(U"ab", {{0, 1}, {1, 0}}));
    auto h_c = condense(atomic(U"c"));
    auto none = build_intersection_index(h_ab, h_c);
    CHECK_FALSE(none.has_common(0, 0));
    CHECK(none.common(0, 0).empty());

    std::mt19937_64 rng(3101);
    for (int trial = 0; trial < 50; ++trial) {
        auto h1 = condense(random_digraph(rng, 8, 14, 4));
        auto h2 = condense(random_digraph(rng, 8, 14, 4));
        auto idx = build_intersection_index(h1, h2);
        for (size_t i = 0; i < h1.size(); ++i) {
            for (size_t j = 0; j < h2.size(); ++j) {
                std::vector<char32_t> naive;
                for (char32_t c : h1.component(i).label_set) {
                    for (char32_t d : h2.component(j).label_set) {
                        if (c == d) {
                            naive.push_back(c);
                        }
                    }
                }
                CHECK(idx.common(i, j) == naive);
                CHECK(idx.has_common(i, j) == !naive.empty());
                for (char32_t c = U'a'; c < U'a' + 4; ++c) {
                    bool member = std::find(naive.begin(), naive.end(), c) != naive.end();
                    CHECK(idx.contains(i, j, c) == member);
                }
            }
        }
    }
}

TEST_CASE("curated cyclic answers") {
    for (const auto& c : curated_cyclic_cases()) {
        CAPTURE(c.name);
        CHECK(seq_ic_lcs_cyclic(c.g1, c.g2, c.g3) == c.expected);
        CHECK(oracle_seq_ic_product(c.g1, c.g2, c.g3) == c.expected);
        // swapping the targets cannot matter
        CHECK(seq_ic_lcs_cyclic(c.g2, c.g1, c.g3) == c.expected);
    }
}

TEST_CASE("errors") {
    auto a = atomic(U"a");
    CHECK_THROWS_AS(seq_ic_lcs_cyclic(a, a, self_loop(U'a')), CyclicConstraint);
    CHECK_THROWS_AS(seq_ic_lcs_cyclic(atomic(U""), a, a), EmptyGraph);
    CHECK_THROWS_AS(seq_ic_lcs_cyclic(a, a, atomic(U"")), EmptyGraph);
}

TEST_CASE("base layer is infinite exactly below matched cyclic pairs") {
    std::mt19937_64 rng(3102);
    size_t direct = 0, inherited = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto g1 = random_digraph(rng, 7, 12, 3);
        auto g2 = random_digraph(rng, 7, 12, 3);
        auto g3 = random_dag(rng, 3, 3, 3);
        auto h1 = condense(g1), h2 = condense(g2);
        auto o1 = topo_sort(h1), o2 = topo_sort(h2), o3 = topo_sort(g3);
        auto index = build_intersection_index(h1, h2);
        auto table = seq_ic_table_cyclic(h1, o1, h2, o2, g3, o3, index);
        CHECK(table.cell_count() == h1.size() * h2.size() * (g3.size() + 1));
        auto r1 = component_closure(h1), r2 = component_closure(h2);
        auto matched_cyclic = [&](size_t c1, size_t c2) {
            return h1.component(c1).is_cyclic && h2.component(c2).is_cyclic && index.has_common(c1, c2);
        };
        for (size_t c1 = 0; c1 < h1.size(); ++c1) {
            for (size_t c2 = 0; c2 < h2.size(); ++c2) {
                // +inf is assigned on matched cyclic pairs and flows to every pair below one
                bool expect_inf = false;
                for (size_t x = 0; x < h1.size(); ++x) {
                    for (size_t y = 0; y < h2.size(); ++y) {
                        expect_inf = expect_inf || (r1[x][c1] && r2[y][c2] && matched_cyclic(x, y));
                    }
                }
                auto value = table.at(o1.rank[c1] + 1, o2.rank[c2] + 1, 0);
                CHECK(value.is_pos_inf() == expect_inf);
                if (!expect_inf) {
                    CHECK(value.is_finite());
                }
                direct += matched_cyclic(c1, c2);
                inherited += expect_inf && !matched_cyclic(c1, c2);
            }
        }
    }
    CHECK(direct > 0);
    CHECK(inherited > 0);
}

TEST_CASE("an infinite bonus never revives an empty state") {
    CHECK(ExtLen::pos_inf() + ExtLen::neg_inf() == ExtLen::neg_inf());
    // the constraint's 'b' is unmatched, so its successor 'a' stays empty
    auto loop = self_loop(U'a');
    auto h = condense(loop);
    auto g3 = chain(U"ba");
    auto o = topo_sort(h);
    auto table = seq_ic_table_cyclic(h, o, h, o, g3, topo_sort(g3), build_intersection_index(h, h));
    CHECK(table.at(1, 1, 0).is_pos_inf());
    CHECK(table.at(1, 1, 1).is_neg_inf());
    CHECK(table.at(1, 1, 2).is_neg_inf());
    CHECK(seq_ic_lcs_cyclic(loop, loop, g3) == ExtLen::neg_inf());

    // one cyclic and one plain vertex add exactly 1 per match
    auto path = chain(U"aa");
    auto hp = condense(path);
    auto op = topo_sort(hp);
    auto g3a = atomic(U"a");
    auto mixed = seq_ic_table_cyclic(h, o, hp, op, g3a, topo_sort(g3a), build_intersection_index(h, hp));
    CHECK(mixed.at(1, 1, 1) == ExtLen::finite(1));
    CHECK(mixed.at(1, 2, 1) == ExtLen::finite(2));
}

TEST_CASE("acyclic inputs agree with the dag engine") {
    std::mt19937_64 rng(3103);
    for (int trial = 0; trial < 150; ++trial) {
        auto g1 = random_dag(rng, 6, 8, 3);
        auto g2 = random_dag(rng, 6, 8, 3);
        auto g3 = random_dag(rng, 4, 4, 3);
        CHECK(seq_ic_lcs_cyclic(g1, g2, g3) == seq_ic_lcs_dag(g1, g2, g3));
    }
}

TEST_CASE("random cyclic inputs against the product search") {
    std::mt19937_64 rng(3104);
    size_t infinite = 0, finite = 0, empty = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto g1 = random_digraph(rng, 5, 8, 2);
        auto g2 = random_digraph(rng, 5, 8, 2);
        auto g3 = random_dag(rng, 3, 2, 2);
        auto value = seq_ic_lcs_cyclic(g1, g2, g3);
        CHECK(value == oracle_seq_ic_product(g1, g2, g3));
        infinite += value.is_pos_inf();
        finite += value.is_finite();
        empty += value.is_neg_inf();
    }
    // the sample must exercise every outcome
    CHECK(infinite > 20);
    CHECK(finite > 20);
    CHECK(empty > 20);
}

TEST_CASE("product search agrees with path enumeration on dags") {
    std::mt19937_64 rng(3105);
    for (int trial = 0; trial < 100; ++trial) {
        auto g1 = random_dag(rng, 6, 8, 3);
        auto g2 = random_dag(rng, 6, 8, 3);
        auto g3 = random_dag(rng, 3, 3, 3);
        CHECK(oracle_seq_ic_product(g1, g2, g3) == oracle_seq_ic(g1, g2, g3));
    }
}

TEST_CASE("unrolling") {
    auto dag = atomic(U"abcd", {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(maximal_path_strings(unroll_bounded(dag, 3)).strings == maximal_path_strings(dag).strings);

    auto unrolled = unroll_bounded(self_loop(U'a'), 3);
    CHECK(unrolled.size() == 4);
    CHECK(is_acyclic(unrolled));
    CHECK(maximal_path_strings(unrolled).strings == std::set<std::u32string>{U"aaaa"});

    std::mt19937_64 rng(3106);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_digraph(rng, 6, 10, 3);
        for (size_t t = 1; t <= 3; ++t) {
            auto u = unroll_bounded(g, t);
            REQUIRE(is_acyclic(u));
            auto paths = maximal_path_strings(u);
            REQUIRE_FALSE(paths.truncated);
            for (const auto& s : paths.strings) {
                CHECK(spelled_by_walk(g, s));
            }
        }
    }
}

TEST_CASE("probe stays below the exact answer") {
    std::mt19937_64 rng(3107);
    for (int trial = 0; trial < 100; ++trial) {
        auto g1 = random_digraph(rng, 4, 6, 2);
        auto g2 = random_digraph(rng, 4, 6, 2);
        auto g3 = random_dag(rng, 3, 2, 2);
        auto exact = seq_ic_lcs_cyclic(g1, g2, g3);
        auto probe = oracle_infinite_probe(g1, g2, g3, 3);
        for (size_t t = 0; t < probe.values.size(); ++t) {
            CHECK(probe.values[t] <= exact);
            if (t > 0) {
                CHECK(probe.values[t - 1] <= probe.values[t]);
            }
        }
        if (exact.is_pos_inf()) {
            // unbounded answers keep growing with every unroll
            CHECK(probe.values[0] < probe.values[1]);
            CHECK(probe.values[1] < probe.values[2]);
        }
    }
}

TEST_CASE("probe verdicts on the curated suite") {
    for (const auto& c : curated_cyclic_cases()) {
        CAPTURE(c.name);
        auto probe = oracle_infinite_probe(c.g1, c.g2, c.g3, 4);
        if (c.expected.is_pos_inf()) {
            CHECK(probe.verdict == ProbeVerdict::growing);
            CHECK(probe.values[0] < probe.values[1]);
            CHECK(probe.values[1] < probe.values[2]);
        }
        else {
            CHECK(probe.verdict == ProbeVerdict::stable);
            CHECK(probe.values.back() == c.expected);
        }
    }
}

}
