#include "glcs/dag_lcs.hpp"

#include <algorithm>
#include <stdexcept>

#include "glcs/errors.hpp"
#include "ranked.hpp"

namespace glcs {

using detail::RankedGraph;
using detail::rank_graph;

namespace {

DpTable2 fill_lcs_table(const RankedGraph& r1, const RankedGraph& r2) {
    DpTable2 table(r1.size, r2.size);
    for (size_t i = 1; i <= r1.size; ++i) {
        for (size_t j = 1; j <= r2.size; ++j) {
            std::uint32_t best = 0;
            if (r1.label[i] == r2.label[j]) {
                for (size_t x : r1.preds[i]) {
                    for (size_t y : r2.preds[j]) {
                        best = std::max(best, table.at(x, y));
                    }
                }
                table.at(i, j) = best + 1;
            }
            else {
                for (size_t x : r1.preds[i]) {
                    best = std::max(best, table.at(x, j));
                }
                for (size_t y : r2.preds[j]) {
                    best = std::max(best, table.at(i, y));
                }
                table.at(i, j) = best;
            }
        }
    }
    return table;
}

DpTable3 fill_seq_ic_table(const RankedGraph& r1, const RankedGraph& r2, const RankedGraph& r3,
                           const SeqIcOptions& options) {
    DpTable3 table(r1.size, r2.size, r3.size);

    auto lcs = fill_lcs_table(r1, r2);
    for (size_t i = 1; i <= r1.size; ++i) {
        for (size_t j = 1; j <= r2.size; ++j) {
            table.at(i, j, 0) = ExtLen::finite(lcs.at(i, j));
        }
    }

    for (size_t i = 1; i <= r1.size; ++i) {
        const auto& preds1 = r1.preds[i];
        for (size_t j = 1; j <= r2.size; ++j) {
            const auto& preds2 = r2.preds[j];
            const bool targets_match = r1.label[i] == r2.label[j];
            for (size_t k = 1; k <= r3.size; ++k) {
                const auto& preds3 = r3.preds[k];
                ExtLen best = ExtLen::neg_inf();
                if (targets_match && r1.label[i] == r3.label[k]) {
                    if (preds3.empty()) {
                        if (options.seed_single_match) {
                            best = one_len;
                        }
                        for (size_t x : preds1) {
                            for (size_t y : preds2) {
                                best = std::max(best, table.at(x, y, 0) + one_len);
                            }
                        }
                    }
                    else {
                        for (size_t x : preds1) {
                            for (size_t y : preds2) {
                                for (size_t z : preds3) {
                                    best = std::max(best, table.at(x, y, z) + one_len);
                                }
                            }
                        }
                    }
                }
                else if (targets_match) {
                    for (size_t x : preds1) {
                        for (size_t y : preds2) {
                            best = std::max(best, table.at(x, y, k) + one_len);
                        }
                    }
                }
                else {
                    for (size_t x : preds1) {
                        best = std::max(best, table.at(x, j, k));
                    }
                    for (size_t y : preds2) {
                        best = std::max(best, table.at(i, y, k));
                    }
                }
                table.at(i, j, k) = best;
            }
        }
    }
    return table;
}

void require_non_empty(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3) {
    if (g1.empty() || g2.empty() || g3.empty()) {
        throw EmptyGraph();
    }
}

struct Cell {
    size_t i;
    size_t j;
    size_t k;
};

// First cell in (i, j, k) scan order attaining the maximum over sink layers.
std::pair<ExtLen, Cell> best_sink_cell(const DpTable3& table, const RankedGraph& r3) {
    ExtLen best = ExtLen::neg_inf();
    Cell where{1, 1, 1};
    for (size_t i = 1; i <= table.dim1(); ++i) {
        for (size_t j = 1; j <= table.dim2(); ++j) {
            for (size_t k = 1; k <= table.dim3(); ++k) {
                if (r3.is_sink[k] && table.at(i, j, k) > best) {
                    best = table.at(i, j, k);
                    where = Cell{i, j, k};
                }
            }
        }
    }
    return {best, where};
}

/*
 * Walks back from a finite cell, each step re-deriving the first predecessor
 * (in scan order) that attains the cell's value under its recurrence case.
 */
std::u32string trace_back(const DpTable3& table, const RankedGraph& r1, const RankedGraph& r2,
                          const RankedGraph& r3, Cell cell) {
    std::u32string reversed;
    auto fail = []() -> std::u32string {
        throw std::logic_error("seq-ic traceback reached an unexplained cell");
    };

    while (true) {
        const auto [i, j, k] = cell;
        const ExtLen value = table.at(i, j, k);
        const bool targets_match = r1.label[i] == r2.label[j];

        if (k == 0) {
            const auto need = value.value();
            if (targets_match) {
                reversed.push_back(r1.label[i]);
                if (need == 1) {
                    break;
                }
                bool moved = false;
                for (size_t x : r1.preds[i]) {
                    for (size_t y : r2.preds[j]) {
                        if (!moved && table.at(x, y, 0) == ExtLen::finite(need - 1)) {
                            cell = Cell{x, y, 0};
                            moved = true;
                        }
                    }
                }
                if (!moved) {
                    return fail();
                }
            }
            else {
                if (need == 0) {
                    break;
                }
                auto x_it = std::find_if(r1.preds[i].begin(), r1.preds[i].end(),
                                         [&](size_t x) { return table.at(x, j, 0) == value; });
                if (x_it != r1.preds[i].end()) {
                    cell = Cell{*x_it, j, 0};
                    continue;
                }
                auto y_it = std::find_if(r2.preds[j].begin(), r2.preds[j].end(),
                                         [&](size_t y) { return table.at(i, y, 0) == value; });
                if (y_it == r2.preds[j].end()) {
                    return fail();
                }
                cell = Cell{i, *y_it, 0};
            }
            continue;
        }

        const ExtLen less = ExtLen::finite(value.value() - (value.value() > 0 ? 1 : 0));
        if (targets_match && r1.label[i] == r3.label[k]) {
            reversed.push_back(r1.label[i]);
            if (r3.preds[k].empty()) {
                if (value == one_len) {
                    break;
                }
                bool moved = false;
                for (size_t x : r1.preds[i]) {
                    for (size_t y : r2.preds[j]) {
                        if (!moved && table.at(x, y, 0) == less) {
                            cell = Cell{x, y, 0};
                            moved = true;
                        }
                    }
                }
                if (!moved) {
                    return fail();
                }
            }
            else {
                bool moved = false;
                for (size_t x : r1.preds[i]) {
                    for (size_t y : r2.preds[j]) {
                        for (size_t z : r3.preds[k]) {
                            if (!moved && table.at(x, y, z) == less) {
                                cell = Cell{x, y, z};
                                moved = true;
                            }
                        }
                    }
                }
                if (!moved) {
                    return fail();
                }
            }
        }
        else if (targets_match) {
            reversed.push_back(r1.label[i]);
            bool moved = false;
            for (size_t x : r1.preds[i]) {
                for (size_t y : r2.preds[j]) {
                    if (!moved && table.at(x, y, k) == less) {
                        cell = Cell{x, y, k};
                        moved = true;
                    }
                }
            }
            if (!moved) {
                return fail();
            }
        }
        else {
            auto x_it = std::find_if(r1.preds[i].begin(), r1.preds[i].end(),
                                     [&](size_t x) { return table.at(x, j, k) == value; });
            if (x_it != r1.preds[i].end()) {
                cell = Cell{*x_it, j, k};
                continue;
            }
            auto y_it = std::find_if(r2.preds[j].begin(), r2.preds[j].end(),
                                     [&](size_t y) { return table.at(i, y, k) == value; });
            if (y_it == r2.preds[j].end()) {
                return fail();
            }
            cell = Cell{i, *y_it, k};
        }
    }
    return std::u32string(reversed.rbegin(), reversed.rend());
}

}

DpTable2 lcs_table(const AtomicGraph& g1, const TopoOrder& order1,
                   const AtomicGraph& g2, const TopoOrder& order2) {
    return fill_lcs_table(rank_graph(g1, order1), rank_graph(g2, order2));
}

size_t lcs_dag(const AtomicGraph& g1, const AtomicGraph& g2) {
    auto table = lcs_table(g1, topo_sort(g1), g2, topo_sort(g2));
    std::uint32_t best = 0;
    for (size_t i = 1; i <= table.rows(); ++i) {
        for (size_t j = 1; j <= table.cols(); ++j) {
            best = std::max(best, table.at(i, j));
        }
    }
    return best;
}

DpTable3 seq_ic_table(const AtomicGraph& g1, const TopoOrder& order1,
                      const AtomicGraph& g2, const TopoOrder& order2,
                      const AtomicGraph& g3, const TopoOrder& order3,
                      const SeqIcOptions& options) {
    return fill_seq_ic_table(rank_graph(g1, order1), rank_graph(g2, order2),
                             rank_graph(g3, order3), options);
}

ExtLen seq_ic_lcs_dag(const AtomicGraph& g1, const AtomicGraph& g2, const AtomicGraph& g3,
                      const SeqIcOptions& options) {
    require_non_empty(g1, g2, g3);
    auto r1 = rank_graph(g1, topo_sort(g1));
    auto r2 = rank_graph(g2, topo_sort(g2));
    auto r3 = rank_graph(g3, topo_sort(g3));
    auto table = fill_seq_ic_table(r1, r2, r3, options);
    return best_sink_cell(table, r3).first;
}

DagSeqIcSolution solve_seq_ic_dag(const AtomicGraph& g1, const AtomicGraph& g2,
                                  const AtomicGraph& g3) {
    require_non_empty(g1, g2, g3);
    auto r1 = rank_graph(g1, topo_sort(g1));
    auto r2 = rank_graph(g2, topo_sort(g2));
    auto r3 = rank_graph(g3, topo_sort(g3));
    auto table = fill_seq_ic_table(r1, r2, r3, SeqIcOptions{});
    auto [length, cell] = best_sink_cell(table, r3);

    DagSeqIcSolution solution{length, std::nullopt};
    if (length.is_finite()) {
        solution.witness = trace_back(table, r1, r2, r3, cell);
    }
    return solution;
}

std::optional<std::u32string> seq_ic_lcs_dag_witness(const AtomicGraph& g1, const AtomicGraph& g2,
                                                     const AtomicGraph& g3) {
    return solve_seq_ic_dag(g1, g2, g3).witness;
}

}
