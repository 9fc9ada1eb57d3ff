#ifndef glcs_dp_tables_hpp
#define glcs_dp_tables_hpp

#include <cstddef>
#include <cstdint>
#include <vector>

#include "glcs/ext_len.hpp"

namespace glcs {

/*
 * Dense (n1 + 1) x (n2 + 1) table of LCS lengths indexed by 1-based
 * topological ranks; row 0 and column 0 are the empty layer and hold 0.
 */
class DpTable2 {
public:
    DpTable2() = default;
    DpTable2(size_t n1, size_t n2) : n1_(n1), n2_(n2), values_((n1 + 1) * (n2 + 1), 0) {}

    size_t rows() const { return n1_; }
    size_t cols() const { return n2_; }
    std::uint32_t& at(size_t i, size_t j) { return values_[i * (n2_ + 1) + j]; }
    std::uint32_t at(size_t i, size_t j) const { return values_[i * (n2_ + 1) + j]; }
    size_t cell_count() const { return values_.size(); }

private:
    size_t n1_ = 0;
    size_t n2_ = 0;
    std::vector<std::uint32_t> values_;
};

/*
 * Dense n1 x n2 x (n3 + 1) table of extended lengths. i and j are 1-based
 * ranks of the two target graphs; k is a 1-based rank of the constraint
 * graph, with k = 0 the unconstrained layer.
 */
class ExtLenTable3 {
public:
    ExtLenTable3() = default;
    ExtLenTable3(size_t n1, size_t n2, size_t n3)
        : n1_(n1), n2_(n2), n3_(n3), values_(n1 * n2 * (n3 + 1)) {}

    size_t dim1() const { return n1_; }
    size_t dim2() const { return n2_; }
    size_t dim3() const { return n3_; }

    ExtLen& at(size_t i, size_t j, size_t k) { return values_[index(i, j, k)]; }
    ExtLen at(size_t i, size_t j, size_t k) const { return values_[index(i, j, k)]; }

    size_t cell_count() const { return values_.size(); }
    size_t allocated_bytes() const { return values_.capacity() * sizeof(ExtLen); }

private:
    size_t index(size_t i, size_t j, size_t k) const {
        return ((i - 1) * n2_ + (j - 1)) * (n3_ + 1) + k;
    }

    size_t n1_ = 0;
    size_t n2_ = 0;
    size_t n3_ = 0;
    std::vector<ExtLen> values_;
};

// D over acyclic targets
using DpTable3 = ExtLenTable3;
// D-hat over condensed targets
using DpTable3Hat = ExtLenTable3;

}

#endif /* glcs_dp_tables_hpp */
