#include "glcs/string_lcs.hpp"

#include <algorithm>
#include <vector>

namespace glcs {

size_t lcs_strings(std::u32string_view a, std::u32string_view b) {
    std::vector<size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            }
            else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

ExtLen seq_ic_lcs_strings(std::u32string_view a, std::u32string_view b, std::u32string_view p) {
    const size_t rows = a.size() + 1, cols = b.size() + 1, layers = p.size() + 1;
    std::vector<ExtLen> table(rows * cols * layers);
    auto at = [&](size_t i, size_t j, size_t k) -> ExtLen& {
        return table[(i * cols + j) * layers + k];
    };

    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            for (size_t k = 0; k < layers; ++k) {
                if (i == 0 || j == 0) {
                    at(i, j, k) = k == 0 ? ExtLen::finite(0) : ExtLen::neg_inf();
                }
                else if (a[i - 1] == b[j - 1]) {
                    if (k > 0 && a[i - 1] == p[k - 1]) {
                        at(i, j, k) = at(i - 1, j - 1, k - 1) + one_len;
                    }
                    else {
                        at(i, j, k) = at(i - 1, j - 1, k) + one_len;
                    }
                }
                else {
                    at(i, j, k) = std::max(at(i - 1, j, k), at(i, j - 1, k));
                }
            }
        }
    }
    return at(a.size(), b.size(), p.size());
}

bool is_subsequence(std::u32string_view needle, std::u32string_view haystack) {
    size_t matched = 0;
    for (size_t i = 0; i < haystack.size() && matched < needle.size(); ++i) {
        if (haystack[i] == needle[matched]) {
            ++matched;
        }
    }
    return matched == needle.size();
}

}
