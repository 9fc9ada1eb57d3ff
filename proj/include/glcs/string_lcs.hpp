#ifndef glcs_string_lcs_hpp
#define glcs_string_lcs_hpp

#include <cstddef>
#include <string_view>

#include "glcs/ext_len.hpp"

namespace glcs {

// Classic LCS length, O(|a||b|) time with two rolling rows.
size_t lcs_strings(std::u32string_view a, std::u32string_view b);

/*
 * Length of a longest common subsequence of a and b that contains p as a
 * subsequence, or -inf when there is none. O(|a||b||p|) time and space.
 * An empty p reduces to lcs_strings.
 */
ExtLen seq_ic_lcs_strings(std::u32string_view a, std::u32string_view b, std::u32string_view p);

// true iff needle is a subsequence of haystack
bool is_subsequence(std::u32string_view needle, std::u32string_view haystack);

}

#endif /* glcs_string_lcs_hpp */
