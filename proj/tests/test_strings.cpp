#include <doctest.h>

#include "glcs/errors.hpp"
#include "glcs/string_lcs.hpp"
#include "glcs/unicode.hpp"
#include "helpers.hpp"

using namespace glcs;
using namespace glcs::test;

TEST_SUITE("strings") {

TEST_CASE("extended lengths order and add") {
    const auto ninf = ExtLen::neg_inf();
    const auto pinf = ExtLen::pos_inf();
    CHECK(ninf < ExtLen::finite(0));
    CHECK(ExtLen::finite(0) < ExtLen::finite(1));
    CHECK(ExtLen::finite(1000000) < pinf);
    CHECK(ExtLen() == ninf);

    CHECK(ExtLen::finite(2) + ExtLen::finite(3) == ExtLen::finite(5));
    CHECK(pinf + ExtLen::finite(3) == pinf);
    CHECK(ninf + ExtLen::finite(3) == ninf);
    CHECK(pinf + ninf == ninf);
    CHECK(ninf + pinf == ninf);
    CHECK(pinf + pinf == pinf);

    CHECK(ninf.to_string() == "-inf");
    CHECK(pinf.to_string() == "inf");
    CHECK(ExtLen::finite(7).to_string() == "7");
    CHECK_THROWS_AS(pinf.value(), std::logic_error);
    CHECK_THROWS_AS(ExtLen::finite(std::uint64_t(1) << 40), std::overflow_error);
}

TEST_CASE("utf-8 decoding is strict") {
    CHECK(decode_utf8("abc") == std::u32string(U"abc"));
    CHECK(decode_utf8("\xc3\xa9\xe2\x82\xac\xf0\x9f\x98\x80") == std::u32string(U"é€\U0001F600"));
    CHECK_FALSE(decode_utf8("\xc0\xaf").has_value());          // overlong
    CHECK_FALSE(decode_utf8("\xed\xa0\x80").has_value());      // surrogate
    CHECK_FALSE(decode_utf8("\xf4\x90\x80\x80").has_value());  // above U+10FFFF
    CHECK_FALSE(decode_utf8("\xe2\x82").has_value());          // truncated
    CHECK_FALSE(decode_utf8("\x80").has_value());
    std::u32string text = U"xé€\U0001F600";
    CHECK(decode_utf8(encode_utf8(text)) == text);
}

TEST_CASE("lcs of strings") {
    CHECK(lcs_strings(U"", U"abc") == 0);
    CHECK(lcs_strings(U"abc", U"abc") == 3);
    CHECK(lcs_strings(U"abcbdab", U"bdcaba") == brute_lcs(U"abcbdab", U"bdcaba"));
    CHECK(lcs_strings(U"abcbdab", U"bdcaba") == 4);
}

TEST_CASE("constrained lcs of strings") {
    CHECK(seq_ic_lcs_strings(U"abcd", U"abcd", U"bc") == ExtLen::finite(4));
    CHECK(seq_ic_lcs_strings(U"abc", U"abc", U"z") == ExtLen::neg_inf());
    CHECK(seq_ic_lcs_strings(U"", U"", U"") == ExtLen::finite(0));
    CHECK(seq_ic_lcs_strings(U"ab", U"ba", U"ab") == ExtLen::neg_inf());
}

TEST_CASE("random strings against exhaustive search") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 400; ++trial) {
        auto a = random_string(rng, 7, 3);
        auto b = random_string(rng, 7, 3);
        auto p = random_string(rng, 3, 3);
        CAPTURE(encode_utf8(a));
        CAPTURE(encode_utf8(b));
        CAPTURE(encode_utf8(p));
        const auto value = seq_ic_lcs_strings(a, b, p);
        CHECK(value == brute_seq_ic(a, b, p));
        CHECK(lcs_strings(a, b) == brute_lcs(a, b));

        CHECK(seq_ic_lcs_strings(a, b, U"") == ExtLen::finite(lcs_strings(a, b)));
        CHECK(value <= ExtLen::finite(lcs_strings(a, b)));
        if (value.is_finite()) {
            CHECK(value >= ExtLen::finite(p.size()));
        }
        CHECK(seq_ic_lcs_strings(b, a, p) == value);
        CHECK(lcs_strings(b, a) == lcs_strings(a, b));
        CHECK(is_subsequence(p, a) == contains_subsequence(a, p));
    }
}

}
