#ifndef glcs_unicode_hpp
#define glcs_unicode_hpp

#include <optional>
#include <string>
#include <string_view>

namespace glcs {

// Strict UTF-8 decode; nullopt on malformed input, overlongs or surrogates.
std::optional<std::u32string> decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);
std::string encode_utf8(char32_t c);

}

#endif /* glcs_unicode_hpp */
