#pragma once

#include <string>
#include <string_view>

namespace mcua {

/// Decodes UTF-8 into a codepoint sequence. Invalid byte sequences decode to
/// U+FFFD one byte at a time, so decoding is total.
std::u32string utf8_decode(std::string_view s);

/// Encodes a codepoint sequence back to UTF-8.
std::string utf8_encode(std::u32string_view cps);

std::string utf8_encode(char32_t cp);

}  // namespace mcua
