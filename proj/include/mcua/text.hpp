#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcua/unicode.hpp"

namespace mcua {

enum class CharClass {
    ChineseLetter,
    EnglishLetter,
    WordSplitter,
    SpecialSymbol,
};

enum class NameType { En, Cn };

/// EE: both names En; CC: both Cn; CE: one of each.
enum class MatchingType { EE, CE, CC };

const char* to_string(MatchingType t);
MatchingType matching_type_from_string(std::string_view s);

/// Codepoint ranges that classify as ChineseLetter plus the word-splitter
/// set. Defaults cover the CJK Unified Ideographs block and Extension A,
/// with {space, underscore} as splitters; a key-value config file can
/// override both (see load_charclass_config).
struct CharClassConfig {
    std::vector<std::pair<char32_t, char32_t>> cjk_ranges{
        {0x4E00, 0x9FFF}, {0x3400, 0x4DBF}};
    std::vector<char32_t> splitters{U' ', U'_'};

    bool is_chinese(char32_t cp) const {
        for (const auto& [lo, hi] : cjk_ranges)
            if (cp >= lo && cp <= hi) return true;
        return false;
    }
    bool is_splitter(char32_t cp) const {
        for (char32_t s : splitters)
            if (cp == s) return true;
        return false;
    }
};

/// Process-wide classification config. Defaults compiled in; the CLI swaps
/// it once at startup when a config file is given. Not synchronized: set it
/// before any parallel work starts.
const CharClassConfig& charclass_config();
void set_charclass_config(CharClassConfig cfg);

/// Parses the `[charclass]` section (`cjk_ranges`, `splitters`, hex values)
/// of a key-value config file.
CharClassConfig parse_charclass_config(const std::string& path);

/// Total, deterministic classification of one codepoint.
CharClass classify_char(char32_t cp);
CharClass classify_char(char32_t cp, const CharClassConfig& cfg);

/// One account name: decoded codepoints plus its En/Cn type.
/// Cn iff at least one codepoint classifies as ChineseLetter.
struct NameString {
    std::u32string raw;
    NameType name_type = NameType::En;

    std::string utf8() const { return utf8_encode(raw); }
};

/// Throws EmptyNameError when `raw` has zero codepoints.
NameString classify_name(std::string_view raw_utf8);
NameString classify_name(std::u32string raw);

MatchingType matching_type(const NameString& a, const NameString& b);

/// ASCII A-Z -> a-z; everything else unchanged.
std::u32string lowercase(std::u32string_view name);

/// Removes all WordSplitter codepoints, preserving order.
std::u32string strip_splitters(std::u32string_view name);

/// sp(n): the SpecialSymbol and WordSplitter codepoints in original order.
std::u32string special_string(std::u32string_view name);

/// ns(n): the ChineseLetter and EnglishLetter codepoints in original order.
std::u32string non_special_string(std::u32string_view name);

/// el(n): the EnglishLetter codepoints in original order.
std::u32string english_string(std::u32string_view name);

}  // namespace mcua
