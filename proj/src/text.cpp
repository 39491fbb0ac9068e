#include "mcua/text.hpp"

#include <fstream>
#include <sstream>

#include "mcua/error.hpp"
#include "mcua/io/kvconfig.hpp"

namespace mcua {

namespace {
CharClassConfig g_config;  // defaults until the CLI overrides
}

const CharClassConfig& charclass_config() { return g_config; }

void set_charclass_config(CharClassConfig cfg) { g_config = std::move(cfg); }

const char* to_string(MatchingType t) {
    switch (t) {
        case MatchingType::EE: return "EE";
        case MatchingType::CE: return "CE";
        case MatchingType::CC: return "CC";
    }
    return "?";
}

MatchingType matching_type_from_string(std::string_view s) {
    if (s == "EE" || s == "ee") return MatchingType::EE;
    if (s == "CE" || s == "ce") return MatchingType::CE;
    if (s == "CC" || s == "cc") return MatchingType::CC;
    throw DataError("unknown matching type: " + std::string(s));
}

CharClass classify_char(char32_t cp, const CharClassConfig& cfg) {
    if (cfg.is_chinese(cp)) return CharClass::ChineseLetter;
    if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z'))
        return CharClass::EnglishLetter;
    if (cfg.is_splitter(cp)) return CharClass::WordSplitter;
    return CharClass::SpecialSymbol;
}

CharClass classify_char(char32_t cp) { return classify_char(cp, g_config); }

NameString classify_name(std::u32string raw) {
    if (raw.empty()) throw EmptyNameError();
    NameType type = NameType::En;
    for (char32_t cp : raw) {
        if (classify_char(cp) == CharClass::ChineseLetter) {
            type = NameType::Cn;
            break;
        }
    }
    return NameString{std::move(raw), type};
}

NameString classify_name(std::string_view raw_utf8) {
    return classify_name(utf8_decode(raw_utf8));
}

MatchingType matching_type(const NameString& a, const NameString& b) {
    const bool a_cn = a.name_type == NameType::Cn;
    const bool b_cn = b.name_type == NameType::Cn;
    if (a_cn && b_cn) return MatchingType::CC;
    if (!a_cn && !b_cn) return MatchingType::EE;
    return MatchingType::CE;
}

std::u32string lowercase(std::u32string_view name) {
    std::u32string out(name);
    for (char32_t& cp : out)
        if (cp >= U'A' && cp <= U'Z') cp += 0x20;
    return out;
}

std::u32string strip_splitters(std::u32string_view name) {
    std::u32string out;
    out.reserve(name.size());
    for (char32_t cp : name)
        if (classify_char(cp) != CharClass::WordSplitter) out.push_back(cp);
    return out;
}

std::u32string special_string(std::u32string_view name) {
    std::u32string out;
    for (char32_t cp : name) {
        const CharClass c = classify_char(cp);
        if (c == CharClass::SpecialSymbol || c == CharClass::WordSplitter)
            out.push_back(cp);
    }
    return out;
}

std::u32string non_special_string(std::u32string_view name) {
    std::u32string out;
    for (char32_t cp : name) {
        const CharClass c = classify_char(cp);
        if (c == CharClass::ChineseLetter || c == CharClass::EnglishLetter)
            out.push_back(cp);
    }
    return out;
}

std::u32string english_string(std::u32string_view name) {
    std::u32string out;
    for (char32_t cp : name)
        if (classify_char(cp) == CharClass::EnglishLetter) out.push_back(cp);
    return out;
}

namespace {

char32_t parse_hex_cp(const std::string& tok) {
    return static_cast<char32_t>(std::stoul(tok, nullptr, 16));
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : v) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

CharClassConfig parse_charclass_config(const std::string& path) {
    const KvConfig kv = KvConfig::load(path);
    CharClassConfig cfg;
    if (auto ranges = kv.get("charclass", "cjk_ranges")) {
        cfg.cjk_ranges.clear();
        for (const std::string& item : split_list(*ranges)) {
            const auto dash = item.find('-');
            if (dash == std::string::npos)
                throw DataError(path + ": bad range '" + item + "'");
            cfg.cjk_ranges.emplace_back(parse_hex_cp(item.substr(0, dash)),
                                        parse_hex_cp(item.substr(dash + 1)));
        }
    }
    if (auto splitters = kv.get("charclass", "splitters")) {
        cfg.splitters.clear();
        for (const std::string& item : split_list(*splitters))
            cfg.splitters.push_back(parse_hex_cp(item));
    }
    return cfg;
}

}  // namespace mcua
