#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcua/text.hpp"

namespace mcua {

enum class RomanizationSystem : int {
    HanyuPinyin = 0,
    Cantonese = 1,
    TongyongPinyin = 2,
    WadeGiles = 3,
};

inline constexpr std::array<RomanizationSystem, 4> kSystems = {
    RomanizationSystem::HanyuPinyin, RomanizationSystem::Cantonese,
    RomanizationSystem::TongyongPinyin, RomanizationSystem::WadeGiles};

const char* to_string(RomanizationSystem s);

/// Per-call diagnostics from transliterate(): Chinese letters with no table
/// entry pass through verbatim and are counted here.
struct TranslitStats {
    std::size_t unmapped_letters = 0;
};

/// The loaded transliteration data: four per-system character tables (H_c),
/// the family-name set (S_F), the polyphone tables (H_f, H_w) and the
/// traditional-to-simplified map (T_c). Immutable after load.
class TranslitTables {
public:
    /// Loads hanyu.tsv, cantonese.tsv, tongyong.tsv, wadegiles.tsv,
    /// family_names.txt, polyphone_family.tsv, polyphone_words.tsv and
    /// trad2simp.tsv from `dir`.
    static TranslitTables load(const std::string& dir);

    /// Ts(n): traditional letters replaced via T_c, everything else kept.
    std::u32string simplify(std::u32string_view name) const;

    /// Longest S_F member prefixing the leading run of Chinese letters.
    std::optional<std::u32string> detect_family(const NameString& name) const;

    /// The name with its detected family prefix moved to the end of the
    /// leading Chinese-letter run; nullopt when no family name is found.
    std::optional<std::u32string> reorder_family(const NameString& name) const;

    std::string transliterate(std::u32string_view text,
                              RomanizationSystem system,
                              TranslitStats* stats = nullptr) const;

    /// Core routine: `family` are [begin,end) codepoint positions of the
    /// family name inside `text` (resolved through H_f), or {0,0} for none.
    std::string transliterate_with_family(std::u32string_view text,
                                          RomanizationSystem system,
                                          std::pair<std::size_t, std::size_t> family,
                                          TranslitStats* stats = nullptr) const;

    /// The 8 CE phonetic forms, in order [Hy(n), Ct(n), Ty(n), Wd(n),
    /// Hy(n'), Ct(n'), Ty(n'), Wd(n')] where n' is the family-reordered
    /// name; without a family name, slots 5-8 duplicate slots 1-4.
    std::vector<std::string> phonetic_forms_ce(const NameString& name) const;

    /// The 5 CC transforms, in order [Ts(n), Hy(n), Ct(n), Ty(n), Wd(n)],
    /// with English letters lowercased.
    std::vector<std::string> transforms_cc(const NameString& name) const;

    bool covers(char32_t cp) const;
    const std::map<std::string, std::string>& file_versions() const {
        return versions_;
    }

    /// All covered single characters (useful to the synthetic generator).
    std::vector<char32_t> covered_chars() const;
    const std::vector<std::u32string>& family_names() const {
        return family_list_;
    }
    std::optional<char32_t> to_traditional(char32_t simp) const;
    std::optional<std::string> char_syllable(char32_t cp,
                                             RomanizationSystem s) const;

private:
    using Syllables = std::array<std::string, 4>;

    std::unordered_map<char32_t, Syllables> h_c_;
    std::vector<std::u32string> family_list_;           // S_F
    std::map<std::u32string, Syllables> h_f_;
    std::map<std::u32string, Syllables> h_w_;
    std::size_t h_w_max_len_ = 0;
    std::unordered_map<char32_t, char32_t> t_c_;
    std::unordered_map<char32_t, char32_t> t_c_rev_;    // simp -> one trad
    std::map<std::string, std::string> versions_;

    std::optional<std::u32string> family_prefix(std::u32string_view text) const;
};

}  // namespace mcua
