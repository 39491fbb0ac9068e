#include "mcua/translit.hpp"

#include <algorithm>

#include "mcua/error.hpp"
#include "mcua/io/tsv.hpp"
#include "mcua/unicode.hpp"

namespace mcua {

const char* to_string(RomanizationSystem s) {
    switch (s) {
        case RomanizationSystem::HanyuPinyin: return "hanyu";
        case RomanizationSystem::Cantonese: return "cantonese";
        case RomanizationSystem::TongyongPinyin: return "tongyong";
        case RomanizationSystem::WadeGiles: return "wadegiles";
    }
    return "?";
}

namespace {

char32_t single_char(const std::string& field, const std::string& file) {
    const std::u32string cps = utf8_decode(field);
    if (cps.size() != 1)
        throw DataError(file + ": expected a single character, got '" + field +
                        "'");
    return cps[0];
}

// Strips the spaces used to separate syllables inside a table field.
std::string joined(const std::string& field) {
    std::string out;
    for (char c : field)
        if (c != ' ') out.push_back(c);
    return out;
}

}  // namespace

TranslitTables TranslitTables::load(const std::string& dir) {
    TranslitTables t;
    const std::string sep = dir.empty() || dir.back() == '/' ? "" : "/";

    const std::array<std::string, 4> char_files = {
        "hanyu.tsv", "cantonese.tsv", "tongyong.tsv", "wadegiles.tsv"};
    for (int s = 0; s < 4; ++s) {
        const std::string path = dir + sep + char_files[s];
        const TsvFile f = read_tsv(path);
        t.versions_[char_files[s]] = f.version;
        for (const auto& row : f.rows) {
            if (row.size() != 2)
                throw DataError(path + ": expected 2 fields per row");
            const char32_t cp = single_char(row[0], path);
            if (row[1].empty())
                throw DataError(path + ": empty syllable for '" + row[0] + "'");
            t.h_c_[cp][s] = row[1];
        }
    }
    for (const auto& [cp, syls] : t.h_c_)
        for (int s = 0; s < 4; ++s)
            if (syls[s].empty())
                throw DataError(dir + ": character " + utf8_encode(cp) +
                                " is missing from the " +
                                std::string(char_files[s]) + " table");

    {
        const std::string path = dir + sep + "family_names.txt";
        const TsvFile f = read_tsv(path);
        t.versions_["family_names.txt"] = f.version;
        for (const auto& row : f.rows) {
            const std::u32string name = utf8_decode(row[0]);
            if (name.empty() || name.size() > 2)
                throw DataError(path + ": family names are 1 or 2 letters: '" +
                                row[0] + "'");
            t.family_list_.push_back(name);
        }
        if (t.family_list_.empty()) throw DataError(path + ": no family names");
    }

    const auto read_syllable_table = [&](const std::string& file,
                                         std::map<std::u32string, Syllables>& out) {
        const std::string path = dir + sep + file;
        const TsvFile f = read_tsv(path);
        t.versions_[file] = f.version;
        for (const auto& row : f.rows) {
            if (row.size() != 5)
                throw DataError(path + ": expected 5 fields per row");
            const std::u32string key = utf8_decode(row[0]);
            Syllables syls;
            for (int s = 0; s < 4; ++s) syls[s] = joined(row[1 + s]);
            out[key] = syls;
        }
    };
    read_syllable_table("polyphone_family.tsv", t.h_f_);
    read_syllable_table("polyphone_words.tsv", t.h_w_);
    for (const auto& [key, syls] : t.h_f_) {
        if (std::find(t.family_list_.begin(), t.family_list_.end(), key) ==
            t.family_list_.end())
            throw DataError(dir + ": H_f key " + utf8_encode(key) +
                            " is not in the family-name set");
    }
    for (const auto& [key, syls] : t.h_w_)
        t.h_w_max_len_ = std::max(t.h_w_max_len_, key.size());

    {
        const std::string path = dir + sep + "trad2simp.tsv";
        const TsvFile f = read_tsv(path);
        t.versions_["trad2simp.tsv"] = f.version;
        for (const auto& row : f.rows) {
            if (row.size() != 2)
                throw DataError(path + ": expected 2 fields per row");
            const char32_t trad = single_char(row[0], path);
            const char32_t simp = single_char(row[1], path);
            t.t_c_[trad] = simp;
            t.t_c_rev_.emplace(simp, trad);  // first mapping wins
        }
    }
    return t;
}

std::u32string TranslitTables::simplify(std::u32string_view name) const {
    std::u32string out(name);
    for (char32_t& cp : out) {
        const auto it = t_c_.find(cp);
        if (it != t_c_.end()) cp = it->second;
    }
    return out;
}

std::optional<std::u32string> TranslitTables::family_prefix(
    std::u32string_view text) const {
    // Longest match against the leading run of Chinese letters.
    std::size_t run = 0;
    while (run < text.size() &&
           classify_char(text[run]) == CharClass::ChineseLetter)
        ++run;
    if (run == 0) return std::nullopt;
    std::optional<std::u32string> best;
    for (const std::u32string& fam : family_list_) {
        if (fam.size() > run) continue;
        if (text.substr(0, fam.size()) == fam) {
            if (!best || fam.size() > best->size()) best = fam;
        }
    }
    return best;
}

std::optional<std::u32string> TranslitTables::detect_family(
    const NameString& name) const {
    if (name.name_type != NameType::Cn)
        throw TypeMismatchError("detect_family requires a Cn name");
    return family_prefix(name.raw);
}

std::optional<std::u32string> TranslitTables::reorder_family(
    const NameString& name) const {
    const auto fam = detect_family(name);
    if (!fam) return std::nullopt;
    std::size_t run = 0;
    while (run < name.raw.size() &&
           classify_char(name.raw[run]) == CharClass::ChineseLetter)
        ++run;
    // family prefix moves to the end of the Chinese-letter run
    std::u32string out;
    out.reserve(name.raw.size());
    out.append(name.raw, fam->size(), run - fam->size());
    out.append(*fam);
    out.append(name.raw, run, name.raw.size() - run);
    return out;
}

std::string TranslitTables::transliterate(std::u32string_view text,
                                          RomanizationSystem system,
                                          TranslitStats* stats) const {
    const auto fam = family_prefix(text);
    const std::size_t fam_len = fam ? fam->size() : 0;
    return transliterate_with_family(text, system, {0, fam_len}, stats);
}

std::string TranslitTables::transliterate_with_family(
    std::u32string_view text, RomanizationSystem system,
    std::pair<std::size_t, std::size_t> family, TranslitStats* stats) const {
    const int sys = static_cast<int>(system);
    std::string out;
    out.reserve(text.size() * 3);
    std::size_t i = 0;
    while (i < text.size()) {
        // Family-name span: resolved through H_f when present there.
        if (i == family.first && family.second > family.first) {
            const std::u32string fam(text.substr(i, family.second - family.first));
            const auto hf = h_f_.find(fam);
            if (hf != h_f_.end()) {
                out += hf->second[sys];
                i = family.second;
                continue;
            }
            // fall through: family name without a polyphone entry uses H_c
        }
        const char32_t cp = text[i];
        if (classify_char(cp) != CharClass::ChineseLetter) {
            out += utf8_encode(cp);
            ++i;
            continue;
        }
        // Greedy longest-match word scan over H_w, not crossing the family
        // span.
        bool matched = false;
        const std::size_t limit =
            (i < family.first) ? family.first : text.size();
        const std::size_t max_len =
            std::min(h_w_max_len_, limit - i);
        for (std::size_t len = max_len; len >= 1 && !matched; --len) {
            const std::u32string word(text.substr(i, len));
            const auto hw = h_w_.find(word);
            if (hw != h_w_.end()) {
                out += hw->second[sys];
                i += len;
                matched = true;
            }
        }
        if (matched) continue;
        const auto hc = h_c_.find(cp);
        if (hc != h_c_.end()) {
            out += hc->second[sys];
        } else {
            out += utf8_encode(cp);  // unmapped letters pass through
            if (stats) ++stats->unmapped_letters;
        }
        ++i;
    }
    return out;
}

std::vector<std::string> TranslitTables::phonetic_forms_ce(
    const NameString& name) const {
    if (name.name_type != NameType::Cn)
        throw TypeMismatchError("phonetic_forms_ce requires a Cn name");
    std::vector<std::string> forms;
    forms.reserve(8);
    const auto fam = detect_family(name);
    const std::pair<std::size_t, std::size_t> prefix_span{0,
                                                          fam ? fam->size() : 0};
    for (RomanizationSystem s : kSystems)
        forms.push_back(transliterate_with_family(name.raw, s, prefix_span));
    if (fam) {
        const std::u32string reordered = *reorder_family(name);
        // family moved to the end of the Chinese-letter run
        std::size_t run = 0;
        while (run < reordered.size() &&
               classify_char(reordered[run]) == CharClass::ChineseLetter)
            ++run;
        const std::pair<std::size_t, std::size_t> moved_span{run - fam->size(),
                                                             run};
        for (RomanizationSystem s : kSystems)
            forms.push_back(transliterate_with_family(reordered, s, moved_span));
    } else {
        for (int s = 0; s < 4; ++s) forms.push_back(forms[s]);
    }
    return forms;
}

std::vector<std::string> TranslitTables::transforms_cc(
    const NameString& name) const {
    if (name.name_type != NameType::Cn)
        throw TypeMismatchError("transforms_cc requires a Cn name");
    std::vector<std::string> out;
    out.reserve(5);
    out.push_back(utf8_encode(lowercase(simplify(name.raw))));
    // no family reordering for CC; the family prefix still resolves via H_f
    const auto fam = family_prefix(name.raw);
    const std::pair<std::size_t, std::size_t> span{0, fam ? fam->size() : 0};
    for (RomanizationSystem s : kSystems) {
        const std::string form = transliterate_with_family(name.raw, s, span);
        out.push_back(utf8_encode(lowercase(utf8_decode(form))));
    }
    return out;
}

bool TranslitTables::covers(char32_t cp) const { return h_c_.count(cp) > 0; }

std::vector<char32_t> TranslitTables::covered_chars() const {
    std::vector<char32_t> out;
    out.reserve(h_c_.size());
    for (const auto& [cp, syls] : h_c_) out.push_back(cp);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<char32_t> TranslitTables::to_traditional(char32_t simp) const {
    const auto it = t_c_rev_.find(simp);
    if (it == t_c_rev_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> TranslitTables::char_syllable(
    char32_t cp, RomanizationSystem s) const {
    const auto it = h_c_.find(cp);
    if (it == h_c_.end()) return std::nullopt;
    return it->second[static_cast<int>(s)];
}

}  // namespace mcua
