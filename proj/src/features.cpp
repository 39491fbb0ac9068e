#include "mcua/features.hpp"

#include "mcua/error.hpp"
#include "mcua/metrics.hpp"

namespace mcua {

int feature_count(MatchingType type) {
    switch (type) {
        case MatchingType::EE: return kEeFeatureCount;
        case MatchingType::CE: return kCeFeatureCount;
        case MatchingType::CC: return kCcFeatureCount;
    }
    return 0;
}

namespace {

// The 18 EE-style features shared by every schema, in the canonical index
// order. Block layout: sl on raw/lower; pls on raw, splitter-stripped,
// lower, stripped+lower; cosine/jaccard on sp(); sa on raw/lower;
// cosine/jaccard/pls/sl on ns() raw and lowered.
void ee_block(const std::u32string& a, const std::u32string& b,
              std::vector<double>& out) {
    const std::u32string la = lowercase(a), lb = lowercase(b);
    const std::u32string ta = strip_splitters(a), tb = strip_splitters(b);
    const std::u32string spa = special_string(a), spb = special_string(b);
    const std::u32string nsa = non_special_string(a),
                         nsb = non_special_string(b);
    const std::u32string lnsa = lowercase(nsa), lnsb = lowercase(nsb);

    out.push_back(sl(a, b));
    out.push_back(sl(la, lb));
    out.push_back(pls(a, b));
    out.push_back(pls(ta, tb));
    out.push_back(pls(la, lb));
    out.push_back(pls(lowercase(ta), lowercase(tb)));
    out.push_back(cosine_char(spa, spb));
    out.push_back(jaccard_char(spa, spb));
    out.push_back(sa(a, b));
    out.push_back(sa(la, lb));
    out.push_back(cosine_char(nsa, nsb));
    out.push_back(jaccard_char(nsa, nsb));
    out.push_back(pls(nsa, nsb));
    out.push_back(sl(nsa, nsb));
    out.push_back(cosine_char(lnsa, lnsb));
    out.push_back(jaccard_char(lnsa, lnsb));
    out.push_back(pls(lnsa, lnsb));
    out.push_back(sl(lnsa, lnsb));
}

// The 8 per-form features of the CE blocks: sl, pls, splitter-stripped
// pls, sa on the lowered pair; cosine/jaccard/pls/sl on its English-letter
// strings. Inputs arrive already lowercased.
void ce_form_block(const std::u32string& f, const std::u32string& en,
                   std::vector<double>& out) {
    out.push_back(sl(f, en));
    out.push_back(pls(f, en));
    out.push_back(pls(strip_splitters(f), strip_splitters(en)));
    out.push_back(sa(f, en));
    const std::u32string ela = english_string(f), elb = english_string(en);
    out.push_back(cosine_char(ela, elb));
    out.push_back(jaccard_char(ela, elb));
    out.push_back(pls(ela, elb));
    out.push_back(sl(ela, elb));
}

// The 8 per-transform features of the CC blocks; ns() keeps Chinese and
// English letters. Inputs arrive already lowercased.
void cc_transform_block(const std::u32string& ta, const std::u32string& tb,
                        std::vector<double>& out) {
    out.push_back(sl(ta, tb));
    out.push_back(pls(ta, tb));
    out.push_back(pls(strip_splitters(ta), strip_splitters(tb)));
    out.push_back(sa(ta, tb));
    const std::u32string nsa = non_special_string(ta),
                         nsb = non_special_string(tb);
    out.push_back(cosine_char(nsa, nsb));
    out.push_back(jaccard_char(nsa, nsb));
    out.push_back(pls(nsa, nsb));
    out.push_back(sl(nsa, nsb));
}

}  // namespace

std::vector<double> features_ee_any(const NameString& a, const NameString& b) {
    std::vector<double> out;
    out.reserve(kEeFeatureCount);
    ee_block(a.raw, b.raw, out);
    return out;
}

std::vector<double> features_ee(const NameString& a, const NameString& b) {
    if (a.name_type != NameType::En || b.name_type != NameType::En)
        throw TypeMismatchError("features_ee requires two En names");
    return features_ee_any(a, b);
}

std::vector<double> features_ce_any(const NameString& cn, const NameString& en,
                                    const TranslitTables& tables) {
    std::vector<double> out;
    out.reserve(kCeFeatureCount);
    ee_block(cn.raw, en.raw, out);
    const std::u32string en_lower = lowercase(en.raw);
    // phonetic forms regardless of name type: transliterate passes
    // non-Chinese text through, so an En "cn" argument yields itself
    std::vector<std::string> forms;
    if (cn.name_type == NameType::Cn) {
        forms = tables.phonetic_forms_ce(cn);
    } else {
        forms.assign(8, cn.utf8());
    }
    for (const std::string& form : forms) {
        const std::u32string f = lowercase(utf8_decode(form));
        ce_form_block(f, en_lower, out);
    }
    return out;
}

std::vector<double> features_ce(const NameString& cn, const NameString& en,
                                const TranslitTables& tables) {
    if (cn.name_type != NameType::Cn || en.name_type != NameType::En)
        throw TypeMismatchError("features_ce requires a Cn and an En name");
    return features_ce_any(cn, en, tables);
}

std::vector<double> features_cc_any(const NameString& a, const NameString& b,
                                    const TranslitTables& tables) {
    std::vector<double> out;
    out.reserve(kCcFeatureCount);
    ee_block(a.raw, b.raw, out);
    const auto transforms = [&](const NameString& n) {
        if (n.name_type == NameType::Cn) return tables.transforms_cc(n);
        // Ts and every romanization leave a Chinese-letter-free name
        // unchanged apart from lowercasing
        return std::vector<std::string>(5, utf8_encode(lowercase(n.raw)));
    };
    const std::vector<std::string> ta = transforms(a), tb = transforms(b);
    for (int k = 0; k < 5; ++k)
        cc_transform_block(utf8_decode(ta[k]), utf8_decode(tb[k]), out);
    return out;
}

std::vector<double> features_cc(const NameString& a, const NameString& b,
                                const TranslitTables& tables) {
    if (a.name_type != NameType::Cn || b.name_type != NameType::Cn)
        throw TypeMismatchError("features_cc requires two Cn names");
    return features_cc_any(a, b, tables);
}

std::vector<double> extract_features(MatchingType type, const NameString& a,
                                     const NameString& b,
                                     const TranslitTables& tables) {
    switch (type) {
        case MatchingType::EE: return features_ee(a, b);
        case MatchingType::CE:
            return a.name_type == NameType::Cn ? features_ce(a, b, tables)
                                               : features_ce(b, a, tables);
        case MatchingType::CC: return features_cc(a, b, tables);
    }
    return {};
}

namespace {

const char* kSystemNames[4] = {"hanyu", "cantonese", "tongyong", "wadegiles"};

std::vector<std::string> ee_labels(const std::string& prefix) {
    std::vector<std::string> l;
    l.push_back(prefix + "sl(raw)");
    l.push_back(prefix + "sl(lower)");
    l.push_back(prefix + "pls(raw)");
    l.push_back(prefix + "pls(splitter_stripped)");
    l.push_back(prefix + "pls(lower)");
    l.push_back(prefix + "pls(splitter_stripped+lower)");
    l.push_back(prefix + "cosine(sp)");
    l.push_back(prefix + "jaccard(sp)");
    l.push_back(prefix + "sa(raw)");
    l.push_back(prefix + "sa(lower)");
    l.push_back(prefix + "cosine(ns)");
    l.push_back(prefix + "jaccard(ns)");
    l.push_back(prefix + "pls(ns)");
    l.push_back(prefix + "sl(ns)");
    l.push_back(prefix + "cosine(ns+lower)");
    l.push_back(prefix + "jaccard(ns+lower)");
    l.push_back(prefix + "pls(ns+lower)");
    l.push_back(prefix + "sl(ns+lower)");
    return l;
}

void block_labels(const std::string& form, const char* letters,
                  std::vector<std::string>& out) {
    out.push_back(form + ":sl");
    out.push_back(form + ":pls");
    out.push_back(form + ":pls(splitter_stripped)");
    out.push_back(form + ":sa");
    out.push_back(form + ":cosine(" + letters + ")");
    out.push_back(form + ":jaccard(" + letters + ")");
    out.push_back(form + ":pls(" + letters + ")");
    out.push_back(form + ":sl(" + letters + ")");
}

}  // namespace

std::vector<std::string> feature_labels(MatchingType type) {
    std::vector<std::string> labels = ee_labels("");
    if (type == MatchingType::EE) return labels;
    if (type == MatchingType::CE) {
        for (int k = 0; k < 8; ++k) {
            const std::string form = std::string(kSystemNames[k % 4]) +
                                     (k < 4 ? "" : "+reorder");
            block_labels(form, "el", labels);
        }
        return labels;
    }
    block_labels("simplified", "ns", labels);
    for (int k = 0; k < 4; ++k) block_labels(kSystemNames[k], "ns", labels);
    return labels;
}

}  // namespace mcua
