#pragma once

#include <string>
#include <vector>

#include "mcua/text.hpp"
#include "mcua/translit.hpp"

namespace mcua {

inline constexpr int kEeFeatureCount = 18;
inline constexpr int kCeFeatureCount = 82;
inline constexpr int kCcFeatureCount = 58;

int feature_count(MatchingType type);

/// Ordered human-readable labels for one schema; index i labels value i.
std::vector<std::string> feature_labels(MatchingType type);

/// The 18 EE features. Throws TypeMismatchError unless both names are En.
std::vector<double> features_ee(const NameString& a, const NameString& b);

/// The 82 CE features (18 EE-style on the raw pair + 8 per phonetic form).
/// Throws TypeMismatchError unless cn is Cn and en is En.
std::vector<double> features_ce(const NameString& cn, const NameString& en,
                                const TranslitTables& tables);

/// The 58 CC features (18 EE-style on the raw pair + 8 per transform).
/// Throws TypeMismatchError unless both names are Cn.
std::vector<double> features_cc(const NameString& a, const NameString& b,
                                const TranslitTables& tables);

/// Untyped variants used by the Simple-* baselines, which apply one schema
/// to every name pair regardless of its matching type.
std::vector<double> features_ee_any(const NameString& a, const NameString& b);
std::vector<double> features_ce_any(const NameString& a, const NameString& b,
                                    const TranslitTables& tables);
std::vector<double> features_cc_any(const NameString& a, const NameString& b,
                                    const TranslitTables& tables);

std::vector<double> extract_features(MatchingType type, const NameString& a,
                                     const NameString& b,
                                     const TranslitTables& tables);

}  // namespace mcua
