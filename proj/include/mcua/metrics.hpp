#pragma once

#include <cstddef>
#include <string_view>

namespace mcua {

/// Classic unit-cost edit distance (insert / delete / substitute) over
/// codepoints.
std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b);

/// Levenshtein similarity: 1 - LD(a,b) / max(|a|,|b|). Two empty strings
/// compare as identical (1).
double sl(std::u32string_view a, std::u32string_view b);

/// Length of the longest contiguous common run of codepoints.
std::size_t lcs_substring_len(std::u32string_view a, std::u32string_view b);

/// Longest-common-substring proportion: 2*LCS / (|a|+|b|); both empty -> 1.
double pls(std::u32string_view a, std::u32string_view b);

/// Longest common subsequence length over codepoints.
std::size_t lcq_subseq_len(std::u32string_view a, std::u32string_view b);

/// Abbreviation similarity: 2*LCQ / (|a|+|b|); both empty -> 1.
double sa(std::u32string_view a, std::u32string_view b);

/// Cosine of the codepoint-frequency vectors. Both empty -> 1; one empty -> 0.
double cosine_char(std::u32string_view a, std::u32string_view b);

/// Jaccard index over distinct codepoints. Both empty -> 1.
double jaccard_char(std::u32string_view a, std::u32string_view b);

}  // namespace mcua
