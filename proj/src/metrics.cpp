#include "mcua/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mcua {

std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b) {
    const std::size_t la = a.size(), lb = b.size();
    if (la == 0) return lb;
    if (lb == 0) return la;
    std::vector<std::size_t> prev(lb + 1), cur(lb + 1);
    for (std::size_t j = 0; j <= lb; ++j) prev[j] = j;
    for (std::size_t i = 0; i < la; ++i) {
        cur[0] = i + 1;
        for (std::size_t j = 0; j < lb; ++j) {
            const std::size_t del = prev[j + 1] + 1;
            const std::size_t ins = cur[j] + 1;
            const std::size_t sub = prev[j] + (a[i] != b[j] ? 1 : 0);
            cur[j + 1] = std::min({del, ins, sub});
        }
        std::swap(prev, cur);
    }
    return prev[lb];
}

double sl(std::u32string_view a, std::u32string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    const double m = static_cast<double>(std::max(a.size(), b.size()));
    return 1.0 - static_cast<double>(levenshtein_distance(a, b)) / m;
}

std::size_t lcs_substring_len(std::u32string_view a, std::u32string_view b) {
    if (a.empty() || b.empty()) return 0;
    // One DP row: run[j] = length of the common suffix ending at a[i], b[j].
    std::vector<std::size_t> prev(b.size(), 0), cur(b.size(), 0);
    std::size_t best = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (a[i] == b[j]) {
                cur[j] = (j == 0 ? 0 : prev[j - 1]) + 1;
                best = std::max(best, cur[j]);
            } else {
                cur[j] = 0;
            }
        }
        std::swap(prev, cur);
    }
    return best;
}

double pls(std::u32string_view a, std::u32string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    return 2.0 * static_cast<double>(lcs_substring_len(a, b)) /
           static_cast<double>(a.size() + b.size());
}

std::size_t lcq_subseq_len(std::u32string_view a, std::u32string_view b) {
    const std::size_t la = a.size(), lb = b.size();
    if (la == 0 || lb == 0) return 0;
    std::vector<std::size_t> prev(lb + 1, 0), cur(lb + 1, 0);
    for (std::size_t i = 0; i < la; ++i) {
        for (std::size_t j = 0; j < lb; ++j) {
            cur[j + 1] = a[i] == b[j] ? prev[j] + 1
                                      : std::max(prev[j + 1], cur[j]);
        }
        std::swap(prev, cur);
    }
    return prev[lb];
}

double sa(std::u32string_view a, std::u32string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    return 2.0 * static_cast<double>(lcq_subseq_len(a, b)) /
           static_cast<double>(a.size() + b.size());
}

double cosine_char(std::u32string_view a, std::u32string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    std::unordered_map<char32_t, double> fa, fb;
    for (char32_t c : a) fa[c] += 1.0;
    for (char32_t c : b) fb[c] += 1.0;
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (const auto& [c, v] : fa) {
        na += v * v;
        const auto it = fb.find(c);
        if (it != fb.end()) dot += v * it->second;
    }
    for (const auto& [c, v] : fb) nb += v * v;
    const double val = dot / (std::sqrt(na) * std::sqrt(nb));
    return std::min(1.0, std::max(0.0, val));
}

double jaccard_char(std::u32string_view a, std::u32string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    std::unordered_set<char32_t> sa_set(a.begin(), a.end());
    std::unordered_set<char32_t> sb_set(b.begin(), b.end());
    std::size_t inter = 0;
    for (char32_t c : sa_set)
        if (sb_set.count(c)) ++inter;
    const std::size_t uni = sa_set.size() + sb_set.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace mcua
