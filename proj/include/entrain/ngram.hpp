#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace entrain {

// Clipped n-gram match counts; kept as a pair so that corpus-level scores
// can pool numerators and denominators before dividing.
struct NgramMatch {
    std::size_t matched = 0;
    std::size_t total = 0;

    double fraction() const { return total == 0 ? 0.0 : static_cast<double>(matched) / static_cast<double>(total); }

    NgramMatch& operator+=(const NgramMatch& o) {
        matched += o.matched;
        total += o.total;
        return *this;
    }
    bool operator==(const NgramMatch&) const = default;
};

template <class T>
std::map<std::vector<T>, std::size_t> ngram_counts(std::span<const T> seq, std::size_t n) {
    std::map<std::vector<T>, std::size_t> counts;
    if (n == 0 || seq.size() < n) return counts;
    for (std::size_t i = 0; i + n <= seq.size(); ++i) ++counts[std::vector<T>(seq.begin() + i, seq.begin() + i + n)];
    return counts;
}

/// Sum over candidate n-gram types of min(count in candidate, count in
/// reference), against the number of candidate n-grams.
template <class T>
NgramMatch clipped_ngram_match(std::span<const T> cand, std::span<const T> ref, std::size_t n) {
    NgramMatch m;
    if (n == 0 || cand.size() < n) return m;
    m.total = cand.size() - n + 1;
    const auto ref_counts = ngram_counts(ref, n);
    for (const auto& [gram, count] : ngram_counts(cand, n)) {
        if (auto it = ref_counts.find(gram); it != ref_counts.end()) m.matched += std::min(count, it->second);
    }
    return m;
}

template <class T>
double ngram_precision(std::span<const T> cand, std::span<const T> ref, std::size_t n) {
    return clipped_ngram_match(cand, ref, n).fraction();
}

template <class T>
double ngram_precision(const std::vector<T>& cand, const std::vector<T>& ref, std::size_t n) {
    return ngram_precision(std::span<const T>(cand), std::span<const T>(ref), n);
}

} // namespace entrain
