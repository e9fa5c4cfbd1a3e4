#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's n-gram, softmax or loss code.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

// Clipped n-gram matches by explicit pairing: each candidate n-gram position
// claims the first unclaimed reference position holding an equal n-gram.
template <class T>
std::pair<std::size_t, std::size_t> brute_ngram_match(const std::vector<T>& cand, const std::vector<T>& ref,
                                                      std::size_t n) {
    if (cand.size() < n) return {0, 0};
    const std::size_t cand_grams = cand.size() - n + 1;
    const std::size_t ref_grams = ref.size() >= n ? ref.size() - n + 1 : 0;
    std::vector<bool> used(ref_grams, false);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < cand_grams; ++i) {
        for (std::size_t j = 0; j < ref_grams; ++j) {
            if (used[j]) continue;
            bool equal = true;
            for (std::size_t k = 0; k < n && equal; ++k) equal = cand[i + k] == ref[j + k];
            if (equal) {
                used[j] = true;
                ++matched;
                break;
            }
        }
    }
    return {matched, cand_grams};
}

inline double naive_softmax_entry(const std::vector<double>& z, std::size_t k) {
    double denom = 0.0;
    for (double v : z) denom += std::exp(v - z[k]);
    return 1.0 / denom;
}

// -alpha * ln(sum_{u in U} p_u), with p computed entry by entry.
inline double naive_ull(const std::vector<double>& z, const std::vector<std::size_t>& user, double alpha) {
    double s = 0.0;
    for (auto u : user) s += naive_softmax_entry(z, u);
    return -alpha * std::log(s);
}

inline std::vector<double> central_difference(const std::function<double(const std::vector<double>&)>& f,
                                              const std::vector<double>& z, double h = 1e-5) {
    std::vector<double> g(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        auto zp = z, zm = z;
        zp[k] += h;
        zm[k] -= h;
        g[k] = (f(zp) - f(zm)) / (2.0 * h);
    }
    return g;
}

// 50MFC by repeated linear scans, no hashing or sorting.
inline double naive_fifty_mfc(const std::vector<std::string>& user, const std::vector<std::string>& system,
                              std::size_t top = 50) {
    std::vector<std::string> vocab;
    for (const auto* side : {&user, &system})
        for (const auto& w : *side)
            if (std::find(vocab.begin(), vocab.end(), w) == vocab.end()) vocab.push_back(w);
    auto count = [](const std::vector<std::string>& v, const std::string& w) {
        return static_cast<double>(std::count(v.begin(), v.end(), w));
    };
    std::vector<std::string> chosen;
    while (chosen.size() < top && chosen.size() < vocab.size()) {
        const std::string* best = nullptr;
        double best_count = -1;
        for (const auto& w : vocab) {
            if (std::find(chosen.begin(), chosen.end(), w) != chosen.end()) continue;
            const double c = count(user, w) + count(system, w);
            if (c > best_count || (c == best_count && w < *best)) {
                best = &w;
                best_count = c;
            }
        }
        chosen.push_back(*best);
    }
    double total = 0.0;
    for (const auto& w : chosen)
        total += std::fabs(count(system, w) / static_cast<double>(system.size()) -
                           count(user, w) / static_cast<double>(user.size()));
    return -total;
}

} // namespace oracle
