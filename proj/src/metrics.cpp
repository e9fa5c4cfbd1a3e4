#include "entrain/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "entrain/error.hpp"

namespace entrain {

namespace {

using Words = std::vector<std::string>;

Percentage percent(const NgramMatch& m, bool degenerate) {
    return {degenerate ? 0.0 : 100.0 * m.fraction(), degenerate};
}

NgramMatch lex_match(const Utterance& cand, const Utterance& ref) {
    const auto c = cand.normalized();
    const auto r = ref.normalized();
    return clipped_ngram_match<std::string>(c, r, 1);
}

std::optional<Words> lexicalized(const Record& rec, const char* field) {
    auto it = rec.find(field);
    if (it == rec.end() || !it->is_string()) return std::nullopt;
    return Utterance::from_text(Speaker::System, it->get<std::string>()).normalized();
}

} // namespace

Percentage lex_p1(const Exchange& ex) {
    return percent(lex_match(ex.response, ex.user), ex.response.tokens.empty());
}

Percentage lex_r1(const Exchange& ex) {
    return percent(lex_match(ex.user, ex.response), ex.user.tokens.empty());
}

Percentage syn_p(const Exchange& ex, std::size_t n, const Lexicon& lexicon) {
    const auto tags = resolve_tags(ex, lexicon);
    return percent(clipped_ngram_match<std::string>(tags.response, tags.user, n), ex.response.tokens.empty());
}

ExchangeCounts& ExchangeCounts::operator+=(const ExchangeCounts& o) {
    lex_p1 += o.lex_p1;
    lex_r1 += o.lex_r1;
    syn_p2 += o.syn_p2;
    syn_p3 += o.syn_p3;
    return *this;
}

ExchangeCounts exchange_counts(const Exchange& ex, const Lexicon& lexicon) {
    ExchangeCounts c;
    c.lex_p1 = lex_match(ex.response, ex.user);
    c.lex_r1 = lex_match(ex.user, ex.response);
    const auto tags = resolve_tags(ex, lexicon);
    c.syn_p2 = clipped_ngram_match<std::string>(tags.response, tags.user, 2);
    c.syn_p3 = clipped_ngram_match<std::string>(tags.response, tags.user, 3);
    return c;
}

ExchangeRow exchange_row(const Exchange& ex, const Lexicon& lexicon) {
    const auto c = exchange_counts(ex, lexicon);
    return {ex.dialogue_id, ex.turn_index, 100.0 * c.lex_p1.fraction(), 100.0 * c.lex_r1.fraction(),
            100.0 * c.syn_p2.fraction(), 100.0 * c.syn_p3.fraction()};
}

double fifty_mfc(std::span<const Words> user_utterances, std::span<const Words> system_utterances,
                 std::size_t top_k) {
    std::unordered_map<std::string, std::size_t> user_counts, system_counts, pooled;
    std::size_t user_total = 0, system_total = 0;
    for (const auto& u : user_utterances)
        for (const auto& w : u) {
            ++user_counts[w];
            ++pooled[w];
            ++user_total;
        }
    for (const auto& s : system_utterances)
        for (const auto& w : s) {
            ++system_counts[w];
            ++pooled[w];
            ++system_total;
        }
    if (user_total == 0) throw InputError("50MFC: no user tokens in corpus");
    if (system_total == 0) throw InputError("50MFC: no system tokens in corpus");

    std::vector<std::pair<std::string, std::size_t>> ranked(pooled.begin(), pooled.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    ranked.resize(std::min(top_k, ranked.size()));

    auto count_of = [](const auto& counts, const std::string& w) -> double {
        auto it = counts.find(w);
        return it == counts.end() ? 0.0 : static_cast<double>(it->second);
    };
    double diff = 0.0;
    for (const auto& [word, _] : ranked) {
        diff += std::abs(count_of(system_counts, word) / static_cast<double>(system_total) -
                         count_of(user_counts, word) / static_cast<double>(user_total));
    }
    return -diff;
}

double fifty_mfc(const Corpus& corpus) {
    std::vector<Words> user, system;
    user.reserve(corpus.exchanges.size());
    system.reserve(corpus.exchanges.size());
    for (const auto& ex : corpus.exchanges) {
        user.push_back(ex.user.normalized());
        system.push_back(ex.response.normalized());
    }
    return fifty_mfc(user, system);
}

void BleuStats::add(std::span<const std::string> cand, std::span<const std::string> ref) {
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto m = clipped_ngram_match(cand, ref, n);
        matched[n - 1] += m.matched;
        total[n - 1] += m.total;
    }
    candidate_length += cand.size();
    reference_length += ref.size();
}

double BleuStats::brevity_penalty() const {
    if (candidate_length == 0) return 0.0;
    if (candidate_length >= reference_length) return 1.0;
    return std::exp(1.0 - static_cast<double>(reference_length) / static_cast<double>(candidate_length));
}

double BleuStats::score(double epsilon) const {
    if (candidate_length == 0) return 0.0;
    double log_sum = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
        const double num = matched[n] == 0 ? epsilon : static_cast<double>(matched[n]);
        const double den = total[n] == 0 ? 1.0 : static_cast<double>(total[n]);
        log_sum += std::log(num / den);
    }
    return 100.0 * brevity_penalty() * std::exp(log_sum / 4.0);
}

double corpus_bleu(std::span<const Words> candidates, std::span<const Words> references) {
    if (candidates.size() != references.size())
        throw InputError("BLEU: " + std::to_string(candidates.size()) + " candidates vs " +
                         std::to_string(references.size()) + " references");
    if (candidates.empty()) throw InputError("BLEU: no candidate/reference pairs");
    BleuStats stats;
    for (std::size_t i = 0; i < candidates.size(); ++i) stats.add(candidates[i], references[i]);
    return stats.score();
}

MetricReport aggregate(const Corpus& corpus, const Lexicon& lexicon) {
    std::vector<ExchangeCounts> counts;
    counts.reserve(corpus.exchanges.size());
    for (const auto& ex : corpus.exchanges) counts.push_back(exchange_counts(ex, lexicon));
    return aggregate(corpus, counts);
}

MetricReport aggregate(const Corpus& corpus, std::span<const ExchangeCounts> counts) {
    if (corpus.empty()) throw InputError("cannot aggregate an empty corpus");
    MetricReport report;
    report.n_exchanges = corpus.exchanges.size();
    ExchangeCounts pooled;
    for (const auto& c : counts) pooled += c;
    report.lex_p1 = 100.0 * pooled.lex_p1.fraction();
    report.lex_r1 = 100.0 * pooled.lex_r1.fraction();
    report.syn_p2 = 100.0 * pooled.syn_p2.fraction();
    report.syn_p3 = 100.0 * pooled.syn_p3.fraction();
    report.mfc50 = fifty_mfc(corpus);

    BleuStats lex_stats, delex_stats;
    for (const auto& ex : corpus.exchanges) {
        if (ex.response.tokens.empty()) ++report.empty_responses;
        if (ex.user.tokens.empty()) ++report.empty_user_turns;
        if (!ex.reference) continue;
        ++report.n_bleu_pairs;
        const auto cand = ex.response.normalized();
        const auto ref = ex.reference->normalized();
        delex_stats.add(cand, ref);
        const auto cand_lex = lexicalized(ex.record, "response_lex");
        const auto ref_lex = lexicalized(ex.record, "reference_lex");
        lex_stats.add(cand_lex ? *cand_lex : cand, ref_lex ? *ref_lex : ref);
    }
    if (report.n_bleu_pairs > 0) {
        report.bleu = lex_stats.score();
        report.delex_bleu = delex_stats.score();
    }
    return report;
}

} // namespace entrain
