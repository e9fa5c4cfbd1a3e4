#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entrain/corpus.hpp"
#include "entrain/ngram.hpp"
#include "entrain/postag.hpp"

namespace entrain {

// A percentage with a flag for degenerate inputs (an empty side), where the
// value is defined as 0.
struct Percentage {
    double value = 0.0;
    bool degenerate = false;
};

Percentage lex_p1(const Exchange& ex);
Percentage lex_r1(const Exchange& ex);
Percentage syn_p(const Exchange& ex, std::size_t n, const Lexicon& lexicon);

// Pooled counts for one exchange; the unit of micro-averaging.
struct ExchangeCounts {
    NgramMatch lex_p1;
    NgramMatch lex_r1;
    NgramMatch syn_p2;
    NgramMatch syn_p3;

    ExchangeCounts& operator+=(const ExchangeCounts& o);
};

ExchangeCounts exchange_counts(const Exchange& ex, const Lexicon& lexicon);

/// Negated sum of absolute relative-frequency differences between system and
/// user sides over the 50 most frequent words of the pooled counts (ties
/// broken lexicographically). Range [-2, 0]. Either side empty raises InputError.
double fifty_mfc(std::span<const std::vector<std::string>> user_utterances,
                 std::span<const std::vector<std::string>> system_utterances, std::size_t top_k = 50);
double fifty_mfc(const Corpus& corpus);

struct BleuStats {
    std::size_t matched[4] = {0, 0, 0, 0};
    std::size_t total[4] = {0, 0, 0, 0};
    std::size_t candidate_length = 0;
    std::size_t reference_length = 0;

    void add(std::span<const std::string> cand, std::span<const std::string> ref);
    double brevity_penalty() const;
    // Percentage; zero n-gram counts are smoothed to epsilon.
    double score(double epsilon = 1e-9) const;
};

/// Corpus BLEU-4 with a single reference per candidate.
double corpus_bleu(std::span<const std::vector<std::string>> candidates,
                   std::span<const std::vector<std::string>> references);

struct MetricReport {
    double lex_p1 = 0.0;
    double lex_r1 = 0.0;
    double syn_p2 = 0.0;
    double syn_p3 = 0.0;
    double mfc50 = 0.0;
    std::optional<double> bleu;
    std::optional<double> delex_bleu;
    std::size_t n_exchanges = 0;
    std::size_t n_bleu_pairs = 0;
    std::size_t empty_responses = 0;
    std::size_t empty_user_turns = 0;
};

struct ExchangeRow {
    std::string dialogue_id;
    std::size_t turn = 0;
    double lex_p1 = 0.0;
    double lex_r1 = 0.0;
    double syn_p2 = 0.0;
    double syn_p3 = 0.0;
};

ExchangeRow exchange_row(const Exchange& ex, const Lexicon& lexicon);

/// Micro-averaged lexical/syntactic metrics, corpus-level 50MFC and BLEU.
/// BLEU uses the pairs that carry a reference; `bleu` compares the optional
/// lexicalized fields `response_lex`/`reference_lex` when a record has them
/// and the delexicalized text otherwise, `delex_bleu` always compares the
/// delexicalized `response`/`reference` text.
MetricReport aggregate(const Corpus& corpus, const Lexicon& lexicon);

/// Same as aggregate, given per-exchange counts computed elsewhere (e.g. in parallel).
MetricReport aggregate(const Corpus& corpus, std::span<const ExchangeCounts> counts);

} // namespace entrain
