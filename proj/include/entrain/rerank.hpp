#pragma once

#include <span>
#include <string>
#include <vector>

#include "entrain/corpus.hpp"

namespace entrain {

struct CandidateResponse {
    std::string text;
    std::vector<std::string> tokens; // normalized
    int model_rank = 0;
    double score = 0.0;
};

struct RerankConfig {
    double w1 = 0.5; // unigram precision weight
    double w2 = 0.5; // bigram precision weight
    // Score against the whole dialogue history rather than the current user turn.
    bool history = false;
};

/// w1 * p1 + w2 * p2 of the candidate against the context; 0 for an empty candidate.
double context_score(std::span<const std::string> candidate, std::span<const std::string> context,
                     const RerankConfig& cfg = {});

std::vector<std::string> rerank_context(const Exchange& ex, bool history);

/// Candidates by descending context score, ties by ascending model rank.
/// Throws InputError when the exchange has no candidates.
std::vector<CandidateResponse> rerank(const Exchange& ex, const RerankConfig& cfg = {});

/// The source record with candidates reordered and "response" replaced by the top candidate.
Record rerank_record(const Exchange& ex, const std::vector<CandidateResponse>& ranked);

} // namespace entrain
