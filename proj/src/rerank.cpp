#include "entrain/rerank.hpp"

#include <algorithm>

#include "entrain/error.hpp"
#include "entrain/ngram.hpp"

namespace entrain {

double context_score(std::span<const std::string> candidate, std::span<const std::string> context,
                     const RerankConfig& cfg) {
    if (candidate.empty()) return 0.0;
    return cfg.w1 * ngram_precision(candidate, context, 1) + cfg.w2 * ngram_precision(candidate, context, 2);
}

std::vector<std::string> rerank_context(const Exchange& ex, bool history) {
    std::vector<std::string> ctx;
    if (history)
        for (const auto& utt : ex.context) {
            auto words = utt.normalized();
            ctx.insert(ctx.end(), words.begin(), words.end());
        }
    auto words = ex.user.normalized();
    ctx.insert(ctx.end(), words.begin(), words.end());
    return ctx;
}

std::vector<CandidateResponse> rerank(const Exchange& ex, const RerankConfig& cfg) {
    if (ex.candidates.empty()) throw InputError("exchange " + ex.key() + ": no candidates to rerank");
    const auto ctx = rerank_context(ex, cfg.history);
    std::vector<CandidateResponse> out;
    out.reserve(ex.candidates.size());
    for (const auto& c : ex.candidates) {
        CandidateResponse r;
        r.text = c.text;
        r.tokens = Utterance::from_text(Speaker::System, c.text).normalized();
        r.model_rank = c.model_rank;
        r.score = context_score(r.tokens, ctx, cfg);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.score != b.score ? a.score > b.score : a.model_rank < b.model_rank;
    });
    return out;
}

Record rerank_record(const Exchange& ex, const std::vector<CandidateResponse>& ranked) {
    Record rec = ex.record;
    auto cands = Record::array();
    const auto original = rec.value("candidates", Record::array());
    for (const auto& c : ranked) {
        // Keep the original candidate object (and any extra fields it carries).
        auto it = std::find_if(original.begin(), original.end(), [&](const Record& o) {
            return o.is_object() && o.contains("rank") && o["rank"] == c.model_rank;
        });
        if (it != original.end()) {
            cands.push_back(*it);
        } else {
            Record item = Record::object();
            item["text"] = c.text;
            item["rank"] = c.model_rank;
            cands.push_back(std::move(item));
        }
    }
    rec["candidates"] = std::move(cands);
    if (!ranked.empty()) rec["response"] = ranked.front().text;
    return rec;
}

} // namespace entrain
