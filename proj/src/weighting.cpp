#include "entrain/weighting.hpp"

#include <algorithm>
#include <cmath>

#include "entrain/error.hpp"
#include "entrain/ngram.hpp"

namespace entrain {

void WeightConfig::validate() const {
    if (!(tau > 0.0 && tau <= 100.0)) throw InputError("tau must be in (0, 100]");
    if (!(w > 0.0)) throw InputError("w must be positive");
    if (!(beta >= 0.0 && beta <= 100.0)) throw InputError("beta must be in [0, 100]");
    if (!(eps > 0.0)) throw InputError("eps must be positive");
}

double overlap_p(const Exchange& ex) {
    if (!ex.reference) throw InputError("exchange " + ex.key() + ": overlap needs a reference response");
    const auto ref = ex.reference->normalized();
    const auto user = ex.user.normalized();
    return 100.0 * ngram_precision(ref, user, 1);
}

double w1(double p, const WeightConfig& cfg) {
    return p <= cfg.tau ? 1.0 : cfg.high;
}

double w2(double p, const WeightConfig& cfg) {
    return cfg.high / (1.0 + std::exp(cfg.w * (cfg.beta - p))) + cfg.eps;
}

double weigh(double p, const WeightConfig& cfg) {
    return cfg.function == WeightFunction::W1 ? w1(p, cfg) : w2(p, cfg);
}

std::vector<WeightedInstance> weigh_corpus(const Corpus& corpus, const WeightConfig& cfg) {
    cfg.validate();
    std::vector<WeightedInstance> out;
    out.reserve(corpus.exchanges.size());
    for (std::size_t i = 0; i < corpus.exchanges.size(); ++i) {
        const double p = overlap_p(corpus.exchanges[i]);
        out.push_back({i, p, weigh(p, cfg)});
    }
    return out;
}

double export_rounded(double value) {
    return std::round(value * 1e6) / 1e6;
}

std::vector<Record> export_weighted(const Corpus& corpus, const std::vector<WeightedInstance>& weights,
                                    bool materialize) {
    std::vector<Record> out;
    out.reserve(weights.size());
    for (const auto& inst : weights) {
        Record rec = corpus.exchanges.at(inst.exchange).record;
        rec["overlap_p"] = export_rounded(inst.p);
        rec["weight"] = export_rounded(inst.weight);
        const auto copies = materialize ? std::max<long long>(1, std::llround(inst.weight)) : 1;
        for (long long k = 0; k < copies; ++k) out.push_back(rec);
    }
    return out;
}

} // namespace entrain
