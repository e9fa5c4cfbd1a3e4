#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "entrain/corpus.hpp"

namespace entrain {

enum class WeightFunction { W1, W2 };

struct WeightConfig {
    WeightFunction function = WeightFunction::W1;
    double tau = 25.0;  // W1 threshold, percent
    double w = 0.8;     // W2 spread
    double beta = 18.1; // W2 midpoint, percent
    double eps = 0.1;   // W2 floor
    double high = 10.0; // plateau height of both functions

    // Throws InputError when a parameter is out of range.
    void validate() const;
};

/// 1-gram precision of the gold reference against the user turn, in percent.
/// Throws InputError when the exchange has no reference.
double overlap_p(const Exchange& ex);

double w1(double p, const WeightConfig& cfg = {});
double w2(double p, const WeightConfig& cfg = {});
double weigh(double p, const WeightConfig& cfg);

struct WeightedInstance {
    std::size_t exchange = 0; // index into Corpus::exchanges
    double p = 0.0;
    double weight = 0.0;
};

std::vector<WeightedInstance> weigh_corpus(const Corpus& corpus, const WeightConfig& cfg);

// Values written to the export, rounded to 6 decimals.
double export_rounded(double value);

/// Copies each source record, adding "overlap_p" and "weight". With
/// `materialize`, each record is repeated round(weight) times (at least once)
/// instead of annotating it alone.
std::vector<Record> export_weighted(const Corpus& corpus, const std::vector<WeightedInstance>& weights,
                                    bool materialize = false);

} // namespace entrain
