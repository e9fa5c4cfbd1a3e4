#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "entrain/rerank.hpp"
#include "entrain/weighting.hpp"

namespace entrain {

inline constexpr const char* kToolkitVersion = "1.0.0";

enum class Subcommand { Metrics, Weigh, Keywords, Rerank, Losscheck, Tag };
enum class KeywordMode { Attention, Overlap, Blend };

struct RunConfig {
    Subcommand subcommand = Subcommand::Metrics;
    std::string input = "-";
    std::string output = "-";
    std::string tsv;      // metrics: optional per-exchange table
    std::string lexicon;  // empty: built-in lexicon
    std::string attention; // keywords: attention JSONL keyed by dialogue_id/turn
    bool json = false;
    std::uint64_t seed = 42;
    std::size_t jobs = 1;

    WeightConfig weight;
    bool materialize = false;

    double t = 0.1;
    double sigma = 0.05;
    KeywordMode keyword_mode = KeywordMode::Blend;
    bool emit_sequences = false;

    RerankConfig rerank;

    std::size_t vocab = 32;
    std::size_t trials = 1000;
    double alpha = 0.2;
    bool alpha_sweep = false;

    /// Effective configuration, embedded in every report.
    nlohmann::ordered_json to_json() const;
};

const char* to_string(Subcommand s);
const char* to_string(KeywordMode m);

/// Applies `key = value` settings from a TOML file onto `cfg`. Supports
/// comments, `[section]` headers (namespaces only) and string, number and
/// boolean values. Unknown keys raise InputError naming the key.
void apply_config_text(std::istream& in, RunConfig& cfg, const std::string& origin = "config");
void apply_config_file(const std::string& path, RunConfig& cfg);
RunConfig load_config(const std::string& path);

// Sets one key from its textual value; shared by the file reader and tests.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
bool is_known_key(const std::string& key);

} // namespace entrain
