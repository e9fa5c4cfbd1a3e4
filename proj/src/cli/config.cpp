#include "entrain/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "entrain/error.hpp"

namespace entrain {

namespace {

double to_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (const std::exception&) {
    }
    throw InputError("setting '" + key + "': expected a number, got '" + v + "'");
}

std::uint64_t to_uint(const std::string& key, const std::string& v) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw InputError("setting '" + key + "': expected a nonnegative integer, got '" + v + "'");
    return out;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw InputError("setting '" + key + "': expected true or false, got '" + v + "'");
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"input", [](RunConfig& c, const auto&, const auto& v) { c.input = v; }},
        {"output", [](RunConfig& c, const auto&, const auto& v) { c.output = v; }},
        {"tsv", [](RunConfig& c, const auto&, const auto& v) { c.tsv = v; }},
        {"lexicon", [](RunConfig& c, const auto&, const auto& v) { c.lexicon = v; }},
        {"attention", [](RunConfig& c, const auto&, const auto& v) { c.attention = v; }},
        {"json", [](RunConfig& c, const auto& k, const auto& v) { c.json = to_bool(k, v); }},
        {"seed", [](RunConfig& c, const auto& k, const auto& v) { c.seed = to_uint(k, v); }},
        {"jobs",
         [](RunConfig& c, const auto& k, const auto& v) {
             c.jobs = static_cast<std::size_t>(to_uint(k, v));
             if (c.jobs == 0) throw InputError("setting 'jobs' must be at least 1");
         }},
        {"fn",
         [](RunConfig& c, const auto& k, const auto& v) {
             if (v == "w1")
                 c.weight.function = WeightFunction::W1;
             else if (v == "w2")
                 c.weight.function = WeightFunction::W2;
             else
                 throw InputError("setting '" + k + "': expected w1 or w2, got '" + v + "'");
         }},
        {"tau", [](RunConfig& c, const auto& k, const auto& v) { c.weight.tau = to_double(k, v); }},
        {"w", [](RunConfig& c, const auto& k, const auto& v) { c.weight.w = to_double(k, v); }},
        {"beta", [](RunConfig& c, const auto& k, const auto& v) { c.weight.beta = to_double(k, v); }},
        {"eps", [](RunConfig& c, const auto& k, const auto& v) { c.weight.eps = to_double(k, v); }},
        {"materialize", [](RunConfig& c, const auto& k, const auto& v) { c.materialize = to_bool(k, v); }},
        {"t", [](RunConfig& c, const auto& k, const auto& v) { c.t = to_double(k, v); }},
        {"sigma", [](RunConfig& c, const auto& k, const auto& v) { c.sigma = to_double(k, v); }},
        {"mode",
         [](RunConfig& c, const auto& k, const auto& v) {
             if (v == "attn")
                 c.keyword_mode = KeywordMode::Attention;
             else if (v == "overlap")
                 c.keyword_mode = KeywordMode::Overlap;
             else if (v == "blend")
                 c.keyword_mode = KeywordMode::Blend;
             else
                 throw InputError("setting '" + k + "': expected attn, overlap or blend, got '" + v + "'");
         }},
        {"emit_sequences", [](RunConfig& c, const auto& k, const auto& v) { c.emit_sequences = to_bool(k, v); }},
        {"w1", [](RunConfig& c, const auto& k, const auto& v) { c.rerank.w1 = to_double(k, v); }},
        {"w2", [](RunConfig& c, const auto& k, const auto& v) { c.rerank.w2 = to_double(k, v); }},
        {"history", [](RunConfig& c, const auto& k, const auto& v) { c.rerank.history = to_bool(k, v); }},
        {"vocab", [](RunConfig& c, const auto& k, const auto& v) { c.vocab = static_cast<std::size_t>(to_uint(k, v)); }},
        {"trials", [](RunConfig& c, const auto& k, const auto& v) { c.trials = static_cast<std::size_t>(to_uint(k, v)); }},
        {"alpha", [](RunConfig& c, const auto& k, const auto& v) { c.alpha = to_double(k, v); }},
        {"alpha_sweep", [](RunConfig& c, const auto& k, const auto& v) { c.alpha_sweep = to_bool(k, v); }},
    };
    return table;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Parses a TOML scalar: basic or literal string, boolean, or number.
std::string parse_value(std::string_view raw, const std::string& where) {
    if (raw.empty()) throw InputError(where + ": missing value");
    if (raw.front() == '"' || raw.front() == '\'') {
        const char quote = raw.front();
        std::string out;
        std::size_t i = 1;
        for (; i < raw.size() && raw[i] != quote; ++i) {
            if (quote == '"' && raw[i] == '\\' && i + 1 < raw.size()) {
                const char e = raw[++i];
                switch (e) {
                case 'n': out += '\n'; break;
                case 't': out += '\t'; break;
                case '\\': out += '\\'; break;
                case '"': out += '"'; break;
                default: throw InputError(where + ": unsupported escape \\" + std::string(1, e));
                }
            } else {
                out += raw[i];
            }
        }
        if (i >= raw.size()) throw InputError(where + ": unterminated string");
        auto rest = trim(raw.substr(i + 1));
        if (!rest.empty() && rest.front() != '#') throw InputError(where + ": trailing characters after string");
        return out;
    }
    auto hash = raw.find('#');
    auto value = std::string(trim(raw.substr(0, hash)));
    std::erase(value, '_'); // TOML digit separators
    return value;
}

} // namespace

bool is_known_key(const std::string& key) {
    return setters().count(key) != 0;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
    auto it = setters().find(key);
    if (it == setters().end()) throw InputError("unknown configuration key '" + key + "'");
    it->second(cfg, key, value);
}

void apply_config_text(std::istream& in, RunConfig& cfg, const std::string& origin) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = origin + ":" + std::to_string(lineno);
        auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        if (text.front() == '[') {
            auto close = text.find(']');
            if (close == std::string_view::npos) throw InputError(where + ": unterminated section header");
            continue;
        }
        auto eq = text.find('=');
        if (eq == std::string_view::npos) throw InputError(where + ": expected key = value");
        std::string key(trim(text.substr(0, eq)));
        if (!is_known_key(key)) throw InputError(where + ": unknown configuration key '" + key + "'");
        apply_setting(cfg, key, parse_value(trim(text.substr(eq + 1)), where));
    }
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config " + path);
    apply_config_text(in, cfg, path);
}

RunConfig load_config(const std::string& path) {
    RunConfig cfg;
    apply_config_file(path, cfg);
    return cfg;
}

const char* to_string(Subcommand s) {
    switch (s) {
    case Subcommand::Metrics: return "metrics";
    case Subcommand::Weigh: return "weigh";
    case Subcommand::Keywords: return "keywords";
    case Subcommand::Rerank: return "rerank";
    case Subcommand::Losscheck: return "losscheck";
    case Subcommand::Tag: return "tag";
    }
    return "?";
}

const char* to_string(KeywordMode m) {
    switch (m) {
    case KeywordMode::Attention: return "attn";
    case KeywordMode::Overlap: return "overlap";
    case KeywordMode::Blend: return "blend";
    }
    return "?";
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = to_string(subcommand);
    j["input"] = input;
    j["seed"] = seed;
    j["jobs"] = jobs;
    switch (subcommand) {
    case Subcommand::Metrics:
        j["tsv"] = tsv;
        j["lexicon"] = lexicon.empty() ? "builtin" : lexicon;
        break;
    case Subcommand::Tag:
        j["lexicon"] = lexicon.empty() ? "builtin" : lexicon;
        break;
    case Subcommand::Weigh:
        j["fn"] = weight.function == WeightFunction::W1 ? "w1" : "w2";
        j["tau"] = weight.tau;
        j["w"] = weight.w;
        j["beta"] = weight.beta;
        j["eps"] = weight.eps;
        j["materialize"] = materialize;
        break;
    case Subcommand::Keywords:
        j["mode"] = to_string(keyword_mode);
        j["t"] = t;
        j["sigma"] = sigma;
        j["attention"] = attention;
        j["emit_sequences"] = emit_sequences;
        break;
    case Subcommand::Rerank:
        j["w1"] = rerank.w1;
        j["w2"] = rerank.w2;
        j["history"] = rerank.history;
        break;
    case Subcommand::Losscheck:
        j["vocab"] = vocab;
        j["trials"] = trials;
        j["alpha"] = alpha;
        j["alpha_sweep"] = alpha_sweep;
        break;
    }
    return j;
}

} // namespace entrain
