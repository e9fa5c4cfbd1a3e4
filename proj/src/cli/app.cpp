#include "entrain/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>
#include <unistd.h>

#include <CLI11.hpp>

#include "entrain/corpus.hpp"
#include "entrain/error.hpp"
#include "entrain/keywords.hpp"
#include "entrain/metrics.hpp"
#include "entrain/objective.hpp"
#include "entrain/parallel.hpp"
#include "entrain/postag.hpp"
#include "entrain/rerank.hpp"
#include "entrain/weighting.hpp"

namespace entrain::cli {

namespace {

using Json = nlohmann::ordered_json;

void write_atomic(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw InputError("cannot write " + tmp);
        f << content;
        f.flush();
        if (!f) throw InputError("write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

std::string jsonl(const std::vector<Record>& records) {
    std::string s;
    for (const auto& r : records) {
        s += r.dump();
        s += '\n';
    }
    return s;
}

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Json envelope(const RunConfig& cfg, Json result) {
    Json j;
    j["tool"] = "entrain";
    j["version"] = kToolkitVersion;
    j["config"] = cfg.to_json();
    j["result"] = std::move(result);
    return j;
}

// Emits the one-line summary, and the report when --json is set, to whichever
// stream is not carrying the data.
void finish(const RunConfig& cfg, const std::string& summary, const Json& report, std::ostream& out,
            std::ostream& err) {
    std::ostream& info = cfg.output == "-" ? err : out;
    info << summary << '\n';
    if (cfg.json) info << report.dump(2) << '\n';
}

Lexicon lexicon_for(const RunConfig& cfg) {
    return cfg.lexicon.empty() ? Lexicon::builtin() : Lexicon::load_file(cfg.lexicon);
}

int run_metrics(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Corpus corpus = load_corpus_file(cfg.input);
    const Lexicon lexicon = lexicon_for(cfg);
    const auto counts = parallel_map(corpus.exchanges.size(), cfg.jobs,
                                     [&](std::size_t i) { return exchange_counts(corpus.exchanges[i], lexicon); });
    const auto report = aggregate(corpus, counts);

    Json result;
    result["n_exchanges"] = report.n_exchanges;
    result["n_dialogues"] = corpus.dialogues.size();
    result["lex_p1"] = report.lex_p1;
    result["lex_r1"] = report.lex_r1;
    result["syn_p2"] = report.syn_p2;
    result["syn_p3"] = report.syn_p3;
    result["mfc50"] = report.mfc50;
    result["n_bleu_pairs"] = report.n_bleu_pairs;
    if (report.bleu) {
        result["bleu"] = *report.bleu;
        result["delex_bleu"] = *report.delex_bleu;
    } else {
        result["bleu"] = nullptr;
        result["delex_bleu"] = nullptr;
        result["bleu_note"] = "no references present";
    }
    result["empty_responses"] = report.empty_responses;
    result["empty_user_turns"] = report.empty_user_turns;
    const Json doc = envelope(cfg, result);

    if (!cfg.tsv.empty()) {
        std::string table = "dialogue_id\tturn\tlex_p1\tlex_r1\tsyn_p2\tsyn_p3\n";
        for (std::size_t i = 0; i < corpus.exchanges.size(); ++i) {
            const auto& ex = corpus.exchanges[i];
            const auto& c = counts[i];
            table += ex.dialogue_id + '\t' + std::to_string(ex.turn_index) + '\t' +
                     fixed(100.0 * c.lex_p1.fraction()) + '\t' + fixed(100.0 * c.lex_r1.fraction()) + '\t' +
                     fixed(100.0 * c.syn_p2.fraction()) + '\t' + fixed(100.0 * c.syn_p3.fraction()) + '\n';
        }
        write_atomic(cfg.tsv, table, out);
    }
    write_atomic(cfg.output, doc.dump(2) + "\n", out);

    std::string summary = "metrics: " + std::to_string(report.n_exchanges) + " exchanges lex_p1=" +
                          fixed(report.lex_p1, 2) + " lex_r1=" + fixed(report.lex_r1, 2) +
                          " syn_p2=" + fixed(report.syn_p2, 2) + " syn_p3=" + fixed(report.syn_p3, 2) +
                          " 50mfc=" + fixed(report.mfc50, 3);
    if (report.bleu) summary += " bleu=" + fixed(*report.bleu, 2) + " delex_bleu=" + fixed(*report.delex_bleu, 2);
    // The report itself is the data output; when it went to stdout, --json adds nothing.
    std::ostream& info = cfg.output == "-" ? err : out;
    info << summary << '\n';
    if (cfg.json && cfg.output != "-") out << doc.dump(2) << '\n';
    return kOk;
}

int run_weigh(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    cfg.weight.validate();
    const Corpus corpus = load_corpus_file(cfg.input);
    const auto overlaps = parallel_map(corpus.exchanges.size(), cfg.jobs,
                                       [&](std::size_t i) { return overlap_p(corpus.exchanges[i]); });
    std::vector<WeightedInstance> weights;
    weights.reserve(overlaps.size());
    double weight_sum = 0.0, p_sum = 0.0;
    for (std::size_t i = 0; i < overlaps.size(); ++i) {
        weights.push_back({i, overlaps[i], weigh(overlaps[i], cfg.weight)});
        weight_sum += weights.back().weight;
        p_sum += overlaps[i];
    }
    const auto records = export_weighted(corpus, weights, cfg.materialize);
    write_atomic(cfg.output, jsonl(records), out);

    const double n = weights.empty() ? 1.0 : static_cast<double>(weights.size());
    Json result;
    result["n_exchanges"] = weights.size();
    result["n_records_written"] = records.size();
    result["mean_overlap_p"] = p_sum / n;
    result["mean_weight"] = weight_sum / n;
    finish(cfg,
           "weigh: " + std::to_string(weights.size()) + " exchanges, " + std::to_string(records.size()) +
               " records written, mean overlap_p=" + fixed(p_sum / n, 2) + " mean weight=" + fixed(weight_sum / n, 3),
           envelope(cfg, result), out, err);
    return kOk;
}

std::map<std::pair<std::string, std::size_t>, AttentionStack> load_attention(const std::string& path) {
    std::map<std::pair<std::string, std::size_t>, AttentionStack> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw InputError("cannot open attention file " + path);
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(text);
            const auto key = std::make_pair(j.at("dialogue_id").get<std::string>(), j.at("turn").get<std::size_t>());
            if (out.count(key)) throw InputError("duplicate attention entry");
            out.emplace(key, AttentionStack::from_json(j));
        } catch (const nlohmann::json::exception& e) {
            throw InputError(path + " line " + std::to_string(line) + ": " + e.what());
        } catch (const InputError& e) {
            throw InputError(path + " line " + std::to_string(line) + ": " + e.what());
        }
    }
    return out;
}

std::string string_field(const Record& rec, const char* field, const std::string& fallback = {}) {
    auto it = rec.find(field);
    return it != rec.end() && it->is_string() ? it->get<std::string>() : fallback;
}

int run_keywords(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!(cfg.t > 0.0 && cfg.t <= 1.0)) throw InputError("--t must be in (0, 1]");
    if (!(cfg.sigma >= 0.0 && cfg.sigma <= 1.0)) throw InputError("--sigma must be in [0, 1]");
    const Corpus corpus = load_corpus_file(cfg.input);
    const auto attention = load_attention(cfg.attention);

    struct Outcome {
        Record record;
        bool from_attention = false;
    };
    auto one = [&](std::size_t i) {
        const auto& ex = corpus.exchanges[i];
        bool use_attention = cfg.keyword_mode == KeywordMode::Attention ||
                             (cfg.keyword_mode == KeywordMode::Blend && blend_draw(cfg.sigma, cfg.seed, i));
        std::vector<std::string> kw;
        if (use_attention) {
            auto it = attention.find({ex.dialogue_id, ex.turn_index});
            if (it == attention.end()) throw InputError("exchange " + ex.key() + ": no attention entry");
            kw = attention_keywords(it->second, cfg.t).selected;
        } else {
            kw = overlap_keywords(ex);
        }
        Outcome o{ex.record, use_attention};
        o.record["keywords"] = kw;
        o.record["keyword_source"] = use_attention ? "attention" : "overlap";
        if (cfg.emit_sequences)
            o.record["training_sequence"] =
                emit_training_sequence(string_field(ex.record, "context", ex.user.raw),
                                       string_field(ex.record, "belief"), string_field(ex.record, "database"), kw);
        return o;
    };
    auto outcomes = parallel_map(corpus.exchanges.size(), cfg.jobs, one);
    std::vector<Record> records;
    std::size_t n_attention = 0, n_keywords = 0;
    for (auto& o : outcomes) {
        n_attention += o.from_attention ? 1 : 0;
        n_keywords += o.record["keywords"].size();
        records.push_back(std::move(o.record));
    }
    write_atomic(cfg.output, jsonl(records), out);

    Json result;
    result["n_exchanges"] = records.size();
    result["attention_branch"] = n_attention;
    result["overlap_branch"] = records.size() - n_attention;
    result["n_keywords"] = n_keywords;
    finish(cfg,
           "keywords: " + std::to_string(records.size()) + " exchanges, " + std::to_string(n_attention) +
               " from attention, " + std::to_string(n_keywords) + " keywords",
           envelope(cfg, result), out, err);
    return kOk;
}

int run_rerank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Corpus corpus = load_corpus_file(cfg.input);
    auto records = parallel_map(corpus.exchanges.size(), cfg.jobs, [&](std::size_t i) {
        const auto& ex = corpus.exchanges[i];
        return rerank_record(ex, rerank(ex, cfg.rerank));
    });
    std::size_t changed = 0;
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i]["candidates"].front()["rank"] != 1) ++changed;
    write_atomic(cfg.output, jsonl(records), out);

    Json result;
    result["n_exchanges"] = records.size();
    result["top_changed"] = changed;
    finish(cfg,
           "rerank: " + std::to_string(records.size()) + " exchanges, top candidate changed in " +
               std::to_string(changed),
           envelope(cfg, result), out, err);
    return kOk;
}

int run_tag(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Corpus corpus = load_corpus_file(cfg.input);
    const Lexicon lexicon = lexicon_for(cfg);
    auto records = parallel_map(corpus.exchanges.size(), cfg.jobs, [&](std::size_t i) {
        const auto& ex = corpus.exchanges[i];
        const auto tags = resolve_tags(ex, lexicon);
        Record rec = ex.record;
        rec["user_pos"] = tags.user;
        rec["response_pos"] = tags.response;
        return rec;
    });
    write_atomic(cfg.output, jsonl(records), out);
    Json result;
    result["n_exchanges"] = records.size();
    finish(cfg, "tag: " + std::to_string(records.size()) + " exchanges tagged", envelope(cfg, result), out, err);
    return kOk;
}

int run_losscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto res = check_ull_gradient(cfg.vocab, cfg.trials, cfg.alpha_sweep ? 0.0 : cfg.alpha, cfg.seed, 1e-5,
                                        cfg.jobs);
    Json result;
    result["trials"] = res.trials;
    result["max_relative_error"] = res.max_relative_error;
    result["tolerance"] = res.tolerance;
    result["passed"] = res.passed();
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.3e", res.max_relative_error);
    const std::string summary = "losscheck: " + std::to_string(res.trials) + " trials, max relative error " + buf +
                                (res.passed() ? " PASS" : " FAIL");
    out << summary << '\n';
    if (cfg.json) out << envelope(cfg, result).dump(2) << '\n';
    (void)err;
    return res.passed() ? kOk : kNumericError;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.subcommand) {
        case Subcommand::Metrics: return run_metrics(cfg, out, err);
        case Subcommand::Weigh: return run_weigh(cfg, out, err);
        case Subcommand::Keywords: return run_keywords(cfg, out, err);
        case Subcommand::Rerank: return run_rerank(cfg, out, err);
        case Subcommand::Losscheck: return run_losscheck(cfg, out, err);
        case Subcommand::Tag: return run_tag(cfg, out, err);
        }
    } catch (const NumericError& e) {
        err << "error: " << e.what() << '\n';
        return kNumericError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entrainment metrics and training-data preparation for task-oriented dialogue", "entrain"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolkitVersion));

    // Flag values are collected as text and applied after the config file so
    // that explicit flags win.
    std::vector<std::tuple<CLI::App*, CLI::Option*, std::string>> bound;
    std::map<std::string, std::string> values;
    std::string config_path;

    auto add_value = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help) {
        auto* opt = sub->add_option(flag, values[sub->get_name() + "." + key], help);
        bound.emplace_back(sub, opt, key);
    };
    auto add_flag = [&](CLI::App* sub, const std::string& flag, const std::string& key, const std::string& help) {
        auto* opt = sub->add_flag(flag, help);
        bound.emplace_back(sub, opt, key);
    };
    auto common = [&](CLI::App* sub, bool data) {
        sub->add_option("--config", config_path, "TOML configuration file");
        if (data) {
            add_value(sub, "-i,--input", "input", "Exchange JSONL input ('-' for stdin)");
            add_value(sub, "-o,--output", "output", "Output path ('-' for stdout)");
        }
        add_flag(sub, "--json", "json", "Print the full report as JSON");
        add_value(sub, "--seed", "seed", "Random seed");
        add_value(sub, "--jobs", "jobs", "Worker threads");
    };

    std::map<CLI::App*, Subcommand> kinds;
    auto* metrics = app.add_subcommand("metrics", "Entrainment and BLEU metrics over a corpus");
    common(metrics, true);
    add_value(metrics, "--tsv", "tsv", "Per-exchange TSV output");
    add_value(metrics, "--lexicon", "lexicon", "POS lexicon file");
    kinds[metrics] = Subcommand::Metrics;

    auto* weigh_cmd = app.add_subcommand("weigh", "Annotate exchanges with instance weights");
    common(weigh_cmd, true);
    add_value(weigh_cmd, "--fn", "fn", "Weight function: w1 or w2");
    add_value(weigh_cmd, "--tau", "tau", "W1 threshold (percent)");
    add_value(weigh_cmd, "--w", "w", "W2 spread");
    add_value(weigh_cmd, "--beta", "beta", "W2 midpoint (percent)");
    add_value(weigh_cmd, "--eps", "eps", "W2 floor");
    add_flag(weigh_cmd, "--materialize", "materialize", "Repeat records round(weight) times");
    kinds[weigh_cmd] = Subcommand::Weigh;

    auto* kw = app.add_subcommand("keywords", "Select keywords and emit keyword-conditioned sequences");
    common(kw, true);
    add_value(kw, "--t", "t", "Attention score threshold relative to the maximum");
    add_value(kw, "--sigma", "sigma", "Probability of using attention keywords in blend mode");
    add_value(kw, "--mode", "mode", "attn, overlap or blend");
    add_value(kw, "--attention", "attention", "Attention JSONL keyed by dialogue_id and turn");
    add_flag(kw, "--emit-sequences", "emit_sequences", "Add serialized training sequences");
    kinds[kw] = Subcommand::Keywords;

    auto* rr = app.add_subcommand("rerank", "Rerank candidates by n-gram match with the user context");
    common(rr, true);
    add_value(rr, "--w1", "w1", "Unigram precision weight");
    add_value(rr, "--w2", "w2", "Bigram precision weight");
    add_flag(rr, "--history", "history", "Use the full dialogue history as context");
    kinds[rr] = Subcommand::Rerank;

    auto* lc = app.add_subcommand("losscheck", "Finite-difference check of the user-likelihood gradient");
    common(lc, false);
    add_value(lc, "--vocab", "vocab", "Maximum vocabulary size");
    add_value(lc, "--trials", "trials", "Number of random draws");
    add_value(lc, "--alpha", "alpha", "Loss weight");
    add_flag(lc, "--alpha-sweep", "alpha_sweep", "Draw alpha from {0.1,...,0.5} per trial");
    kinds[lc] = Subcommand::Losscheck;

    auto* tg = app.add_subcommand("tag", "Fill user_pos/response_pos with coarse POS tags");
    common(tg, true);
    add_value(tg, "--lexicon", "lexicon", "POS lexicon file");
    kinds[tg] = Subcommand::Tag;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }

    RunConfig cfg;
    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = kinds.at(chosen);
    try {
        if (!config_path.empty()) apply_config_file(config_path, cfg);
        for (const auto& [owner, opt, key] : bound) {
            if (owner != chosen || opt->count() == 0) continue;
            if (opt->get_expected_min() == 0)
                apply_setting(cfg, key, "true");
            else
                apply_setting(cfg, key, values.at(chosen->get_name() + "." + key));
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return run(cfg, out, err);
}

} // namespace entrain::cli
