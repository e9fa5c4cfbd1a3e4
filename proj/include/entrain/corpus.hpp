#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace entrain {

using Record = nlohmann::ordered_json;

struct Token {
    std::string surface;
    std::string normalized;
    bool is_placeholder = false;

    bool operator==(const Token&) const = default;
};

enum class Speaker { User, System };

struct Utterance {
    Speaker speaker = Speaker::User;
    std::string raw;
    std::vector<Token> tokens;

    static Utterance from_text(Speaker speaker, std::string raw);
    std::vector<std::string> normalized() const;
};

struct Candidate {
    std::string text;
    int model_rank = 0;
};

struct Exchange {
    std::string dialogue_id;
    std::size_t turn_index = 0;
    Utterance user;
    Utterance response;
    std::optional<Utterance> reference;
    std::optional<std::vector<std::string>> user_pos;
    std::optional<std::vector<std::string>> response_pos;
    std::vector<Candidate> candidates;
    // Prior utterances of the same dialogue, oldest first.
    std::vector<Utterance> context;
    // The source record, unknown fields included, for passthrough on output.
    Record record;
    // 1-based line number in the source stream (0 when built in memory).
    std::size_t line = 0;

    std::string key() const;
};

struct Dialogue {
    std::string id;
    // Indices into Corpus::exchanges, in turn order.
    std::vector<std::size_t> turns;
};

// Exchanges are kept in file order; dialogues are listed in order of first appearance.
struct Corpus {
    std::vector<Exchange> exchanges;
    std::vector<Dialogue> dialogues;

    bool empty() const { return exchanges.empty(); }
};

/// Lowercases, splits on whitespace and peels leading/trailing punctuation
/// into single-character tokens. Bracketed placeholders (`[value_name]`)
/// survive intact, as do tokens with internal punctuation such as `17:00`
/// and `i'll`.
std::vector<Token> tokenize(std::string_view text);

bool is_placeholder(std::string_view surface);
bool is_punctuation(std::string_view token);

/// Parses one JSONL exchange record. `line` is used in error messages only.
Exchange parse_exchange(const Record& record, std::size_t line = 0);

/// Reads exchange JSONL. Blank lines are skipped. Malformed lines, missing
/// fields, duplicate (dialogue_id, turn) pairs and non-increasing turns
/// within a dialogue raise InputError naming the line.
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);

/// Builds a corpus from exchanges already in memory, applying the same checks as load_corpus.
Corpus make_corpus(std::vector<Exchange> exchanges);

std::map<std::string, std::size_t> user_token_multiset(const Exchange& ex);

} // namespace entrain
