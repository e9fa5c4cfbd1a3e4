#include "entrain/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "entrain/error.hpp"

namespace entrain {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_punct_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return u < 0x80 && std::ispunct(u);
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (auto& c : out) {
        auto u = static_cast<unsigned char>(c);
        if (u < 0x80) c = static_cast<char>(std::tolower(u));
    }
    return out;
}

// Length of a placeholder starting at s[0], or 0 when s does not start with one.
std::size_t placeholder_prefix(std::string_view s) {
    if (s.size() < 3 || s[0] != '[') return 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] == ']') return i > 1 ? i + 1 : 0;
        if (s[i] == '[' || is_space(s[i])) return 0;
    }
    return 0;
}

Token make_token(std::string_view surface) {
    Token t;
    t.surface = std::string(surface);
    t.normalized = lowercase(surface);
    t.is_placeholder = is_placeholder(surface);
    return t;
}

void split_chunk(std::string_view chunk, std::vector<Token>& out) {
    std::size_t begin = 0;
    std::size_t end = chunk.size();
    while (begin < end && is_punct_char(chunk[begin]) &&
           placeholder_prefix(chunk.substr(begin, end - begin)) == 0) {
        out.push_back(make_token(chunk.substr(begin, 1)));
        ++begin;
    }
    std::vector<Token> trailing;
    while (end > begin && is_punct_char(chunk[end - 1]) &&
           placeholder_prefix(chunk.substr(begin, end - begin)) != end - begin) {
        trailing.push_back(make_token(chunk.substr(end - 1, 1)));
        --end;
    }
    if (end > begin) out.push_back(make_token(chunk.substr(begin, end - begin)));
    out.insert(out.end(), trailing.rbegin(), trailing.rend());
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    if (line == 0) throw InputError(what);
    throw InputError("line " + std::to_string(line) + ": " + what);
}

const Record& require(const Record& rec, const char* field, std::size_t line) {
    auto it = rec.find(field);
    if (it == rec.end() || it->is_null()) fail(line, std::string("missing field '") + field + "'");
    return *it;
}

std::string require_string(const Record& rec, const char* field, std::size_t line) {
    const auto& v = require(rec, field, line);
    if (!v.is_string()) fail(line, std::string("field '") + field + "' must be a string");
    return v.get<std::string>();
}

std::optional<std::vector<std::string>> optional_strings(const Record& rec, const char* field,
                                                         std::size_t line) {
    auto it = rec.find(field);
    if (it == rec.end() || it->is_null()) return std::nullopt;
    if (!it->is_array()) fail(line, std::string("field '") + field + "' must be an array of strings");
    std::vector<std::string> out;
    out.reserve(it->size());
    for (const auto& v : *it) {
        if (!v.is_string()) fail(line, std::string("field '") + field + "' must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

} // namespace

bool is_placeholder(std::string_view surface) {
    return !surface.empty() && placeholder_prefix(surface) == surface.size();
}

bool is_punctuation(std::string_view token) {
    return !token.empty() && std::all_of(token.begin(), token.end(), is_punct_char);
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        if (j > i) split_chunk(text.substr(i, j - i), out);
        i = j;
    }
    return out;
}

Utterance Utterance::from_text(Speaker speaker, std::string raw) {
    Utterance u;
    u.speaker = speaker;
    u.tokens = tokenize(raw);
    u.raw = std::move(raw);
    return u;
}

std::vector<std::string> Utterance::normalized() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.normalized);
    return out;
}

std::string Exchange::key() const {
    return dialogue_id + "#" + std::to_string(turn_index);
}

Exchange parse_exchange(const Record& rec, std::size_t line) {
    if (!rec.is_object()) fail(line, "record is not a JSON object");
    Exchange ex;
    ex.line = line;
    ex.dialogue_id = require_string(rec, "dialogue_id", line);

    const auto& turn = require(rec, "turn", line);
    if (!turn.is_number_integer() || turn.get<long long>() < 0)
        fail(line, "field 'turn' must be a nonnegative integer");
    ex.turn_index = static_cast<std::size_t>(turn.get<long long>());

    ex.user = Utterance::from_text(Speaker::User, require_string(rec, "user", line));
    ex.response = Utterance::from_text(Speaker::System, require_string(rec, "response", line));
    if (auto it = rec.find("reference"); it != rec.end() && !it->is_null()) {
        if (!it->is_string()) fail(line, "field 'reference' must be a string");
        ex.reference = Utterance::from_text(Speaker::System, it->get<std::string>());
    }
    ex.user_pos = optional_strings(rec, "user_pos", line);
    ex.response_pos = optional_strings(rec, "response_pos", line);

    if (auto it = rec.find("candidates"); it != rec.end() && !it->is_null()) {
        if (!it->is_array()) fail(line, "field 'candidates' must be an array");
        std::set<int> ranks;
        for (const auto& c : *it) {
            if (!c.is_object()) fail(line, "candidate must be an object");
            Candidate cand;
            cand.text = require_string(c, "text", line);
            const auto& rank = require(c, "rank", line);
            if (!rank.is_number_integer()) fail(line, "candidate 'rank' must be an integer");
            cand.model_rank = rank.get<int>();
            if (!ranks.insert(cand.model_rank).second)
                fail(line, "duplicate candidate rank " + std::to_string(cand.model_rank));
            ex.candidates.push_back(std::move(cand));
        }
        // Ranks must be exactly 1..k.
        if (!ranks.empty() && (*ranks.begin() != 1 || *ranks.rbegin() != static_cast<int>(ranks.size())))
            fail(line, "candidate ranks must be 1..k without gaps");
    }
    ex.record = rec;
    return ex;
}

Corpus make_corpus(std::vector<Exchange> exchanges) {
    Corpus corpus;
    corpus.exchanges = std::move(exchanges);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < corpus.exchanges.size(); ++i) {
        auto& ex = corpus.exchanges[i];
        auto [it, inserted] = index.try_emplace(ex.dialogue_id, corpus.dialogues.size());
        if (inserted) corpus.dialogues.push_back(Dialogue{ex.dialogue_id, {}});
        auto& dialogue = corpus.dialogues[it->second];
        if (!dialogue.turns.empty()) {
            const auto& prev = corpus.exchanges[dialogue.turns.back()];
            if (prev.turn_index == ex.turn_index)
                fail(ex.line, "duplicate exchange (" + ex.dialogue_id + ", " +
                                  std::to_string(ex.turn_index) + ")");
            if (prev.turn_index > ex.turn_index)
                fail(ex.line, "turn " + std::to_string(ex.turn_index) + " of dialogue '" +
                                  ex.dialogue_id + "' is not after turn " +
                                  std::to_string(prev.turn_index));
            ex.context = prev.context;
            ex.context.push_back(prev.user);
            ex.context.push_back(prev.reference ? *prev.reference : prev.response);
        }
        dialogue.turns.push_back(i);
    }
    return corpus;
}

Corpus load_corpus(std::istream& in) {
    std::vector<Exchange> exchanges;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (std::all_of(text.begin(), text.end(), is_space)) continue;
        Record rec;
        try {
            rec = Record::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            fail(line, std::string("malformed JSON: ") + e.what());
        }
        exchanges.push_back(parse_exchange(rec, line));
    }
    return make_corpus(std::move(exchanges));
}

Corpus load_corpus_file(const std::string& path) {
    if (path == "-") return load_corpus(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return load_corpus(in);
}

std::map<std::string, std::size_t> user_token_multiset(const Exchange& ex) {
    std::map<std::string, std::size_t> counts;
    for (const auto& t : ex.user.tokens) ++counts[t.normalized];
    return counts;
}

} // namespace entrain
