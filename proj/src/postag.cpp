#include "entrain/postag.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "entrain/error.hpp"

namespace entrain {

namespace detail {
extern const std::string_view builtin_lexicon_text;
}

namespace {

constexpr std::array<std::string_view, 12> kTagNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET", "ADP", "NUM", "CONJ", "PRT", "PUNCT", "X"};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

std::string_view to_string(PosTag tag) {
    return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> parse_pos_tag(std::string_view name) {
    for (std::size_t i = 0; i < kTagNames.size(); ++i)
        if (kTagNames[i] == name) return static_cast<PosTag>(i);
    return std::nullopt;
}

void Lexicon::add_entry(std::string token, PosTag tag) {
    entries_.insert_or_assign(std::move(token), tag);
}

void Lexicon::add_suffix_rule(std::string suffix, PosTag tag) {
    auto pos = std::find_if(suffix_rules_.begin(), suffix_rules_.end(),
                            [&](const auto& r) { return r.first.size() < suffix.size(); });
    suffix_rules_.insert(pos, {std::move(suffix), tag});
}

std::optional<PosTag> Lexicon::lookup(std::string_view normalized) const {
    if (auto it = entries_.find(std::string(normalized)); it != entries_.end()) return it->second;
    return std::nullopt;
}

std::optional<PosTag> Lexicon::match_suffix(std::string_view normalized) const {
    for (const auto& [suffix, tag] : suffix_rules_) {
        // A suffix must leave a nonempty stem.
        if (normalized.size() > suffix.size() && normalized.ends_with(suffix)) return tag;
    }
    return std::nullopt;
}

Lexicon Lexicon::parse(std::istream& in) {
    Lexicon lex;
    bool in_suffix = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto text = trim(line);
        if (text.empty()) continue;
        if (text == "#suffix") {
            in_suffix = true;
            continue;
        }
        if (text.front() == '#') continue;
        auto tab = text.find('\t');
        if (tab == std::string_view::npos)
            throw InputError("lexicon line " + std::to_string(lineno) + ": expected token<TAB>TAG");
        auto key = trim(text.substr(0, tab));
        auto name = trim(text.substr(tab + 1));
        auto tag = parse_pos_tag(name);
        if (!tag)
            throw InputError("lexicon line " + std::to_string(lineno) + ": unknown tag '" +
                             std::string(name) + "'");
        if (key.empty()) throw InputError("lexicon line " + std::to_string(lineno) + ": empty token");
        std::string lowered(key);
        for (auto& c : lowered)
            if (static_cast<unsigned char>(c) < 0x80) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (in_suffix)
            lex.add_suffix_rule(std::move(lowered), *tag);
        else
            lex.add_entry(std::move(lowered), *tag);
    }
    return lex;
}

Lexicon Lexicon::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open lexicon " + path);
    return parse(in);
}

const Lexicon& Lexicon::builtin() {
    static const Lexicon lex = [] {
        std::istringstream in{std::string(detail::builtin_lexicon_text)};
        return parse(in);
    }();
    return lex;
}

bool is_numeric_token(std::string_view s) {
    bool digit = false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)))
            digit = true;
        else if (c != ':' && c != '.' && c != ',' && c != '/' && c != '-')
            return false;
    }
    return digit;
}

std::vector<PosTag> tag(std::span<const Token> tokens, const Lexicon& lexicon) {
    std::vector<PosTag> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        const auto& w = t.normalized;
        if (is_punctuation(w))
            out.push_back(PosTag::PUNCT);
        else if (is_numeric_token(w))
            out.push_back(PosTag::NUM);
        else if (auto hit = lexicon.lookup(w))
            out.push_back(*hit);
        else if (auto rule = lexicon.match_suffix(w))
            out.push_back(*rule);
        else
            out.push_back(PosTag::X);
    }
    return out;
}

std::vector<std::string> tag_names(std::span<const PosTag> tags) {
    std::vector<std::string> out;
    out.reserve(tags.size());
    for (auto t : tags) out.emplace_back(to_string(t));
    return out;
}

ResolvedTags resolve_tags(const Exchange& ex, const Lexicon& lexicon) {
    auto side = [&](const std::optional<std::vector<std::string>>& given, const Utterance& utt,
                    const char* field) {
        if (given) {
            if (given->size() != utt.tokens.size())
                throw InputError("exchange " + ex.key() + ": " + field + " has " +
                                 std::to_string(given->size()) + " tags for " +
                                 std::to_string(utt.tokens.size()) + " tokens");
            return *given;
        }
        return tag_names(tag(utt.tokens, lexicon));
    };
    ResolvedTags out;
    out.user = side(ex.user_pos, ex.user, "user_pos");
    out.response = side(ex.response_pos, ex.response, "response_pos");
    return out;
}

} // namespace entrain
