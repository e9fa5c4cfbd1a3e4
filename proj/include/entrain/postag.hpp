#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entrain/corpus.hpp"

namespace entrain {

// Coarse universal tagset.
enum class PosTag : std::uint8_t { NOUN, VERB, ADJ, ADV, PRON, DET, ADP, NUM, CONJ, PRT, PUNCT, X };

std::string_view to_string(PosTag tag);
std::optional<PosTag> parse_pos_tag(std::string_view name);

class Lexicon {
public:
    Lexicon() = default;

    /// Reads `token<TAB>TAG` lines; lines after a `#suffix` marker are
    /// `suffix<TAB>TAG` rules. Other `#` lines are comments.
    static Lexicon parse(std::istream& in);
    static Lexicon load_file(const std::string& path);
    /// The built-in English lexicon: function words, MultiWOZ domain words,
    /// placeholder slots and a suffix rule table.
    static const Lexicon& builtin();

    void add_entry(std::string token, PosTag tag);
    void add_suffix_rule(std::string suffix, PosTag tag);

    std::optional<PosTag> lookup(std::string_view normalized) const;
    std::optional<PosTag> match_suffix(std::string_view normalized) const;

    std::size_t entry_count() const { return entries_.size(); }
    std::span<const std::pair<std::string, PosTag>> suffix_rules() const { return suffix_rules_; }

private:
    std::unordered_map<std::string, PosTag> entries_;
    // Kept sorted by descending suffix length, insertion order among equals.
    std::vector<std::pair<std::string, PosTag>> suffix_rules_;
};

bool is_numeric_token(std::string_view normalized);

std::vector<PosTag> tag(std::span<const Token> tokens, const Lexicon& lexicon);

// Tag names rather than PosTag values so that externally supplied tags from
// another tagset pass through unchanged.
struct ResolvedTags {
    std::vector<std::string> user;
    std::vector<std::string> response;
};

/// Uses the record's user_pos/response_pos verbatim when present, else tags.
/// A provided sequence whose length differs from the token count raises
/// InputError naming the exchange.
ResolvedTags resolve_tags(const Exchange& ex, const Lexicon& lexicon);

std::vector<std::string> tag_names(std::span<const PosTag> tags);

} // namespace entrain
