#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "entrain/corpus.hpp"

namespace entrain {

// Row-major n x n matrix; entry (j, i) is the attention paid by query
// position j to key position i.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
    SquareMatrix(std::size_t n, std::vector<double> row_major);

    std::size_t size() const { return n_; }
    double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
    double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }
    std::span<double> row(std::size_t r) { return {data_.data() + r * n_, n_}; }
    std::span<const double> values() const { return data_; }
    std::span<double> values() { return data_; }

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

struct AttentionStack {
    std::vector<SquareMatrix> heads;
    std::vector<std::string> tokens;
    std::vector<std::size_t> user_positions;

    /// Throws InputError on an empty or ragged stack, negative entries, rows
    /// not summing to 1 within 1e-6, or positions out of range.
    void validate() const;
    static AttentionStack from_json(const nlohmann::json& j);
};

SquareMatrix mean_heads(const AttentionStack& stack);

/// Attention received by each position from all other positions: column sum
/// of M without the diagonal entry.
std::map<std::size_t, double> attention_scores(const SquareMatrix& m, std::span<const std::size_t> positions);

struct KeywordSelection {
    std::map<std::size_t, double> scores;
    std::vector<std::string> selected;
    double threshold_used = 0.0;
    bool empty_input = false;
};

/// Keeps positions with score >= t * max score, in position order, deduplicated
/// by normalized form with the first occurrence kept.
KeywordSelection select_keywords(const std::map<std::size_t, double>& scores, std::span<const std::string> tokens,
                                 double t = 0.1);

/// Mean heads, score the user positions, threshold.
KeywordSelection attention_keywords(const AttentionStack& stack, double t = 0.1);

/// Normalized tokens present in both the user turn and the gold reference,
/// in user-turn order, deduplicated. Throws InputError without a reference.
std::vector<std::string> overlap_keywords(const Exchange& ex);

/// One Bernoulli(sigma) draw for record `index`, from a generator seeded
/// with seed ^ index. True selects the attention keywords.
bool blend_draw(double sigma, std::uint64_t seed, std::uint64_t index);

std::vector<std::string> blend(const std::vector<std::string>& overlap_kw, const std::vector<std::string>& attn_kw,
                               double sigma, std::uint64_t seed, std::uint64_t index);

inline constexpr const char* kContextMarker = "<context>";
inline constexpr const char* kBeliefMarker = "<belief>";
inline constexpr const char* kDatabaseMarker = "<database>";
inline constexpr const char* kKeywordsMarker = "<keywords>";

/// `<context> ... <belief> ... <database> ... <keywords> k1 k2 ...`. Throws
/// InputError when a section contains a marker string or a keyword is empty
/// or contains whitespace.
std::string emit_training_sequence(const std::string& context, const std::string& belief, const std::string& db,
                                   std::span<const std::string> keywords);

} // namespace entrain
