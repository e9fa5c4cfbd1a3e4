#include "entrain/keywords.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "entrain/error.hpp"
#include "entrain/kernels.hpp"

namespace entrain {

namespace {

std::string normalize(const std::string& s) {
    std::string out = s;
    for (auto& c : out)
        if (static_cast<unsigned char>(c) < 0x80) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool contains_marker(std::string_view s) {
    for (auto m : {kContextMarker, kBeliefMarker, kDatabaseMarker, kKeywordsMarker})
        if (s.find(m) != std::string_view::npos) return true;
    return false;
}

} // namespace

SquareMatrix::SquareMatrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n * n) throw InputError("matrix data does not match " + std::to_string(n) + "x" + std::to_string(n));
}

void AttentionStack::validate() const {
    if (heads.empty()) throw InputError("attention stack has no heads");
    const std::size_t n = heads.front().size();
    for (std::size_t h = 0; h < heads.size(); ++h) {
        if (heads[h].size() != n)
            throw InputError("attention head " + std::to_string(h) + " is " + std::to_string(heads[h].size()) +
                             "x" + std::to_string(heads[h].size()) + ", expected " + std::to_string(n));
        for (std::size_t r = 0; r < n; ++r) {
            const auto row = heads[h].row(r);
            if (std::any_of(row.begin(), row.end(), [](double v) { return !(v >= 0.0) || !std::isfinite(v); }))
                throw InputError("attention head " + std::to_string(h) + " row " + std::to_string(r) +
                                 " has a negative or non-finite entry");
            double s = 0.0;
            for (double v : row) s += v;
            if (std::abs(s - 1.0) > 1e-6)
                throw InputError("attention head " + std::to_string(h) + " row " + std::to_string(r) +
                                 " sums to " + std::to_string(s));
        }
    }
    if (!tokens.empty() && tokens.size() != n)
        throw InputError("attention stack has " + std::to_string(tokens.size()) + " tokens for " +
                         std::to_string(n) + " positions");
    for (auto p : user_positions)
        if (p >= n) throw InputError("user position " + std::to_string(p) + " out of range");
}

AttentionStack AttentionStack::from_json(const nlohmann::json& j) {
    AttentionStack stack;
    try {
        stack.tokens = j.at("tokens").get<std::vector<std::string>>();
        stack.user_positions = j.at("user_positions").get<std::vector<std::size_t>>();
        for (const auto& head : j.at("heads")) {
            const auto rows = head.get<std::vector<std::vector<double>>>();
            std::vector<double> flat;
            flat.reserve(rows.size() * rows.size());
            for (const auto& r : rows) {
                if (r.size() != rows.size()) throw InputError("attention head is not square");
                flat.insert(flat.end(), r.begin(), r.end());
            }
            stack.heads.emplace_back(rows.size(), std::move(flat));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("attention object: ") + e.what());
    }
    stack.validate();
    return stack;
}

SquareMatrix mean_heads(const AttentionStack& stack) {
    if (stack.heads.empty()) throw InputError("attention stack has no heads");
    const std::size_t n = stack.heads.front().size();
    const auto& k = kernels::active();
    SquareMatrix mean(n);
    for (const auto& head : stack.heads) {
        if (head.size() != n) throw InputError("attention heads differ in shape");
        k.accumulate(mean.values(), head.values());
    }
    k.scale(mean.values(), 1.0 / static_cast<double>(stack.heads.size()));
    return mean;
}

std::map<std::size_t, double> attention_scores(const SquareMatrix& m, std::span<const std::size_t> positions) {
    const std::size_t n = m.size();
    std::vector<double> column(n, 0.0);
    const auto& k = kernels::active();
    for (std::size_t j = 0; j < n; ++j) k.accumulate(column, m.row(j));
    std::map<std::size_t, double> scores;
    for (auto i : positions) {
        if (i >= n) throw InputError("position " + std::to_string(i) + " out of range");
        scores[i] = column[i] - m(i, i);
    }
    return scores;
}

KeywordSelection select_keywords(const std::map<std::size_t, double>& scores, std::span<const std::string> tokens,
                                 double t) {
    if (!(t > 0.0 && t <= 1.0)) throw InputError("keyword threshold t must be in (0, 1]");
    KeywordSelection sel;
    sel.scores = scores;
    if (scores.empty()) {
        sel.empty_input = true;
        return sel;
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [pos, s] : scores) best = std::max(best, s);
    sel.threshold_used = t * best;
    std::set<std::string> seen;
    for (const auto& [pos, s] : scores) {
        if (pos >= tokens.size()) throw InputError("keyword position " + std::to_string(pos) + " has no token");
        if (s < sel.threshold_used && s != best) continue;
        auto norm = normalize(tokens[pos]);
        if (seen.insert(norm).second) sel.selected.push_back(std::move(norm));
    }
    return sel;
}

KeywordSelection attention_keywords(const AttentionStack& stack, double t) {
    stack.validate();
    const auto m = mean_heads(stack);
    return select_keywords(attention_scores(m, stack.user_positions), stack.tokens, t);
}

std::vector<std::string> overlap_keywords(const Exchange& ex) {
    if (!ex.reference) throw InputError("exchange " + ex.key() + ": overlap keywords need a reference");
    std::set<std::string> in_reference;
    for (const auto& tok : ex.reference->tokens) in_reference.insert(tok.normalized);
    std::set<std::string> seen;
    std::vector<std::string> out;
    for (const auto& tok : ex.user.tokens)
        if (in_reference.count(tok.normalized) && seen.insert(tok.normalized).second) out.push_back(tok.normalized);
    return out;
}

bool blend_draw(double sigma, std::uint64_t seed, std::uint64_t index) {
    if (!(sigma >= 0.0 && sigma <= 1.0)) throw InputError("blend sigma must be in [0, 1]");
    if (sigma == 0.0) return false;
    if (sigma == 1.0) return true;
    std::mt19937_64 gen(seed ^ index);
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return u < sigma;
}

std::vector<std::string> blend(const std::vector<std::string>& overlap_kw, const std::vector<std::string>& attn_kw,
                               double sigma, std::uint64_t seed, std::uint64_t index) {
    return blend_draw(sigma, seed, index) ? attn_kw : overlap_kw;
}

std::string emit_training_sequence(const std::string& context, const std::string& belief, const std::string& db,
                                   std::span<const std::string> keywords) {
    for (const auto* section : {&context, &belief, &db})
        if (contains_marker(*section)) throw InputError("training sequence section contains a section marker");
    for (const auto& k : keywords) {
        if (k.empty() || contains_marker(k) ||
            std::any_of(k.begin(), k.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
            throw InputError("invalid keyword '" + k + "'");
    }
    std::string out;
    auto section = [&out](const char* marker, const std::string& body) {
        out += marker;
        out += ' ';
        if (!body.empty()) {
            out += body;
            out += ' ';
        }
    };
    section(kContextMarker, context);
    section(kBeliefMarker, belief);
    section(kDatabaseMarker, db);
    out += kKeywordsMarker;
    for (const auto& k : keywords) {
        out += ' ';
        out += k;
    }
    return out;
}

} // namespace entrain
