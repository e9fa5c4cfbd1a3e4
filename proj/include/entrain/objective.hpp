#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace entrain {

using LogitVector = std::vector<double>;
using TokenDist = std::vector<double>;
using TokenId = std::size_t;
// Sorted, duplicate-free vocabulary ids.
using TokenSet = std::vector<TokenId>;

TokenSet make_token_set(std::vector<TokenId> ids, std::size_t vocab);

/// Max-subtracted softmax.
TokenDist softmax(std::span<const double> logits);

/// -ln p(target). Throws NumericError when p(target) is 0.
double ce_loss(std::span<const double> dist, TokenId target);

/// -sum over negatives of ln(1 - p(c)); 0 for an empty set. Throws
/// NumericError when some p(c) is 1.
double unlikelihood_loss(std::span<const double> dist, const TokenSet& negatives);

/// User-likelihood loss -alpha * ln(sum over U of p(u)). Throws InputError on
/// an empty set, NumericError when the user mass is 0.
double ull(std::span<const double> dist, const TokenSet& user, double alpha);

enum class LossMode { CE, CE_Unl, CE_ULL, CE_Unl_ULL };

struct LossTerms {
    double ce = 0.0;
    double unl = 0.0;
    double ull = 0.0;
    double total = 0.0;
};

LossTerms combined_loss(std::span<const double> logits, TokenId target, const TokenSet& negatives,
                        const TokenSet& user, double alpha, LossMode mode);

/// Unlikelihood negatives at step t: tokens emitted at steps < t, excluding
/// the step's own target.
TokenSet previous_token_negatives(std::span<const TokenId> targets, std::size_t step, std::size_t vocab);

/// Mean of combined_loss over timesteps, with previous-token negatives.
LossTerms sequence_loss(std::span<const LogitVector> logits, std::span<const TokenId> targets,
                        const TokenSet& user, double alpha, LossMode mode);

/// d ull / d logits: -alpha * p_k (1[k in U] - s) / s with s the user mass.
std::vector<double> grad_ull(std::span<const double> logits, const TokenSet& user, double alpha);
/// d ce / d logits: p - onehot(target).
std::vector<double> grad_ce(std::span<const double> logits, TokenId target);
/// d unl / d logits: sum over c of p_c / (1 - p_c) * (1[k = c] - p_k).
std::vector<double> grad_unlikelihood(std::span<const double> logits, const TokenSet& negatives);
std::vector<double> grad_combined(std::span<const double> logits, TokenId target, const TokenSet& negatives,
                                  const TokenSet& user, double alpha, LossMode mode);

struct GradientCheckResult {
    std::size_t trials = 0;
    double max_relative_error = 0.0;
    double tolerance = 1e-5;
    bool passed() const { return max_relative_error < tolerance; }
};

/// Compares grad_ull against central finite differences over `trials`
/// random (logits, U) draws with vocabulary sizes in [2, max_vocab]. Each
/// trial draws from its own stream seeded by seed ^ trial. With alpha <= 0
/// each trial draws alpha from {0.1, 0.2, 0.3, 0.4, 0.5}.
GradientCheckResult check_ull_gradient(std::size_t max_vocab, std::size_t trials, double alpha,
                                       std::uint64_t seed, double step = 1e-5, std::size_t jobs = 1);

/// ||a - b||_inf / max(||a||_inf, ||b||_inf), absolute error when both norms are below 1e-8.
double relative_error(std::span<const double> a, std::span<const double> b);

/// Positional matches over the shared prefix length, divided by the longer
/// length. Both empty counts as 1.
double token_accuracy(std::span<const std::string> a, std::span<const std::string> b);

/// Checkpoint selection score: mean of token accuracy against the reference
/// and against the user turn.
double selection_score(std::span<const std::string> generated, std::span<const std::string> reference,
                       std::span<const std::string> user);

} // namespace entrain
