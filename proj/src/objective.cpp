#include "entrain/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "entrain/error.hpp"
#include "entrain/kernels.hpp"

namespace entrain {

namespace {

double user_mass(std::span<const double> dist, const TokenSet& user) {
    double s = 0.0;
    for (auto u : user) s += dist[u];
    return s;
}

void check_id(TokenId id, std::size_t vocab) {
    if (id >= vocab)
        throw InputError("token id " + std::to_string(id) + " outside vocabulary of " + std::to_string(vocab));
}

// 53-bit uniform in [0, 1); spelled out so draws are identical across standard libraries.
double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

TokenSet make_token_set(std::vector<TokenId> ids, std::size_t vocab) {
    for (auto id : ids) check_id(id, vocab);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

TokenDist softmax(std::span<const double> logits) {
    const auto& k = kernels::active();
    TokenDist out(logits.size());
    if (logits.empty()) return out;
    const double m = k.max(logits);
    const double z = k.exp_shift_sum(logits, m, out);
    k.scale(out, 1.0 / z);
    return out;
}

double ce_loss(std::span<const double> dist, TokenId target) {
    check_id(target, dist.size());
    if (dist[target] <= 0.0) throw NumericError("cross-entropy: target probability is 0");
    return -std::log(dist[target]);
}

double unlikelihood_loss(std::span<const double> dist, const TokenSet& negatives) {
    double loss = 0.0;
    for (auto c : negatives) {
        check_id(c, dist.size());
        const double rest = 1.0 - dist[c];
        if (rest <= 0.0) throw NumericError("unlikelihood: negative token has probability 1");
        loss -= std::log1p(-dist[c]);
    }
    return loss;
}

double ull(std::span<const double> dist, const TokenSet& user, double alpha) {
    if (user.empty()) throw InputError("user-likelihood loss needs a nonempty user token set");
    for (auto u : user) check_id(u, dist.size());
    const double s = user_mass(dist, user);
    if (s <= 0.0) throw NumericError("user-likelihood: user tokens have zero probability mass");
    // Rounding can push the mass a hair above 1; the loss is nonnegative.
    return s >= 1.0 ? 0.0 : -alpha * std::log(s);
}

LossTerms combined_loss(std::span<const double> logits, TokenId target, const TokenSet& negatives,
                        const TokenSet& user, double alpha, LossMode mode) {
    const auto dist = softmax(logits);
    LossTerms t;
    t.ce = ce_loss(dist, target);
    if (mode == LossMode::CE_Unl || mode == LossMode::CE_Unl_ULL) t.unl = unlikelihood_loss(dist, negatives);
    if ((mode == LossMode::CE_ULL || mode == LossMode::CE_Unl_ULL) && alpha != 0.0) t.ull = ull(dist, user, alpha);
    t.total = t.ce + t.unl + t.ull;
    return t;
}

TokenSet previous_token_negatives(std::span<const TokenId> targets, std::size_t step, std::size_t vocab) {
    std::vector<TokenId> prev(targets.begin(), targets.begin() + static_cast<std::ptrdiff_t>(step));
    auto set = make_token_set(std::move(prev), vocab);
    std::erase(set, targets[step]);
    return set;
}

LossTerms sequence_loss(std::span<const LogitVector> logits, std::span<const TokenId> targets,
                        const TokenSet& user, double alpha, LossMode mode) {
    if (logits.size() != targets.size())
        throw InputError("sequence loss: " + std::to_string(logits.size()) + " steps vs " +
                         std::to_string(targets.size()) + " targets");
    LossTerms mean;
    if (logits.empty()) return mean;
    for (std::size_t t = 0; t < logits.size(); ++t) {
        const auto negatives = previous_token_negatives(targets, t, logits[t].size());
        const auto step = combined_loss(logits[t], targets[t], negatives, user, alpha, mode);
        mean.ce += step.ce;
        mean.unl += step.unl;
        mean.ull += step.ull;
    }
    const double n = static_cast<double>(logits.size());
    mean.ce /= n;
    mean.unl /= n;
    mean.ull /= n;
    mean.total = mean.ce + mean.unl + mean.ull;
    return mean;
}

std::vector<double> grad_ull(std::span<const double> logits, const TokenSet& user, double alpha) {
    if (user.empty()) throw InputError("user-likelihood gradient needs a nonempty user token set");
    const auto p = softmax(logits);
    for (auto u : user) check_id(u, p.size());
    const double s = user_mass(p, user);
    if (s <= 0.0) throw NumericError("user-likelihood: user tokens have zero probability mass");
    std::vector<double> g(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) g[k] = alpha * p[k];
    for (auto u : user) g[u] -= alpha * p[u] / s;
    return g;
}

std::vector<double> grad_ce(std::span<const double> logits, TokenId target) {
    auto g = softmax(logits);
    check_id(target, g.size());
    g[target] -= 1.0;
    return g;
}

std::vector<double> grad_unlikelihood(std::span<const double> logits, const TokenSet& negatives) {
    const auto p = softmax(logits);
    std::vector<double> g(p.size(), 0.0);
    for (auto c : negatives) {
        check_id(c, p.size());
        if (p[c] >= 1.0) throw NumericError("unlikelihood: negative token has probability 1");
        const double r = p[c] / (1.0 - p[c]);
        for (std::size_t k = 0; k < p.size(); ++k) g[k] -= r * p[k];
        g[c] += r;
    }
    return g;
}

std::vector<double> grad_combined(std::span<const double> logits, TokenId target, const TokenSet& negatives,
                                  const TokenSet& user, double alpha, LossMode mode) {
    auto g = grad_ce(logits, target);
    auto add = [&g](const std::vector<double>& h) {
        for (std::size_t k = 0; k < g.size(); ++k) g[k] += h[k];
    };
    if (mode == LossMode::CE_Unl || mode == LossMode::CE_Unl_ULL) add(grad_unlikelihood(logits, negatives));
    if ((mode == LossMode::CE_ULL || mode == LossMode::CE_Unl_ULL) && alpha != 0.0)
        add(grad_ull(logits, user, alpha));
    return g;
}

double relative_error(std::span<const double> a, std::span<const double> b) {
    double diff = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        na = std::max(na, std::abs(a[i]));
        nb = std::max(nb, std::abs(b[i]));
    }
    const double scale = std::max(na, nb);
    return scale < 1e-8 ? diff : diff / scale;
}

GradientCheckResult check_ull_gradient(std::size_t max_vocab, std::size_t trials, double alpha,
                                       std::uint64_t seed, double step, std::size_t jobs) {
    if (max_vocab < 2) throw InputError("gradient check needs a vocabulary of at least 2");
    constexpr double kAlphas[] = {0.1, 0.2, 0.3, 0.4, 0.5};

    auto run_trial = [&](std::size_t trial) {
        std::mt19937_64 gen(seed ^ static_cast<std::uint64_t>(trial));
        const std::size_t vocab = 2 + static_cast<std::size_t>(uniform01(gen) * static_cast<double>(max_vocab - 1));
        LogitVector z(vocab);
        for (auto& v : z) v = -4.0 + 8.0 * uniform01(gen);
        std::vector<TokenId> ids;
        for (TokenId k = 0; k < vocab; ++k)
            if (uniform01(gen) < 0.5) ids.push_back(k);
        if (ids.empty()) ids.push_back(static_cast<TokenId>(uniform01(gen) * static_cast<double>(vocab)));
        const TokenSet user = make_token_set(std::move(ids), vocab);
        const double a = alpha > 0.0 ? alpha : kAlphas[static_cast<std::size_t>(uniform01(gen) * 5.0)];

        const auto analytic = grad_ull(z, user, a);
        std::vector<double> numeric(vocab);
        for (std::size_t k = 0; k < vocab; ++k) {
            auto zp = z, zm = z;
            zp[k] += step;
            zm[k] -= step;
            numeric[k] = (ull(softmax(zp), user, a) - ull(softmax(zm), user, a)) / (2.0 * step);
        }
        return relative_error(analytic, numeric);
    };

    std::vector<double> errors(trials, 0.0);
    jobs = std::max<std::size_t>(1, std::min(jobs, trials));
    if (jobs == 1) {
        for (std::size_t t = 0; t < trials; ++t) errors[t] = run_trial(t);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t j = 0; j < jobs; ++j)
            workers.emplace_back([&, j] {
                for (std::size_t t = j; t < trials; t += jobs) errors[t] = run_trial(t);
            });
    }
    GradientCheckResult result;
    result.trials = trials;
    for (double e : errors) result.max_relative_error = std::max(result.max_relative_error, e);
    return result;
}

double token_accuracy(std::span<const std::string> a, std::span<const std::string> b) {
    if (a.empty() && b.empty()) return 1.0;
    const std::size_t shared = std::min(a.size(), b.size());
    std::size_t hits = 0;
    for (std::size_t i = 0; i < shared; ++i) hits += a[i] == b[i] ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(std::max(a.size(), b.size()));
}

double selection_score(std::span<const std::string> generated, std::span<const std::string> reference,
                       std::span<const std::string> user) {
    return 0.5 * (token_accuracy(generated, reference) + token_accuracy(generated, user));
}

} // namespace entrain
