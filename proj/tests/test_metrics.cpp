#include <doctest.h>

#include <cmath>
#include <random>

#include "entrain/error.hpp"
#include "entrain/metrics.hpp"
#include "oracles.hpp"

using namespace entrain;
using W = std::vector<std::string>;

namespace {

Exchange exchange(std::string user, std::string response, std::optional<std::string> reference = std::nullopt) {
    Exchange ex;
    ex.dialogue_id = "d";
    ex.user = Utterance::from_text(Speaker::User, std::move(user));
    ex.response = Utterance::from_text(Speaker::System, std::move(response));
    if (reference) ex.reference = Utterance::from_text(Speaker::System, std::move(*reference));
    return ex;
}

Exchange tagged(std::vector<std::string> user_tags, std::vector<std::string> response_tags) {
    std::string u, r;
    for (std::size_t i = 0; i < user_tags.size(); ++i) u += "w ";
    for (std::size_t i = 0; i < response_tags.size(); ++i) r += "w ";
    auto ex = exchange(u, r);
    ex.user_pos = std::move(user_tags);
    ex.response_pos = std::move(response_tags);
    return ex;
}

const char* kHotelUser = "I'll need a reservation for 3 nights starting Sunday.";
const char* kHotelResponse = "your reservation is for 3 nights";

} // namespace

TEST_CASE("ngram_precision worked examples") {
    CHECK(ngram_precision(W{"a", "b"}, W{"a", "b"}, 1) == 1.0);
    const W cand{"your", "reservation", "is", "for", "3", "nights"};
    const W ref{"i'll", "need", "a", "reservation", "for", "3", "nights", "starting", "sunday", "."};
    CHECK(ngram_precision(cand, ref, 1) == doctest::Approx(4.0 / 6.0));
    CHECK(ngram_precision(W{"a"}, W{"a", "b"}, 2) == 0.0);
    // Clipping: a repeated word matches at most as often as it appears in the reference.
    CHECK(ngram_precision(W{"a", "a", "a"}, W{"a", "b"}, 1) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("ngram_precision agrees with brute-force pairing") {
    std::mt19937 gen(99);
    const W vocab{"a", "b", "c", "d"};
    for (int trial = 0; trial < 500; ++trial) {
        W cand(gen() % 9), ref(gen() % 9);
        for (auto& w : cand) w = vocab[gen() % vocab.size()];
        for (auto& w : ref) w = vocab[gen() % vocab.size()];
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto m = clipped_ngram_match<std::string>(cand, ref, n);
            const auto [matched, total] = oracle::brute_ngram_match(cand, ref, n);
            CHECK(m.matched == matched);
            CHECK(m.total == total);
        }
    }
}

TEST_CASE("lex_p1 and lex_r1") {
    const auto hotel = exchange(kHotelUser, kHotelResponse);
    CHECK(lex_p1(hotel).value == doctest::Approx(66.6667).epsilon(1e-4));
    CHECK(lex_r1(hotel).value == doctest::Approx(40.0));

    const auto copy = exchange("book a table for two", "book a table for two");
    CHECK(lex_p1(copy).value == 100.0);
    CHECK(lex_r1(copy).value == 100.0);

    const auto disjoint = exchange("hello there", "goodbye now");
    CHECK(lex_p1(disjoint).value == 0.0);
    CHECK(lex_r1(disjoint).value == 0.0);

    const auto superset = exchange("a b", "b a c a");
    CHECK(lex_r1(superset).value == 100.0);

    const auto empty = exchange("hello", "");
    CHECK(lex_p1(empty).value == 0.0);
    CHECK(lex_p1(empty).degenerate);
    CHECK(lex_r1(exchange("", "hi")).degenerate);
}

TEST_CASE("lex_p1 with roles swapped equals lex_r1") {
    std::mt19937 gen(5);
    const std::vector<std::string> vocab{"the", "train", "to", "ely", "at", "17:00", "."};
    for (int i = 0; i < 200; ++i) {
        std::string u, r;
        for (unsigned k = 0, n = 1 + gen() % 8; k < n; ++k) u += vocab[gen() % vocab.size()] + " ";
        for (unsigned k = 0, n = 1 + gen() % 8; k < n; ++k) r += vocab[gen() % vocab.size()] + " ";
        CHECK(lex_p1(exchange(r, u)).value == lex_r1(exchange(u, r)).value);
    }
}

TEST_CASE("syn_p") {
    const auto& lex = Lexicon::builtin();
    const auto same = exchange("i want a cheap hotel", "i want a cheap hotel");
    CHECK(syn_p(same, 2, lex).value == 100.0);
    CHECK(syn_p(same, 3, lex).value == 100.0);

    const auto worked = tagged({"PRON", "VERB", "DET", "NOUN"}, {"DET", "NOUN", "VERB"});
    CHECK(syn_p(worked, 2, lex).value == doctest::Approx(50.0));

    const auto short_resp = exchange("i want a cheap hotel", "yes please");
    CHECK(syn_p(short_resp, 3, lex).value == 0.0);
}

TEST_CASE("fifty_mfc") {
    SUBCASE("verbatim copy gives 0") {
        const std::vector<W> side{{"i", "want", "a", "train"}, {"to", "ely", "please"}};
        CHECK(fifty_mfc(side, side) == doctest::Approx(0.0));
    }
    SUBCASE("disjoint sides reach -2") {
        const std::vector<W> user{W(10, "a")};
        const std::vector<W> system{W(10, "b")};
        CHECK(fifty_mfc(user, system) == doctest::Approx(-2.0));
    }
    SUBCASE("empty side is an error") {
        const std::vector<W> user{{"a"}};
        const std::vector<W> system{{}};
        CHECK_THROWS_AS(fifty_mfc(user, system), InputError);
    }
    SUBCASE("matches the naive oracle, including the top-50 cut and ties") {
        std::mt19937 gen(17);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t vocab = 10 + gen() % 80;
            std::vector<W> user(5), system(5);
            W flat_user, flat_system;
            for (auto& u : user)
                for (unsigned k = 0, n = 1 + gen() % 30; k < n; ++k) {
                    u.push_back("w" + std::to_string(gen() % vocab));
                    flat_user.push_back(u.back());
                }
            for (auto& s : system)
                for (unsigned k = 0, n = 1 + gen() % 30; k < n; ++k) {
                    s.push_back("w" + std::to_string(gen() % vocab));
                    flat_system.push_back(s.back());
                }
            const double got = fifty_mfc(user, system);
            CHECK(got == doctest::Approx(oracle::naive_fifty_mfc(flat_user, flat_system)).epsilon(1e-12));
            CHECK(got >= -2.0);
            CHECK(got <= 0.0);
        }
    }
    SUBCASE("duplicating the corpus leaves it unchanged") {
        std::vector<W> user{{"a", "b", "c"}, {"a", "d"}};
        std::vector<W> system{{"a", "e"}, {"c", "c", "b"}};
        const double once = fifty_mfc(user, system);
        auto user2 = user, system2 = system;
        user2.insert(user2.end(), user.begin(), user.end());
        system2.insert(system2.end(), system.begin(), system.end());
        CHECK(fifty_mfc(user2, system2) == doctest::Approx(once).epsilon(1e-12));
    }
}

TEST_CASE("corpus_bleu") {
    const std::vector<W> refs{{"the", "train", "leaves", "at", "17:00", "."}, {"a", "b", "c", "d", "e", "f"}};
    CHECK(corpus_bleu(refs, refs) == doctest::Approx(100.0));

    // p1..p4 = 1, BP = exp(1 - 5/4)
    const std::vector<W> cand{{"a", "b", "c", "d"}};
    const std::vector<W> ref{{"a", "b", "c", "d", "e"}};
    CHECK(corpus_bleu(cand, ref) == doctest::Approx(100.0 * std::exp(1.0 - 5.0 / 4.0)));
    CHECK(corpus_bleu(cand, ref) == doctest::Approx(77.88).epsilon(1e-4));

    const std::vector<W> disjoint{{"x", "y", "z", "w"}};
    CHECK(corpus_bleu(disjoint, ref) < 1e-6);

    CHECK_THROWS_AS(corpus_bleu(cand, refs), InputError);
}

TEST_CASE("BLEU brevity penalty never grows when the candidate shrinks") {
    const W ref{"a", "b", "c", "d", "e", "f", "g", "h"};
    double previous = 2.0;
    for (std::size_t len = ref.size(); len >= 1; --len) {
        BleuStats s;
        const W cand(ref.begin(), ref.begin() + static_cast<std::ptrdiff_t>(len));
        s.add(cand, ref);
        CHECK(s.brevity_penalty() <= previous);
        previous = s.brevity_penalty();
    }
}

TEST_CASE("aggregate") {
    const auto& lex = Lexicon::builtin();
    SUBCASE("single exchange equals the per-exchange values") {
        auto corpus = make_corpus({exchange(kHotelUser, kHotelResponse)});
        const auto r = aggregate(corpus, lex);
        const auto& ex = corpus.exchanges[0];
        CHECK(r.n_exchanges == 1);
        CHECK(r.lex_p1 == doctest::Approx(lex_p1(ex).value));
        CHECK(r.lex_r1 == doctest::Approx(lex_r1(ex).value));
        CHECK(r.syn_p2 == doctest::Approx(syn_p(ex, 2, lex).value));
        CHECK(r.syn_p3 == doctest::Approx(syn_p(ex, 3, lex).value));
        CHECK_FALSE(r.bleu.has_value());
        CHECK_FALSE(r.delex_bleu.has_value());
    }
    SUBCASE("micro-averaging pools counts") {
        auto a = exchange(kHotelUser, kHotelResponse);
        a.dialogue_id = "a";
        auto b = exchange("hello there", "x y z w");
        b.dialogue_id = "b";
        const auto r = aggregate(make_corpus({a, b}), lex);
        CHECK(r.lex_p1 == doctest::Approx(40.0)); // (4 + 0) / (6 + 4)
    }
    SUBCASE("BLEU over exchanges with references, lexicalized fields when given") {
        auto a = exchange("i need a hotel", "[value_name] is a nice hotel", "[value_name] is a nice hotel");
        a.dialogue_id = "a";
        a.record["response_lex"] = "acorn is a nice hotel";
        a.record["reference_lex"] = "alpha is a nice hotel";
        auto b = exchange("thanks", "you are welcome");
        b.dialogue_id = "b";
        const auto r = aggregate(make_corpus({a, b}), lex);
        CHECK(r.n_bleu_pairs == 1);
        REQUIRE(r.delex_bleu.has_value());
        CHECK(*r.delex_bleu == doctest::Approx(100.0));
        CHECK(*r.bleu < 100.0);
    }
    SUBCASE("ranges") {
        std::mt19937 gen(3);
        const W vocab{"a", "b", "c", "the", "train", "."};
        std::vector<Exchange> exs;
        for (int i = 0; i < 50; ++i) {
            std::string u, s;
            for (unsigned k = 0, n = 1 + gen() % 7; k < n; ++k) u += vocab[gen() % vocab.size()] + " ";
            for (unsigned k = 0, n = gen() % 7; k < n; ++k) s += vocab[gen() % vocab.size()] + " ";
            auto ex = exchange(u, s + "x");
            ex.dialogue_id = "d" + std::to_string(i);
            exs.push_back(ex);
        }
        const auto r = aggregate(make_corpus(exs), lex);
        for (double v : {r.lex_p1, r.lex_r1, r.syn_p2, r.syn_p3}) {
            CHECK(v >= 0.0);
            CHECK(v <= 100.0);
        }
        CHECK(r.mfc50 >= -2.0);
        CHECK(r.mfc50 <= 0.0);
    }
    CHECK_THROWS_AS(aggregate(Corpus{}, lex), InputError);
}
