#include <doctest.h>

#include "idealmatch/automata.hpp"
#include "idealmatch/error.hpp"
#include "idealmatch/ideals.hpp"
#include "idealmatch/random.hpp"
#include "idealmatch/single_word.hpp"
#include "idealmatch/witnesses.hpp"
#include "oracles.hpp"

using namespace idealmatch;

namespace {

Alphabet ab() { return Alphabet{"a", "b"}; }

// Every non-empty word over k letters of length <= max_len.
std::vector<Word> patterns(std::size_t k, std::size_t max_len) {
    auto all = oracle::all_words(k, max_len);
    all.erase(all.begin());
    return all;
}

}  // namespace

TEST_CASE("pattern words") {
    const PatternWord w(ab(), "abb");
    CHECK(w.length() == 3);
    CHECK(w.m() == 5);
    CHECK(w.letter(1) == 0);
    CHECK(w.letter(3) == 1);
    CHECK_THROWS_AS(PatternWord(ab(), ""), input_error);
    CHECK_THROWS_AS(PatternWord(ab(), "abc"), input_error);
}

TEST_CASE("word_dfa") {
    CHECK(word_dfa(PatternWord(ab(), "ab")).state_count() == 4);
    const auto b = word_dfa(PatternWord(ab(), "b"));
    CHECK(b.state_count() == 3);
    CHECK(enumerate_language(b, 5).words == std::vector<Word>{Word{1}});
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const auto letters = random_word(rng, 1 + i % 3, 1 + i % 10);
        const PatternWord w(letters_alphabet(1 + i % 3), letters);
        const auto d = word_dfa(w);
        REQUIRE(d.state_count() == w.m());
        REQUIRE(minimize(d).state_count() == d.state_count());
        REQUIRE(enumerate_language(d, 11).words == std::vector<Word>{letters});
    }
}

TEST_CASE("bridge table") {
    CHECK(bridge_table(PatternWord(ab(), "bbb")).values() == std::vector<std::size_t>{0, 1, 2});
    CHECK(bridge_table(PatternWord(ab(), "ab")).values() == std::vector<std::size_t>{0, 0});
    CHECK(bridge_table(PatternWord(ab(), "aba")).values() == std::vector<std::size_t>{0, 0, 1});
    for (std::size_t k = 1; k <= 3; ++k) {
        for (const auto& w : patterns(k, k == 3 ? 6 : 9)) {
            const auto table = bridge_table(PatternWord(letters_alphabet(k), w));
            REQUIRE(table.values() == oracle::borders(w));
        }
    }
}

TEST_CASE("single word automata") {
    SUBCASE("suffix of bbb") {
        const auto d = single_word_automaton(MatchMode::Suffix, PatternWord(ab(), "bbb"));
        CHECK(d.state_count() == 4);
        // a sends every state back to ε.
        for (State q = 0; q < 4; ++q) {
            CHECK(d.next(q, 0) == 0);
        }
        CHECK(d.next(3, 1) == 3);
    }
    SUBCASE("factor of bbb") {
        const auto d = single_word_automaton(MatchMode::Factor, PatternWord(ab(), "bbb"));
        CHECK(d.state_count() == 4);
        CHECK(d.next(3, 0) == 3);
        CHECK(d.next(3, 1) == 3);
        CHECK(d.finals() == std::vector<State>{3});
    }
    SUBCASE("subsequence of ab") {
        const auto d = single_word_automaton(MatchMode::Subsequence, PatternWord(ab(), "ab"));
        CHECK(d.next(0, 1) == 0);
        CHECK(d.next(0, 0) == 1);
        CHECK(d.next(1, 0) == 1);
        CHECK(d.next(1, 1) == 2);
    }
    SUBCASE("prefix is the right ideal") {
        const auto d = single_word_automaton(MatchMode::Prefix, PatternWord(ab(), "abab"));
        CHECK(d.state_count() == 6);
    }
    SUBCASE("every mode matches the generic ideal") {
        for (std::size_t k = 1; k <= 3; ++k) {
            for (const auto& letters : patterns(k, k == 1 ? 10 : (k == 2 ? 8 : 5))) {
                const PatternWord w(letters_alphabet(k), letters);
                for (auto mode : kAllMatchModes) {
                    const auto d = single_word_automaton(mode, w);
                    REQUIRE(isomorphic(d, ideal(ideal_kind(mode), word_dfa(w))));
                    // Over one letter wΣ* never needs the sink.
                    const bool sink = mode == MatchMode::Prefix && k > 1;
                    const std::size_t expected = sink ? w.m() : w.m() - 1;
                    REQUIRE(d.state_count() == expected);
                }
            }
        }
    }
}

TEST_CASE("match_single_word") {
    Rng rng(19);
    for (int i = 0; i < 150; ++i) {
        const std::size_t k = 1 + i % 3;
        const auto alphabet = letters_alphabet(k);
        const PatternWord w(alphabet, random_word(rng, k, 1 + i % 5));
        const auto t = random_dfa(rng, alphabet, 1 + i % 5);
        for (auto mode : kAllMatchModes) {
            const auto d = match_single_word(mode, w, t);
            REQUIRE(d == match_language(mode, word_dfa(w), t));
        }
    }
    SUBCASE("witness texts") {
        for (int m = 3; m <= 7; ++m) {
            for (int n = 2; n <= 6; ++n) {
                const auto w = witness_word(Family::WordSuffix, m);
                const auto sm = static_cast<std::size_t>(m);
                const auto sn = static_cast<std::size_t>(n);
                CHECK(match_single_word(MatchMode::Prefix, w,
                                        witness({Family::WordPrefix, Role::Text, m, n}))
                          .state_count() == sm + sn - 1);
                CHECK(match_single_word(MatchMode::Suffix, w,
                                        witness({Family::WordSuffix, Role::Text, m, n}))
                          .state_count() == (sm - 1) * sn - (sm - 2));
                CHECK(match_single_word(MatchMode::Factor, w,
                                        witness({Family::WordFactor, Role::Text, m, n}))
                          .state_count() == (sm - 1) * sn);
                CHECK(match_single_word(MatchMode::Subsequence, w,
                                        witness({Family::WordSubsequence, Role::Text, m, n}))
                          .state_count() == (sm - 1) * sn);
            }
        }
    }
    SUBCASE("prefix with the pattern a^{m-2}") {
        // The same bound with the pattern word written over a.
        for (int m = 3; m <= 7; ++m) {
            for (int n = 2; n <= 6; ++n) {
                const PatternWord w(ab(), Word(static_cast<std::size_t>(m - 2), 0));
                const auto r = static_cast<State>((m - 2) % n);
                const auto sn = static_cast<std::size_t>(n);
                const Transformation letters[] = {
                    Transformation::cycle_range(sn, 0, static_cast<State>(n - 1)),
                    Transformation::identity(sn)};
                const State finals[] = {static_cast<State>((r + sn - 1) % sn)};
                const auto t = Dfa::from_transformations(ab(), 0, finals, letters);
                CHECK(match_single_word(MatchMode::Prefix, w, t).state_count() ==
                      static_cast<std::size_t>(m + n - 1));
            }
        }
    }
    CHECK_THROWS_AS((void)match_single_word(MatchMode::Prefix, PatternWord(ab(), "a"),
                                            witness({Family::Unary, Role::Text, 3, 2})),
                    input_error);
}
