#include <doctest.h>

#include "idealmatch/automata.hpp"
#include "idealmatch/error.hpp"
#include "idealmatch/matchers.hpp"
#include "idealmatch/random.hpp"
#include "idealmatch/single_word.hpp"
#include "idealmatch/witnesses.hpp"
#include "oracles.hpp"

using namespace idealmatch;

namespace {

Dfa pattern(Family f, int m) { return witness({f, Role::Pattern, m, 0}); }
Dfa text(Family f, int m, int n) { return witness({f, Role::Text, m, n}); }

}  // namespace

TEST_CASE("mode tokens and ideal kinds") {
    for (auto mode : kAllMatchModes) {
        CHECK(parse_match_mode(to_string(mode)) == mode);
        CHECK(match_mode(ideal_kind(mode)) == mode);
    }
    CHECK(ideal_kind(MatchMode::Subsequence) == IdealKind::AllSided);
    CHECK(ideal_kind(MatchMode::Suffix) == IdealKind::Left);
    CHECK_THROWS_AS((void)parse_match_mode("infix"), input_error);
}

TEST_CASE("witness pairs meet their bounds") {
    CHECK(match_language(MatchMode::Prefix, pattern(Family::PrefixGeneral, 4),
                         text(Family::PrefixGeneral, 4, 4))
              .state_count() == 16);
    CHECK(match_language(MatchMode::Suffix, pattern(Family::SuffixGeneral, 3),
                         text(Family::SuffixGeneral, 3, 3))
              .state_count() == 12);
    CHECK(match_language(MatchMode::Subsequence, pattern(Family::SubsequenceGeneral, 4),
                         text(Family::SubsequenceGeneral, 4, 3))
              .state_count() == 15);
}

TEST_CASE("empty pattern language") {
    const auto t = text(Family::FactorGeneral, 3, 4);
    const auto d = match_language(MatchMode::Factor, empty_language(t.alphabet()), t);
    CHECK(d.state_count() == 1);
    CHECK(d.finals().empty());
}

TEST_CASE("match_language agrees with brute force") {
    Rng rng(41);
    for (int i = 0; i < 80; ++i) {
        const auto alphabet = letters_alphabet(1 + i % 3);
        const auto p = random_dfa(rng, alphabet, 1 + i % 5);
        const auto t = random_dfa(rng, alphabet, 1 + (i / 3) % 4);
        for (auto mode : kAllMatchModes) {
            const auto diag = match_language_diagnostic(mode, p, t);
            REQUIRE(diag.minimal == match_language(mode, p, t));
            REQUIRE(diag.reachable_product_states >= diag.minimal.state_count());
            REQUIRE(oracle::first_disagreement(
                        diag.minimal,
                        [&](const Word& w) { return oracle::in_match(mode, p, t, w); }, 6)
                        .empty());
        }
    }
}

TEST_CASE("classify_word") {
    const auto xy = Alphabet::from_chars("abxy");
    const auto ab_word = word_dfa(PatternWord(xy, "ab"));
    CHECK(classify_word(MatchMode::Factor, ab_word, xy.parse_word("xaby")));
    CHECK_FALSE(classify_word(MatchMode::Prefix, ab_word, xy.parse_word("xaby")));
    CHECK_FALSE(classify_word(MatchMode::Suffix, ab_word, xy.parse_word("xaby")));
    CHECK(classify_word(MatchMode::Subsequence, ab_word, xy.parse_word("xaxyb")));

    SUBCASE("subsequence of abc over four letters") {
        const auto abcd = Alphabet::from_chars("abcd");
        const PatternWord w(abcd, "abc");
        const auto p = word_dfa(w);
        for (const auto& t : oracle::all_words(4, 6)) {
            REQUIRE(classify_word(MatchMode::Subsequence, p, t) ==
                    oracle::is_subsequence(w.letters(), t));
        }
    }
    SUBCASE("words of G_m lie in the left ideal of the suffix witness") {
        Rng rng(6);
        for (int m = 2; m <= 6; ++m) {
            const auto p = pattern(Family::SuffixGeneral, m);
            for (int k = 0; k < 20; ++k) {
                // b Σ^{m-2} (a Σ^{m-2})^j
                Word g{1};
                auto fill = random_word(rng, 2, static_cast<std::size_t>(m - 2));
                g.insert(g.end(), fill.begin(), fill.end());
                for (int j = 0; j < k % 4; ++j) {
                    g.push_back(0);
                    fill = random_word(rng, 2, static_cast<std::size_t>(m - 2));
                    g.insert(g.end(), fill.begin(), fill.end());
                }
                CHECK(classify_word(MatchMode::Suffix, p, g));
            }
        }
    }
}
