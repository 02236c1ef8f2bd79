#include "idealmatch/single_word.hpp"

#include "idealmatch/automata.hpp"
#include "idealmatch/error.hpp"
#include "internal.hpp"

namespace idealmatch {

PatternWord::PatternWord(Alphabet alphabet, Word letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw input_error("pattern word must be non-empty");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] >= alphabet_.size()) {
            throw input_error("unknown letter index at position " + std::to_string(i));
        }
    }
}

PatternWord::PatternWord(const Alphabet& alphabet, std::string_view text)
    : PatternWord(alphabet, alphabet.parse_word(text)) {}

Dfa word_dfa(const PatternWord& w) {
    const std::size_t k = w.alphabet().size();
    const std::size_t len = w.length();
    PartialDfa chain{w.alphabet(), len + 1, 0, {static_cast<State>(len)}, {}};
    chain.delta.assign((len + 1) * k, std::nullopt);
    for (std::size_t i = 0; i < len; ++i) {
        chain.delta[i * k + w.letter(i + 1)] = static_cast<State>(i + 1);
    }
    return complete(chain);
}

BridgeTable bridge_table(const PatternWord& w) {
    const auto& a = w.letters();
    std::vector<std::size_t> f(a.size(), 0);
    // f[i-1] holds f(i); f(1) = 0.
    for (std::size_t i = 1; i < a.size(); ++i) {
        std::size_t k = f[i - 1];
        while (k > 0 && a[k] != a[i]) {
            k = f[k - 1];
        }
        f[i] = a[k] == a[i] ? k + 1 : 0;
    }
    return BridgeTable(std::move(f));
}

namespace {

// Transitions of the suffix automaton: δ(w_i, a) is the longest suffix of
// w_i·a that is a prefix of w. Rows are filled in order of i, and a row for
// i > 0 falls back on the already-built row of w_{f(i)}.
std::vector<State> suffix_table(const PatternWord& w) {
    const std::size_t k = w.alphabet().size();
    const std::size_t len = w.length();
    const auto border = bridge_table(w);
    std::vector<State> delta((len + 1) * k, 0);
    for (std::size_t i = 0; i <= len; ++i) {
        for (Letter a = 0; a < k; ++a) {
            if (i < len && a == w.letter(i + 1)) {
                delta[i * k + a] = static_cast<State>(i + 1);
            } else if (i > 0) {
                delta[i * k + a] = delta[border.f(i) * k + a];
            }
        }
    }
    return delta;
}

}  // namespace

Dfa single_word_automaton(MatchMode mode, const PatternWord& w) {
    const std::size_t k = w.alphabet().size();
    const std::size_t len = w.length();
    const auto final_state = static_cast<State>(len);
    const State finals[] = {final_state};

    switch (mode) {
        case MatchMode::Prefix: {
            PartialDfa chain{w.alphabet(), len + 1, 0, {final_state}, {}};
            chain.delta.assign((len + 1) * k, std::nullopt);
            for (std::size_t i = 0; i < len; ++i) {
                chain.delta[i * k + w.letter(i + 1)] = static_cast<State>(i + 1);
            }
            for (Letter a = 0; a < k; ++a) {
                chain.delta[len * k + a] = final_state;
            }
            return complete(chain);
        }
        case MatchMode::Suffix:
            return Dfa(w.alphabet(), len + 1, 0, finals, suffix_table(w));
        case MatchMode::Factor: {
            auto delta = suffix_table(w);
            for (Letter a = 0; a < k; ++a) {
                delta[len * k + a] = final_state;
            }
            return Dfa(w.alphabet(), len + 1, 0, finals, std::move(delta));
        }
        case MatchMode::Subsequence: {
            std::vector<State> delta((len + 1) * k);
            for (std::size_t i = 0; i <= len; ++i) {
                for (Letter a = 0; a < k; ++a) {
                    const bool advance = i < len && a == w.letter(i + 1);
                    delta[i * k + a] = static_cast<State>(advance ? i + 1 : i);
                }
            }
            return Dfa(w.alphabet(), len + 1, 0, finals, std::move(delta));
        }
    }
    throw input_error("unknown match mode");
}

namespace {

// The chain w_0 .. w_{|w|-1} is grafted onto t: the last chain letter leads
// to q_r = δ_t(q0, w), every other deviation to a sink. T keeps its numbering.
Dfa fused_prefix(const PatternWord& w, const Dfa& t) {
    const std::size_t k = t.letter_count();
    const std::size_t n = t.state_count();
    const std::size_t len = w.length();
    const auto chain = [&](std::size_t i) { return static_cast<State>(n + i); };
    const auto sink = static_cast<State>(n + len);
    const State q_r = t.run(t.initial(), w.letters());

    std::vector<State> delta(t.table());
    delta.resize((n + len + 1) * k, sink);
    for (std::size_t i = 0; i < len; ++i) {
        const State target = i + 1 < len ? chain(i + 1) : q_r;
        delta[chain(i) * k + w.letter(i + 1)] = target;
    }
    auto finals = t.finals();
    return Dfa(t.alphabet(), n + len + 1, chain(0), finals, std::move(delta));
}

}  // namespace

Dfa match_single_word(MatchMode mode, const PatternWord& w, const Dfa& t) {
    detail::require_same_alphabet(w.alphabet(), t.alphabet(), "match");
    if (mode == MatchMode::Prefix) {
        return minimize(fused_prefix(w, t));
    }
    return minimize(product_intersection(single_word_automaton(mode, w), t));
}

}  // namespace idealmatch
