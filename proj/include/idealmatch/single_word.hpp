#pragma once

#include <vector>

#include "idealmatch/dfa.hpp"
#include "idealmatch/matchers.hpp"

namespace idealmatch {

/// A non-empty pattern word w = a_1...a_{m-2} over a fixed alphabet. Its
/// prefixes w_0 = ε, ..., w_{m-2} = w are the states of every automaton
/// built in this module, with w_i numbered i.
class PatternWord {
public:
    PatternWord(Alphabet alphabet, Word letters);
    PatternWord(const Alphabet& alphabet, std::string_view text);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] const Word& letters() const noexcept { return letters_; }
    [[nodiscard]] std::size_t length() const noexcept { return letters_.size(); }
    /// State complexity of {w}: |w| + 2.
    [[nodiscard]] std::size_t m() const noexcept { return letters_.size() + 2; }
    /// The letter a_i, 1-based.
    [[nodiscard]] Letter letter(std::size_t i) const { return letters_.at(i - 1); }

private:
    Alphabet alphabet_;
    Word letters_;
};

/// Border table: f(i) is the length of the longest suffix of w_i that is a
/// proper prefix of w_i, for 1 <= i <= |w|. Always f(i) < i.
class BridgeTable {
public:
    explicit BridgeTable(std::vector<std::size_t> values) : values_(std::move(values)) {}

    [[nodiscard]] std::size_t f(std::size_t i) const { return values_.at(i - 1); }
    [[nodiscard]] const std::vector<std::size_t>& values() const noexcept { return values_; }

    bool operator==(const BridgeTable&) const = default;

private:
    std::vector<std::size_t> values_;
};

/// Minimal complete DFA of {w}: the prefix chain plus a sink, |w| + 2 states.
[[nodiscard]] Dfa word_dfa(const PatternWord& w);

[[nodiscard]] BridgeTable bridge_table(const PatternWord& w);

/// Dedicated automata for the ideals of {w}:
///   Prefix:      wΣ*, m states (chain, absorbing w-state, sink).
///   Suffix:      Σ*w, m-1 states; w_i on a goes to the longest suffix of
///                w_i·a that is a prefix of w, computed from the border table.
///   Factor:      Σ*wΣ*, as Suffix but the w-state is absorbing.
///   Subsequence: Σ*⧢w, m-1 states; w_i advances on a_{i+1}, stays otherwise.
[[nodiscard]] Dfa single_word_automaton(MatchMode mode, const PatternWord& w);

/// Minimal DFA of (mode-ideal of {w}) ∩ L(t). The prefix mode grafts the
/// chain for w onto t at δ_t(q0, w); the other modes take the product with
/// single_word_automaton.
[[nodiscard]] Dfa match_single_word(MatchMode mode, const PatternWord& w, const Dfa& t);

}  // namespace idealmatch
