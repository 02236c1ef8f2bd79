#pragma once

#include <optional>
#include <span>
#include <vector>

#include "idealmatch/alphabet.hpp"
#include "idealmatch/transformation.hpp"

namespace idealmatch {

/// Complete deterministic automaton with a dense transition table.
///
/// Immutable once built; the constructor validates that the table is total
/// and every index is in range.
class Dfa {
public:
    /// `delta` is row-major: delta[q * |alphabet| + letter].
    Dfa(Alphabet alphabet, std::size_t state_count, State initial, std::span<const State> finals,
        std::vector<State> delta);

    /// Builds the table from one transformation per letter, in alphabet order.
    static Dfa from_transformations(Alphabet alphabet, State initial,
                                    std::span<const State> finals,
                                    std::span<const Transformation> letters);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t state_count() const noexcept { return state_count_; }
    [[nodiscard]] std::size_t letter_count() const noexcept { return alphabet_.size(); }
    [[nodiscard]] State initial() const noexcept { return initial_; }
    [[nodiscard]] bool is_final(State q) const { return finals_.at(q); }
    [[nodiscard]] std::vector<State> finals() const;
    [[nodiscard]] State next(State q, Letter a) const { return delta_[q * letter_count() + a]; }
    [[nodiscard]] State run(State q, const Word& w) const;
    [[nodiscard]] const std::vector<State>& table() const noexcept { return delta_; }

    /// Transformation induced by letter `a` on the state set.
    [[nodiscard]] Transformation transformation(Letter a) const;

    bool operator==(const Dfa&) const = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    State initial_;
    std::vector<bool> finals_;
    std::vector<State> delta_;
};

/// Nondeterministic automaton without epsilon moves and with one initial
/// state. Each (state, letter) cell holds a sorted, duplicate-free set.
class Nfa {
public:
    using StateSet = std::vector<State>;

    Nfa(Alphabet alphabet, std::size_t state_count, State initial, std::span<const State> finals,
        std::vector<StateSet> delta);

    /// The NFA whose cells are the singletons of `d`.
    static Nfa from_dfa(const Dfa& d);

    [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
    [[nodiscard]] std::size_t state_count() const noexcept { return state_count_; }
    [[nodiscard]] std::size_t letter_count() const noexcept { return alphabet_.size(); }
    [[nodiscard]] State initial() const noexcept { return initial_; }
    [[nodiscard]] bool is_final(State q) const { return finals_.at(q); }
    [[nodiscard]] std::vector<State> finals() const;
    [[nodiscard]] const StateSet& next(State q, Letter a) const {
        return delta_[q * letter_count() + a];
    }

    /// Subset simulation; throws input_error for out-of-alphabet letters.
    [[nodiscard]] bool accepts(const Word& w) const;

    bool operator==(const Nfa&) const = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_;
    State initial_;
    std::vector<bool> finals_;
    std::vector<StateSet> delta_;
};

/// A transition table that may have missing entries; `complete` turns it
/// into a Dfa by routing the gaps to a fresh sink.
struct PartialDfa {
    Alphabet alphabet;
    std::size_t state_count = 0;
    State initial = 0;
    std::vector<State> finals;
    std::vector<std::optional<State>> delta;  // row-major, like Dfa
};

}  // namespace idealmatch
