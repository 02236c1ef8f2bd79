#pragma once

#include <cstddef>
#include <vector>

#include "idealmatch/dfa.hpp"

namespace idealmatch {

/// All accepted words up to a length bound, in lexicographic order
/// (letters compared by alphabet position).
struct WordSample {
    std::size_t max_len = 0;
    std::vector<Word> words;

    bool operator==(const WordSample&) const = default;
};

/// Largest max_len accepted by enumerate_language.
inline constexpr std::size_t kMaxEnumerationLength = 16;

[[nodiscard]] bool accepts(const Dfa& d, const Word& w);

/// Subset construction over accessible subsets only. State 0 is the initial
/// subset; the rest are numbered in BFS order with letters taken in alphabet
/// order. The empty subset, when reachable, is the sink.
[[nodiscard]] Dfa determinize(const Nfa& n);

/// Routes missing transitions to a fresh non-final sink with self-loops.
/// A table with no gaps is returned unchanged.
[[nodiscard]] Dfa complete(const PartialDfa& d);

/// Restriction to the states reachable from the initial state, renumbered by
/// BFS from the initial state with letters in alphabet order.
[[nodiscard]] Dfa canonical(const Dfa& d);

/// Minimal complete DFA via Hopcroft partition refinement on the accessible
/// part, returned in canonical numbering. The sink counts as a state.
[[nodiscard]] Dfa minimize(const Dfa& d);

/// Independent Moore/table-filling minimizer, used to cross-check minimize.
[[nodiscard]] Dfa minimize_oracle(const Dfa& d);

/// Direct product over reachable pairs; finals are pairs final in both.
[[nodiscard]] Dfa product_intersection(const Dfa& d1, const Dfa& d2);

/// Language equality by a product search for a pair on which acceptance
/// differs. Does not use minimization.
[[nodiscard]] bool equivalent(const Dfa& d1, const Dfa& d2);

/// True when L(d1) is contained in L(d2); same product search as equivalent.
[[nodiscard]] bool included(const Dfa& d1, const Dfa& d2);

/// Isomorphism of minimal DFAs by comparing canonical forms. Throws
/// input_error when either operand is not minimal.
[[nodiscard]] bool isomorphic(const Dfa& d1, const Dfa& d2);

/// Brute-force listing of accepted words; max_len must not exceed
/// kMaxEnumerationLength.
[[nodiscard]] WordSample enumerate_language(const Dfa& d, std::size_t max_len);

/// Same listing computed by NFA subset simulation, independent of
/// determinize.
[[nodiscard]] WordSample enumerate_language(const Nfa& n, std::size_t max_len);

/// Renumbers states: state q of `d` becomes permutation[q].
[[nodiscard]] Dfa permute_states(const Dfa& d, const std::vector<State>& permutation);

/// One-state automata for the empty language and for all words.
[[nodiscard]] Dfa empty_language(const Alphabet& alphabet);
[[nodiscard]] Dfa universal_language(const Alphabet& alphabet);

}  // namespace idealmatch
