#pragma once

#include <string>
#include <string_view>

#include "idealmatch/dfa.hpp"

namespace idealmatch {

/// Closure of a language under appending (Right: LΣ*), prepending
/// (Left: Σ*L), both (TwoSided: Σ*LΣ*), or arbitrary letter insertion
/// (AllSided: Σ*⧢L).
enum class IdealKind { Right, Left, TwoSided, AllSided };

inline constexpr IdealKind kAllIdealKinds[] = {IdealKind::Right, IdealKind::Left,
                                               IdealKind::TwoSided, IdealKind::AllSided};

/// Tokens `right|left|two_sided|all_sided`.
[[nodiscard]] std::string_view to_string(IdealKind kind);
[[nodiscard]] IdealKind parse_ideal_kind(std::string_view token);

/// The NFA for the ideal generated by L(p) before determinization.
///   Right:    final states also loop on every letter.
///   Left:     the initial state also loops on every letter.
///   TwoSided: both.
///   AllSided: every state may stay put on every letter, q -σ-> {q, δ(q,σ)}.
[[nodiscard]] Nfa ideal_nfa(IdealKind kind, const Dfa& p);

/// Minimal complete DFA of the ideal of the given kind generated by L(p).
[[nodiscard]] Dfa ideal(IdealKind kind, const Dfa& p);

/// Interleavings L(d1) ⧢ L(d2), as a minimal DFA. Built from an NFA on
/// reachable state pairs in which each letter advances exactly one side.
[[nodiscard]] Dfa shuffle(const Dfa& d1, const Dfa& d2);

}  // namespace idealmatch
