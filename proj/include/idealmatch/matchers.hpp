#pragma once

#include <string_view>

#include "idealmatch/ideals.hpp"

namespace idealmatch {

/// Where a pattern occurrence must sit inside a text.
enum class MatchMode { Prefix, Suffix, Factor, Subsequence };

inline constexpr MatchMode kAllMatchModes[] = {MatchMode::Prefix, MatchMode::Suffix,
                                               MatchMode::Factor, MatchMode::Subsequence};

/// Tokens `prefix|suffix|factor|subsequence`.
[[nodiscard]] std::string_view to_string(MatchMode mode);
[[nodiscard]] MatchMode parse_match_mode(std::string_view token);

/// Prefix -> Right, Suffix -> Left, Factor -> TwoSided, Subsequence -> AllSided.
[[nodiscard]] IdealKind ideal_kind(MatchMode mode);
[[nodiscard]] MatchMode match_mode(IdealKind kind);

/// Minimal DFA of ideal(mode, L(p)) ∩ L(t): the words of t that contain a
/// word of p in the position the mode asks for.
[[nodiscard]] Dfa match_language(MatchMode mode, const Dfa& p, const Dfa& t);

struct MatchDiagnostic {
    Dfa minimal;
    /// Reachable states of the product of the minimal ideal DFA with t.
    std::size_t reachable_product_states;
};

/// match_language plus the size of the product before minimization.
[[nodiscard]] MatchDiagnostic match_language_diagnostic(MatchMode mode, const Dfa& p, const Dfa& t);

/// Whether `text` lies in the ideal of L(p) for this mode.
[[nodiscard]] bool classify_word(MatchMode mode, const Dfa& p, const Word& text);

}  // namespace idealmatch
