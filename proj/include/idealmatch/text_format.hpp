#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "idealmatch/dfa.hpp"

namespace idealmatch {

// Line-oriented automaton files:
//
//   dfa
//   alphabet: a b
//   states: 3
//   initial: 0
//   finals: 2
//   0 : 1 0
//   1 : 2 0
//   2 : 2 2
//
// NFA files use the header `nfa` and cells written as `{i,j}` or `{}`.
// '#' starts a comment; blank lines are ignored. Malformed input raises
// input_error with the 1-based line number.

[[nodiscard]] Dfa parse_dfa(std::string_view text);
[[nodiscard]] Nfa parse_nfa(std::string_view text);

/// Parses either kind, dispatching on the header line.
[[nodiscard]] std::variant<Dfa, Nfa> parse_automaton(std::string_view text);

[[nodiscard]] std::string serialize_dfa(const Dfa& d);
[[nodiscard]] std::string serialize_nfa(const Nfa& n);

/// Graphviz rendering for visual inspection.
[[nodiscard]] std::string to_dot(const Dfa& d);

}  // namespace idealmatch
