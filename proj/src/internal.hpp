#pragma once

#include "idealmatch/dfa.hpp"

namespace idealmatch::detail {

void require_same_alphabet(const Alphabet& a1, const Alphabet& a2, const char* operation);

/// Quotient of an accessible DFA by Myhill-Nerode equivalence, computed by
/// Hopcroft's partition refinement. Numbering of the result is arbitrary.
Dfa hopcroft_quotient(const Dfa& accessible);

}  // namespace idealmatch::detail
