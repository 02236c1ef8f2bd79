#pragma once

#include <random>

#include "idealmatch/dfa.hpp"

namespace idealmatch {

using Rng = std::mt19937_64;

/// Uniform transformation per letter and a uniform non-empty final set;
/// initial state 0.
[[nodiscard]] Dfa random_dfa(Rng& rng, const Alphabet& alphabet, std::size_t states);

/// Each (state, letter, target) triple present independently with
/// probability `density`; initial state 0; arbitrary final set.
[[nodiscard]] Nfa random_nfa(Rng& rng, const Alphabet& alphabet, std::size_t states,
                             double density = 0.3);

[[nodiscard]] Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t length);

/// Alphabet of the first `size` lowercase letters.
[[nodiscard]] Alphabet letters_alphabet(std::size_t size);

}  // namespace idealmatch
