#include "idealmatch/random.hpp"

#include "idealmatch/error.hpp"

namespace idealmatch {

Dfa random_dfa(Rng& rng, const Alphabet& alphabet, std::size_t states) {
    std::uniform_int_distribution<State> target(0, static_cast<State>(states - 1));
    std::vector<State> delta(states * alphabet.size());
    for (auto& q : delta) {
        q = target(rng);
    }
    // Non-empty final set: a uniform mask in [1, 2^states).
    std::uniform_int_distribution<std::uint64_t> mask_dist(1, (std::uint64_t{1} << states) - 1);
    const auto mask = mask_dist(rng);
    std::vector<State> finals;
    for (State q = 0; q < states; ++q) {
        if ((mask >> q) & 1U) {
            finals.push_back(q);
        }
    }
    return Dfa(alphabet, states, 0, finals, std::move(delta));
}

Nfa random_nfa(Rng& rng, const Alphabet& alphabet, std::size_t states, double density) {
    std::bernoulli_distribution edge(density);
    std::bernoulli_distribution final_coin(0.3);
    std::vector<Nfa::StateSet> delta(states * alphabet.size());
    for (auto& cell : delta) {
        for (State p = 0; p < states; ++p) {
            if (edge(rng)) {
                cell.push_back(p);
            }
        }
    }
    std::vector<State> finals;
    for (State q = 0; q < states; ++q) {
        if (final_coin(rng)) {
            finals.push_back(q);
        }
    }
    return Nfa(alphabet, states, 0, finals, std::move(delta));
}

Word random_word(Rng& rng, std::size_t alphabet_size, std::size_t length) {
    std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(alphabet_size - 1));
    Word w(length);
    for (auto& a : w) {
        a = letter(rng);
    }
    return w;
}

Alphabet letters_alphabet(std::size_t size) {
    if (size == 0 || size > 26) {
        throw input_error("alphabet size must be in 1..26");
    }
    std::string letters;
    for (std::size_t i = 0; i < size; ++i) {
        letters.push_back(static_cast<char>('a' + i));
    }
    return Alphabet::from_chars(letters);
}

}  // namespace idealmatch
