#pragma once

#include <string_view>

#include "idealmatch/dfa.hpp"
#include "idealmatch/matchers.hpp"
#include "idealmatch/single_word.hpp"

namespace idealmatch {

/// Witness families: the general pattern-language cases, the single-word
/// cases (pattern w = b^{m-2}) and the unary case (pattern a^{m-2}).
enum class Family {
    PrefixGeneral,
    SuffixGeneral,
    FactorGeneral,
    SubsequenceGeneral,
    WordPrefix,
    WordSuffix,
    WordFactor,
    WordSubsequence,
    Unary,
};

inline constexpr Family kAllFamilies[] = {
    Family::PrefixGeneral, Family::SuffixGeneral,  Family::FactorGeneral,
    Family::SubsequenceGeneral, Family::WordPrefix, Family::WordSuffix,
    Family::WordFactor,    Family::WordSubsequence, Family::Unary,
};

enum class Role { Pattern, Text };

/// Tokens: prefix_general, suffix_general, factor_general,
/// subsequence_general, word_prefix, word_suffix, word_factor,
/// word_subsequence, unary.
[[nodiscard]] std::string_view to_string(Family family);
[[nodiscard]] Family parse_family(std::string_view token);
[[nodiscard]] std::string_view to_string(Role role);
[[nodiscard]] Role parse_role(std::string_view token);

/// The match mode a family exercises; Unary maps to Prefix.
[[nodiscard]] MatchMode family_mode(Family family);
[[nodiscard]] bool is_single_word(Family family);

/// Smallest admissible m and n for a family.
struct FamilyMinimum {
    int m;
    int n;
};
[[nodiscard]] FamilyMinimum family_minimum(Family family);

struct WitnessSpec {
    Family family;
    Role role;
    int m = 0;  ///< pattern complexity; also needed by texts that depend on it
    int n = 0;  ///< text complexity
};

/// Whether the text witness of a family depends on m (its alphabet or its
/// final state do).
[[nodiscard]] bool text_depends_on_m(Family family);

/// The witness DFA, numbered as in the defining transformations.
[[nodiscard]] Dfa witness(const WitnessSpec& spec);

/// Pattern word of a single-word or unary family: b^{m-2} over {a,b}, or
/// a^{m-2} over {a}.
[[nodiscard]] PatternWord witness_word(Family family, int m);

/// Subset automaton for Σ*P_m(b,a): states are binary (m-1)-tuples numbered
/// by their binary value (x_1 most significant). a rotates the tuple left,
/// b shifts left and loads a 1; finals are the tuples with x_1 = 1.
[[nodiscard]] Dfa bm_dfa(int m);

/// Subset automaton for Σ*P_m(b,a)Σ*: binary (m-2)-tuples plus an absorbing
/// final state f = 2^{m-2}. b on a tuple with x_1 = 1 goes to f.
[[nodiscard]] Dfa cm_dfa(int m);

}  // namespace idealmatch
