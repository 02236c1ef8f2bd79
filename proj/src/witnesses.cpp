#include "idealmatch/witnesses.hpp"

#include <array>
#include <string>

#include "idealmatch/error.hpp"

namespace idealmatch {

namespace {

constexpr std::array<std::string_view, 9> kFamilyTokens = {
    "prefix_general", "suffix_general", "factor_general", "subsequence_general", "word_prefix",
    "word_suffix",    "word_factor",    "word_subsequence", "unary",
};

using T = Transformation;

Alphabet binary() { return Alphabet{"a", "b"}; }

// a1 .. a_{m-2}, b
Alphabet subsequence_alphabet(int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= m - 2; ++i) {
        names.push_back("a" + std::to_string(i));
    }
    names.emplace_back("b");
    return Alphabet(std::move(names));
}

void require_at_least(Family family, const char* which, int value, int minimum) {
    if (value < minimum) {
        throw input_error(std::string(to_string(family)) + ": " + which + " = " +
                          std::to_string(value) + " is below the family minimum " +
                          std::to_string(minimum));
    }
}

Dfa dfa(Alphabet alphabet, std::initializer_list<State> finals, std::initializer_list<T> letters) {
    std::vector<State> f(finals);
    std::vector<T> l(letters);
    return Dfa::from_transformations(std::move(alphabet), 0, f, l);
}

// Cycle (0,...,n-1) under the first letter; the second acts as given.
Dfa cyclic_text(std::size_t n, const T& second, std::vector<State> finals) {
    std::vector<T> letters{T::cycle_range(n, 0, static_cast<State>(n - 1)), second};
    return Dfa::from_transformations(binary(), 0, finals, letters);
}

std::vector<State> all_but_last(std::size_t n) {
    std::vector<State> out;
    for (State q = 0; q + 1 < n; ++q) {
        out.push_back(q);
    }
    return out;
}

Dfa pattern(Family family, int m) {
    const auto sm = static_cast<std::size_t>(m);
    const auto last = static_cast<State>(m - 1);
    switch (family) {
        case Family::PrefixGeneral:
            // a: 1, b: (0,...,m-1), final m-1.
            return dfa(binary(), {last}, {T::identity(sm), T::cycle_range(sm, 0, last)});
        case Family::SuffixGeneral:
            // a: (1,...,m-1), b: (0,...,m-1), final m-1.
            return dfa(binary(), {last}, {T::cycle_range(sm, 1, last), T::cycle_range(sm, 0, last)});
        case Family::FactorGeneral:
            // a: (1,...,m-2), b: (0,...,m-1), final m-1. The edge list
            // 0-b->1, i-a,b->i+1, (m-2)-a->1, (m-2)-b->(m-1), (m-1)-a->(m-1),
            // (m-1)-b->0 is exactly this pair of cycles.
            return dfa(binary(), {last},
                       {T::cycle_range(sm, 1, last - 1), T::cycle_range(sm, 0, last)});
        case Family::SubsequenceGeneral: {
            // a_i: (i -> m-1)(0 -> i), b: 1, final m-1.
            std::vector<T> letters;
            for (int i = 1; i <= m - 2; ++i) {
                const auto qi = static_cast<State>(i);
                letters.push_back(T::point(sm, qi, last).then(T::point(sm, 0, qi)));
            }
            letters.push_back(T::identity(sm));
            const State finals[] = {last};
            return Dfa::from_transformations(subsequence_alphabet(m), 0, finals, letters);
        }
        case Family::WordPrefix:
        case Family::WordSuffix:
        case Family::WordFactor:
        case Family::WordSubsequence:
        case Family::Unary:
            return word_dfa(witness_word(family, m));
    }
    throw input_error("unknown family");
}

Dfa text(Family family, int m, int n) {
    const auto sn = static_cast<std::size_t>(n);
    const auto last = static_cast<State>(n - 1);
    switch (family) {
        case Family::PrefixGeneral:
            return cyclic_text(sn, T::identity(sn), {last});
        case Family::SuffixGeneral:
            return cyclic_text(sn, T::cycle_range(sn, 1, last), {last});
        case Family::FactorGeneral:
            return cyclic_text(sn, T::cycle_range(sn, 1, last - 1), {last});
        case Family::SubsequenceGeneral: {
            // a_i: 1, b: (0,...,n-1), final n-1.
            std::vector<T> letters(static_cast<std::size_t>(m - 2), T::identity(sn));
            letters.push_back(T::cycle_range(sn, 0, last));
            const State finals[] = {last};
            return Dfa::from_transformations(subsequence_alphabet(m), 0, finals, letters);
        }
        case Family::WordPrefix:
        case Family::Unary: {
            // a: (0,...,n-1); final r-1 where r = δ(0, a^{m-2}).
            const auto r = static_cast<State>((m - 2) % n);
            const auto final_state = static_cast<State>((r + sn - 1) % sn);
            if (family == Family::Unary) {
                return dfa(Alphabet{"a"}, {final_state}, {T::cycle_range(sn, 0, last)});
            }
            return cyclic_text(sn, T::identity(sn), {final_state});
        }
        case Family::WordSuffix:
        case Family::WordFactor:
        case Family::WordSubsequence:
            // a: (0,...,n-1), b: 1, finals {0,...,n-2}.
            return cyclic_text(sn, T::identity(sn), all_but_last(sn));
    }
    throw input_error("unknown family");
}

}  // namespace

std::string_view to_string(Family family) { return kFamilyTokens[static_cast<std::size_t>(family)]; }

Family parse_family(std::string_view token) {
    for (std::size_t i = 0; i < kFamilyTokens.size(); ++i) {
        if (kFamilyTokens[i] == token) {
            return static_cast<Family>(i);
        }
    }
    throw input_error("unknown family '" + std::string(token) + "'");
}

std::string_view to_string(Role role) { return role == Role::Pattern ? "pattern" : "text"; }

Role parse_role(std::string_view token) {
    if (token == "pattern") {
        return Role::Pattern;
    }
    if (token == "text") {
        return Role::Text;
    }
    throw input_error("unknown role '" + std::string(token) + "' (expected pattern|text)");
}

MatchMode family_mode(Family family) {
    switch (family) {
        case Family::PrefixGeneral:
        case Family::WordPrefix:
        case Family::Unary:
            return MatchMode::Prefix;
        case Family::SuffixGeneral:
        case Family::WordSuffix:
            return MatchMode::Suffix;
        case Family::FactorGeneral:
        case Family::WordFactor:
            return MatchMode::Factor;
        case Family::SubsequenceGeneral:
        case Family::WordSubsequence:
            return MatchMode::Subsequence;
    }
    throw input_error("unknown family");
}

bool is_single_word(Family family) {
    return family == Family::WordPrefix || family == Family::WordSuffix ||
           family == Family::WordFactor || family == Family::WordSubsequence ||
           family == Family::Unary;
}

FamilyMinimum family_minimum(Family family) {
    switch (family) {
        case Family::PrefixGeneral:
            return {1, 1};
        case Family::SuffixGeneral:
            return {2, 2};
        case Family::FactorGeneral:
        case Family::SubsequenceGeneral:
            return {3, 3};
        default:
            return {3, 2};
    }
}

bool text_depends_on_m(Family family) {
    return family == Family::SubsequenceGeneral || family == Family::WordPrefix ||
           family == Family::Unary;
}

Dfa witness(const WitnessSpec& spec) {
    const auto minimum = family_minimum(spec.family);
    if (spec.role == Role::Pattern) {
        require_at_least(spec.family, "m", spec.m, minimum.m);
        return pattern(spec.family, spec.m);
    }
    require_at_least(spec.family, "n", spec.n, minimum.n);
    if (text_depends_on_m(spec.family)) {
        require_at_least(spec.family, "m", spec.m, minimum.m);
    }
    return text(spec.family, spec.m, spec.n);
}

PatternWord witness_word(Family family, int m) {
    if (!is_single_word(family)) {
        throw input_error(std::string(to_string(family)) + " has no pattern word");
    }
    require_at_least(family, "m", m, family_minimum(family).m);
    const auto len = static_cast<std::size_t>(m - 2);
    if (family == Family::Unary) {
        return PatternWord(Alphabet{"a"}, Word(len, 0));
    }
    return PatternWord(binary(), Word(len, 1));
}

Dfa bm_dfa(int m) {
    if (m < 2) {
        throw input_error("bm_dfa: m = " + std::to_string(m) + " is below the minimum 2");
    }
    const std::size_t width = static_cast<std::size_t>(m - 1);
    const std::size_t count = std::size_t{1} << width;
    const std::size_t mask = count - 1;
    std::vector<State> delta;
    std::vector<State> finals;
    for (std::size_t x = 0; x < count; ++x) {
        const std::size_t x1 = x >> (width - 1);
        delta.push_back(static_cast<State>(((x << 1) | x1) & mask));  // a
        delta.push_back(static_cast<State>(((x << 1) | 1U) & mask));  // b
        if (x1 == 1) {
            finals.push_back(static_cast<State>(x));
        }
    }
    return Dfa(binary(), count, 0, finals, std::move(delta));
}

Dfa cm_dfa(int m) {
    if (m < 3) {
        throw input_error("cm_dfa: m = " + std::to_string(m) + " is below the minimum 3");
    }
    const std::size_t width = static_cast<std::size_t>(m - 2);
    const std::size_t count = std::size_t{1} << width;
    const std::size_t mask = count - 1;
    const auto f = static_cast<State>(count);
    std::vector<State> delta;
    for (std::size_t x = 0; x < count; ++x) {
        const std::size_t x1 = x >> (width - 1);
        delta.push_back(static_cast<State>(((x << 1) | x1) & mask));
        delta.push_back(x1 == 1 ? f : static_cast<State>(((x << 1) | 1U) & mask));
    }
    delta.push_back(f);
    delta.push_back(f);
    const State finals[] = {f};
    return Dfa(binary(), count + 1, 0, finals, std::move(delta));
}

}  // namespace idealmatch
