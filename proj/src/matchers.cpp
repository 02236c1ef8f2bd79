#include "idealmatch/matchers.hpp"

#include <array>

#include "idealmatch/automata.hpp"
#include "idealmatch/error.hpp"
#include "internal.hpp"

namespace idealmatch {

namespace {

constexpr std::array<std::string_view, 4> kTokens = {"prefix", "suffix", "factor", "subsequence"};

}  // namespace

std::string_view to_string(MatchMode mode) { return kTokens[static_cast<std::size_t>(mode)]; }

MatchMode parse_match_mode(std::string_view token) {
    for (std::size_t i = 0; i < kTokens.size(); ++i) {
        if (kTokens[i] == token) {
            return static_cast<MatchMode>(i);
        }
    }
    throw input_error("unknown match mode '" + std::string(token) +
                      "' (expected prefix|suffix|factor|subsequence)");
}

// The two enums list their members in corresponding order.
IdealKind ideal_kind(MatchMode mode) { return static_cast<IdealKind>(mode); }
MatchMode match_mode(IdealKind kind) { return static_cast<MatchMode>(kind); }

MatchDiagnostic match_language_diagnostic(MatchMode mode, const Dfa& p, const Dfa& t) {
    detail::require_same_alphabet(p.alphabet(), t.alphabet(), "match");
    auto product = product_intersection(ideal(ideal_kind(mode), p), t);
    const auto reachable = product.state_count();
    return {minimize(product), reachable};
}

Dfa match_language(MatchMode mode, const Dfa& p, const Dfa& t) {
    return match_language_diagnostic(mode, p, t).minimal;
}

bool classify_word(MatchMode mode, const Dfa& p, const Word& text) {
    return accepts(ideal(ideal_kind(mode), p), text);
}

}  // namespace idealmatch
