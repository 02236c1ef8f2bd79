#include "idealmatch/ideals.hpp"

#include <array>

#include "idealmatch/automata.hpp"
#include "idealmatch/error.hpp"
#include "internal.hpp"

namespace idealmatch {

namespace {

constexpr std::array<std::string_view, 4> kTokens = {"right", "left", "two_sided", "all_sided"};

}  // namespace

std::string_view to_string(IdealKind kind) { return kTokens[static_cast<std::size_t>(kind)]; }

IdealKind parse_ideal_kind(std::string_view token) {
    for (std::size_t i = 0; i < kTokens.size(); ++i) {
        if (kTokens[i] == token) {
            return static_cast<IdealKind>(i);
        }
    }
    throw input_error("unknown ideal kind '" + std::string(token) +
                      "' (expected right|left|two_sided|all_sided)");
}

Nfa ideal_nfa(IdealKind kind, const Dfa& p) {
    const std::size_t k = p.letter_count();
    std::vector<Nfa::StateSet> delta;
    delta.reserve(p.state_count() * k);
    const bool loop_finals = kind == IdealKind::Right || kind == IdealKind::TwoSided;
    const bool loop_initial = kind == IdealKind::Left || kind == IdealKind::TwoSided;
    for (State q = 0; q < p.state_count(); ++q) {
        const bool stay = kind == IdealKind::AllSided || (loop_finals && p.is_final(q)) ||
                          (loop_initial && q == p.initial());
        for (Letter a = 0; a < k; ++a) {
            Nfa::StateSet cell{p.next(q, a)};
            if (stay) {
                cell.push_back(q);
            }
            delta.push_back(std::move(cell));
        }
    }
    auto finals = p.finals();
    return Nfa(p.alphabet(), p.state_count(), p.initial(), finals, std::move(delta));
}

Dfa ideal(IdealKind kind, const Dfa& p) { return minimize(determinize(ideal_nfa(kind, p))); }

Dfa shuffle(const Dfa& d1, const Dfa& d2) {
    detail::require_same_alphabet(d1.alphabet(), d2.alphabet(), "shuffle");
    const std::size_t k = d1.letter_count();
    const std::size_t n2 = d2.state_count();
    constexpr State kUnset = static_cast<State>(-1);
    std::vector<State> number(d1.state_count() * n2, kUnset);
    std::vector<std::pair<State, State>> pairs;
    auto id = [&](State p, State q) {
        auto& slot = number[p * n2 + q];
        if (slot == kUnset) {
            slot = static_cast<State>(pairs.size());
            pairs.emplace_back(p, q);
        }
        return slot;
    };
    id(d1.initial(), d2.initial());
    std::vector<Nfa::StateSet> delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
            auto [p, q] = pairs[i];
            delta.push_back({id(d1.next(p, a), q), id(p, d2.next(q, a))});
        }
    }
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (d1.is_final(pairs[i].first) && d2.is_final(pairs[i].second)) {
            finals.push_back(static_cast<State>(i));
        }
    }
    return minimize(determinize(Nfa(d1.alphabet(), pairs.size(), 0, finals, std::move(delta))));
}

}  // namespace idealmatch
