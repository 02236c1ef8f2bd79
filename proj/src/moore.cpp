// Table-filling minimizer. Kept free of any code shared with the Hopcroft
// path so the two can check each other.

#include <vector>

#include "idealmatch/automata.hpp"

namespace idealmatch {

Dfa minimize_oracle(const Dfa& d) {
    const std::size_t k = d.letter_count();

    std::vector<bool> reachable(d.state_count(), false);
    std::vector<State> stack{d.initial()};
    reachable[d.initial()] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (Letter a = 0; a < k; ++a) {
            State p = d.next(q, a);
            if (!reachable[p]) {
                reachable[p] = true;
                stack.push_back(p);
            }
        }
    }
    std::vector<State> live;
    for (State q = 0; q < d.state_count(); ++q) {
        if (reachable[q]) {
            live.push_back(q);
        }
    }

    const std::size_t n = d.state_count();
    std::vector<bool> distinct(n * n, false);
    for (State p : live) {
        for (State q : live) {
            distinct[p * n + q] = d.is_final(p) != d.is_final(q);
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (State p : live) {
            for (State q : live) {
                if (p >= q || distinct[p * n + q]) {
                    continue;
                }
                for (Letter a = 0; a < k; ++a) {
                    if (distinct[d.next(p, a) * n + d.next(q, a)]) {
                        distinct[p * n + q] = distinct[q * n + p] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    // Each class is represented by its smallest member.
    constexpr State kNone = static_cast<State>(-1);
    std::vector<State> class_of(n, kNone);
    std::vector<State> reps;
    for (State p : live) {
        if (class_of[p] != kNone) {
            continue;
        }
        class_of[p] = static_cast<State>(reps.size());
        for (State q : live) {
            if (q > p && !distinct[p * n + q]) {
                class_of[q] = class_of[p];
            }
        }
        reps.push_back(p);
    }

    std::vector<State> delta;
    std::vector<State> finals;
    for (std::size_t c = 0; c < reps.size(); ++c) {
        for (Letter a = 0; a < k; ++a) {
            delta.push_back(class_of[d.next(reps[c], a)]);
        }
        if (d.is_final(reps[c])) {
            finals.push_back(static_cast<State>(c));
        }
    }
    return canonical(Dfa(d.alphabet(), reps.size(), class_of[d.initial()], finals, std::move(delta)));
}

}  // namespace idealmatch
