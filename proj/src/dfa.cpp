#include "idealmatch/dfa.hpp"

#include <algorithm>
#include <string>

#include "idealmatch/error.hpp"

namespace idealmatch {

namespace {

std::vector<bool> finals_mask(std::size_t state_count, std::span<const State> finals) {
    std::vector<bool> mask(state_count, false);
    for (State f : finals) {
        if (f >= state_count) {
            throw input_error("state " + std::to_string(f) + " out of range");
        }
        mask[f] = true;
    }
    return mask;
}

std::vector<State> mask_to_list(const std::vector<bool>& mask) {
    std::vector<State> out;
    for (std::size_t q = 0; q < mask.size(); ++q) {
        if (mask[q]) {
            out.push_back(static_cast<State>(q));
        }
    }
    return out;
}

void check_letter(const Alphabet& alphabet, Letter a, std::size_t position) {
    if (a >= alphabet.size()) {
        throw input_error("unknown letter index " + std::to_string(a) + " at position " +
                          std::to_string(position));
    }
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State initial, std::span<const State> finals,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      finals_(finals_mask(state_count, finals)),
      delta_(std::move(delta)) {
    if (state_count_ == 0) {
        throw input_error("a DFA needs at least one state");
    }
    if (initial_ >= state_count_) {
        throw input_error("state " + std::to_string(initial_) + " out of range");
    }
    if (delta_.size() != state_count_ * alphabet_.size()) {
        throw input_error("transition table has " + std::to_string(delta_.size()) +
                          " entries, expected " + std::to_string(state_count_ * alphabet_.size()));
    }
    for (State q : delta_) {
        if (q >= state_count_) {
            throw input_error("state " + std::to_string(q) + " out of range");
        }
    }
}

Dfa Dfa::from_transformations(Alphabet alphabet, State initial, std::span<const State> finals,
                              std::span<const Transformation> letters) {
    if (letters.size() != alphabet.size()) {
        throw input_error("need one transformation per letter");
    }
    const std::size_t n = letters.front().size();
    std::vector<State> delta(n * letters.size());
    for (std::size_t a = 0; a < letters.size(); ++a) {
        if (letters[a].size() != n) {
            throw input_error("letter transformations act on different state sets");
        }
        for (State q = 0; q < n; ++q) {
            delta[q * letters.size() + a] = letters[a](q);
        }
    }
    return Dfa(std::move(alphabet), n, initial, finals, std::move(delta));
}

std::vector<State> Dfa::finals() const { return mask_to_list(finals_); }

State Dfa::run(State q, const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
        check_letter(alphabet_, w[i], i);
        q = next(q, w[i]);
    }
    return q;
}

Transformation Dfa::transformation(Letter a) const {
    std::vector<State> image(state_count_);
    for (State q = 0; q < state_count_; ++q) {
        image[q] = next(q, a);
    }
    return Transformation(std::move(image));
}

Nfa::Nfa(Alphabet alphabet, std::size_t state_count, State initial, std::span<const State> finals,
         std::vector<StateSet> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      finals_(finals_mask(state_count, finals)),
      delta_(std::move(delta)) {
    if (state_count_ == 0) {
        throw input_error("an NFA needs at least one state");
    }
    if (initial_ >= state_count_) {
        throw input_error("state " + std::to_string(initial_) + " out of range");
    }
    if (delta_.size() != state_count_ * alphabet_.size()) {
        throw input_error("transition relation has wrong shape");
    }
    for (auto& cell : delta_) {
        std::sort(cell.begin(), cell.end());
        cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
        if (!cell.empty() && cell.back() >= state_count_) {
            throw input_error("state " + std::to_string(cell.back()) + " out of range");
        }
    }
}

Nfa Nfa::from_dfa(const Dfa& d) {
    std::vector<StateSet> delta;
    delta.reserve(d.table().size());
    for (State q : d.table()) {
        delta.push_back({q});
    }
    auto finals = d.finals();
    return Nfa(d.alphabet(), d.state_count(), d.initial(), finals, std::move(delta));
}

std::vector<State> Nfa::finals() const { return mask_to_list(finals_); }

bool Nfa::accepts(const Word& w) const {
    std::vector<bool> current(state_count_, false);
    current[initial_] = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
        check_letter(alphabet_, w[i], i);
        std::vector<bool> next_set(state_count_, false);
        for (State q = 0; q < state_count_; ++q) {
            if (current[q]) {
                for (State p : next(q, w[i])) {
                    next_set[p] = true;
                }
            }
        }
        current = std::move(next_set);
    }
    for (State q = 0; q < state_count_; ++q) {
        if (current[q] && finals_[q]) {
            return true;
        }
    }
    return false;
}

}  // namespace idealmatch
