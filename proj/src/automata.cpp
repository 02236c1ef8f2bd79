#include "idealmatch/automata.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <unordered_map>

#include "idealmatch/error.hpp"
#include "internal.hpp"

namespace idealmatch {

namespace {

constexpr State kUnset = static_cast<State>(-1);

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : b) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

void set_bit(Bits& b, State q) { b[q / 64] |= std::uint64_t{1} << (q % 64); }
bool test_bit(const Bits& b, State q) { return (b[q / 64] >> (q % 64)) & 1U; }

}  // namespace

namespace detail {

void require_same_alphabet(const Alphabet& a1, const Alphabet& a2, const char* operation) {
    if (!(a1 == a2)) {
        throw input_error(std::string(operation) + ": alphabet mismatch");
    }
}

}  // namespace detail

bool accepts(const Dfa& d, const Word& w) { return d.is_final(d.run(d.initial(), w)); }

Dfa determinize(const Nfa& n) {
    const std::size_t k = n.letter_count();
    const std::size_t words = (n.state_count() + 63) / 64;
    std::unordered_map<Bits, State, BitsHash> index;
    std::vector<Bits> subsets;
    std::vector<State> delta;

    Bits start(words, 0);
    set_bit(start, n.initial());
    index.emplace(start, 0);
    subsets.push_back(std::move(start));

    for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (Letter a = 0; a < k; ++a) {
            Bits target(words, 0);
            const Bits& source = subsets[s];
            for (State q = 0; q < n.state_count(); ++q) {
                if (test_bit(source, q)) {
                    for (State p : n.next(q, a)) {
                        set_bit(target, p);
                    }
                }
            }
            auto [it, inserted] = index.emplace(target, static_cast<State>(subsets.size()));
            if (inserted) {
                subsets.push_back(std::move(target));
            }
            delta.push_back(it->second);
        }
    }

    std::vector<State> finals;
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        for (State q = 0; q < n.state_count(); ++q) {
            if (test_bit(subsets[s], q) && n.is_final(q)) {
                finals.push_back(static_cast<State>(s));
                break;
            }
        }
    }
    return Dfa(n.alphabet(), subsets.size(), 0, finals, std::move(delta));
}

Dfa complete(const PartialDfa& d) {
    const std::size_t k = d.alphabet.size();
    if (d.delta.size() != d.state_count * k) {
        throw input_error("partial transition table has wrong shape");
    }
    const bool has_gap = std::any_of(d.delta.begin(), d.delta.end(),
                                     [](const std::optional<State>& s) { return !s.has_value(); });
    const std::size_t total = d.state_count + (has_gap ? 1 : 0);
    const auto sink = static_cast<State>(d.state_count);
    std::vector<State> delta;
    delta.reserve(total * k);
    for (const auto& entry : d.delta) {
        delta.push_back(entry.value_or(sink));
    }
    if (has_gap) {
        delta.insert(delta.end(), k, sink);
    }
    return Dfa(d.alphabet, total, d.initial, d.finals, std::move(delta));
}

Dfa canonical(const Dfa& d) {
    const std::size_t k = d.letter_count();
    std::vector<State> number(d.state_count(), kUnset);
    std::vector<State> order;
    number[d.initial()] = 0;
    order.push_back(d.initial());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
            State p = d.next(order[i], a);
            if (number[p] == kUnset) {
                number[p] = static_cast<State>(order.size());
                order.push_back(p);
            }
        }
    }
    std::vector<State> delta;
    delta.reserve(order.size() * k);
    std::vector<State> finals;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
            delta.push_back(number[d.next(order[i], a)]);
        }
        if (d.is_final(order[i])) {
            finals.push_back(static_cast<State>(i));
        }
    }
    return Dfa(d.alphabet(), order.size(), 0, finals, std::move(delta));
}

Dfa minimize(const Dfa& d) { return canonical(detail::hopcroft_quotient(canonical(d))); }

Dfa product_intersection(const Dfa& d1, const Dfa& d2) {
    detail::require_same_alphabet(d1.alphabet(), d2.alphabet(), "product");
    const std::size_t k = d1.letter_count();
    const std::size_t n2 = d2.state_count();
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
    std::vector<State> delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
            auto [p, q] = pairs[i];
            delta.push_back(id(d1.next(p, a), d2.next(q, a)));
        }
    }
    std::vector<State> finals;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (d1.is_final(pairs[i].first) && d2.is_final(pairs[i].second)) {
            finals.push_back(static_cast<State>(i));
        }
    }
    return Dfa(d1.alphabet(), pairs.size(), 0, finals, std::move(delta));
}

namespace {

// Searches the reachable pairs for one where `bad(final1, final2)` holds.
bool product_search(const Dfa& d1, const Dfa& d2, const char* operation,
                    const std::function<bool(bool, bool)>& bad) {
    detail::require_same_alphabet(d1.alphabet(), d2.alphabet(), operation);
    const std::size_t n2 = d2.state_count();
    std::vector<bool> seen(d1.state_count() * n2, false);
    std::deque<std::pair<State, State>> queue;
    queue.emplace_back(d1.initial(), d2.initial());
    seen[d1.initial() * n2 + d2.initial()] = true;
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        if (bad(d1.is_final(p), d2.is_final(q))) {
            return true;
        }
        for (Letter a = 0; a < d1.letter_count(); ++a) {
            State p2 = d1.next(p, a);
            State q2 = d2.next(q, a);
            if (!seen[p2 * n2 + q2]) {
                seen[p2 * n2 + q2] = true;
                queue.emplace_back(p2, q2);
            }
        }
    }
    return false;
}

}  // namespace

bool equivalent(const Dfa& d1, const Dfa& d2) {
    return !product_search(d1, d2, "equivalent", [](bool f1, bool f2) { return f1 != f2; });
}

bool included(const Dfa& d1, const Dfa& d2) {
    return !product_search(d1, d2, "included", [](bool f1, bool f2) { return f1 && !f2; });
}

bool isomorphic(const Dfa& d1, const Dfa& d2) {
    for (const Dfa* d : {&d1, &d2}) {
        if (minimize(*d).state_count() != d->state_count()) {
            throw input_error("isomorphic: operand is not minimal");
        }
    }
    if (!(d1.alphabet() == d2.alphabet())) {
        return false;
    }
    return canonical(d1) == canonical(d2);
}

WordSample enumerate_language(const Dfa& d, std::size_t max_len) {
    if (max_len > kMaxEnumerationLength) {
        throw input_error("enumerate_language: max_len " + std::to_string(max_len) +
                          " exceeds limit " + std::to_string(kMaxEnumerationLength));
    }
    // Distance to the nearest final state prunes branches that cannot accept.
    const std::size_t n = d.state_count();
    const std::size_t k = d.letter_count();
    constexpr std::size_t kFar = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(n, kFar);
    for (State q = 0; q < n; ++q) {
        if (d.is_final(q)) {
            dist[q] = 0;
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (State q = 0; q < n; ++q) {
            for (Letter a = 0; a < k; ++a) {
                std::size_t via = dist[d.next(q, a)];
                if (via != kFar && via + 1 < dist[q]) {
                    dist[q] = via + 1;
                    changed = true;
                }
            }
        }
    }

    WordSample out{max_len, {}};
    Word current;
    std::function<void(State)> walk = [&](State q) {
        if (d.is_final(q)) {
            out.words.push_back(current);
        }
        if (current.size() == max_len) {
            return;
        }
        for (Letter a = 0; a < k; ++a) {
            State p = d.next(q, a);
            if (dist[p] != kFar && current.size() + 1 + dist[p] <= max_len) {
                current.push_back(a);
                walk(p);
                current.pop_back();
            }
        }
    };
    walk(d.initial());
    return out;
}

WordSample enumerate_language(const Nfa& n, std::size_t max_len) {
    if (max_len > kMaxEnumerationLength) {
        throw input_error("enumerate_language: max_len " + std::to_string(max_len) +
                          " exceeds limit " + std::to_string(kMaxEnumerationLength));
    }
    WordSample out{max_len, {}};
    Word current;
    std::function<void(const std::vector<bool>&)> walk = [&](const std::vector<bool>& set) {
        bool any = false;
        bool accepting = false;
        for (State q = 0; q < n.state_count(); ++q) {
            if (set[q]) {
                any = true;
                accepting = accepting || n.is_final(q);
            }
        }
        if (!any) {
            return;
        }
        if (accepting) {
            out.words.push_back(current);
        }
        if (current.size() == max_len) {
            return;
        }
        for (Letter a = 0; a < n.letter_count(); ++a) {
            std::vector<bool> next_set(n.state_count(), false);
            for (State q = 0; q < n.state_count(); ++q) {
                if (set[q]) {
                    for (State p : n.next(q, a)) {
                        next_set[p] = true;
                    }
                }
            }
            current.push_back(a);
            walk(next_set);
            current.pop_back();
        }
    };
    std::vector<bool> start(n.state_count(), false);
    start[n.initial()] = true;
    walk(start);
    return out;
}

Dfa permute_states(const Dfa& d, const std::vector<State>& permutation) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.letter_count();
    if (permutation.size() != n) {
        throw input_error("permutation has wrong size");
    }
    std::vector<bool> hit(n, false);
    for (State p : permutation) {
        if (p >= n || hit[p]) {
            throw input_error("not a permutation");
        }
        hit[p] = true;
    }
    std::vector<State> delta(n * k);
    std::vector<State> finals;
    for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < k; ++a) {
            delta[permutation[q] * k + a] = permutation[d.next(q, a)];
        }
        if (d.is_final(q)) {
            finals.push_back(permutation[q]);
        }
    }
    return Dfa(d.alphabet(), n, permutation[d.initial()], finals, std::move(delta));
}

Dfa empty_language(const Alphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {}, std::vector<State>(alphabet.size(), 0));
}

Dfa universal_language(const Alphabet& alphabet) {
    const State finals[] = {0};
    return Dfa(alphabet, 1, 0, finals, std::vector<State>(alphabet.size(), 0));
}

}  // namespace idealmatch
