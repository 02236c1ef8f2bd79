#include <cstdint>
#include <utility>
#include <vector>

#include "internal.hpp"

namespace idealmatch::detail {

namespace {

// Refinable partition of {0..n-1}: each block is a contiguous slice of
// `elems`; the first `marked[b]` entries of block b are the marked ones.
struct Partition {
    std::vector<State> elems;
    std::vector<std::size_t> loc;
    std::vector<std::uint32_t> block_of;
    std::vector<std::size_t> first;
    std::vector<std::size_t> end;
    std::vector<std::size_t> marked;

    [[nodiscard]] std::size_t size(std::uint32_t b) const { return end[b] - first[b]; }

    void mark(State q) {
        const auto b = block_of[q];
        const std::size_t target = first[b] + marked[b];
        const std::size_t here = loc[q];
        std::swap(elems[here], elems[target]);
        loc[elems[here]] = here;
        loc[elems[target]] = target;
        ++marked[b];
    }

    // Moves the marked prefix of b into a new block and returns its id.
    std::uint32_t split(std::uint32_t b) {
        const auto nb = static_cast<std::uint32_t>(first.size());
        first.push_back(first[b]);
        end.push_back(first[b] + marked[b]);
        marked.push_back(0);
        first[b] = end[nb];
        marked[b] = 0;
        for (std::size_t i = first[nb]; i < end[nb]; ++i) {
            block_of[elems[i]] = nb;
        }
        return nb;
    }
};

}  // namespace

Dfa hopcroft_quotient(const Dfa& d) {
    const std::size_t n = d.state_count();
    const std::size_t k = d.letter_count();

    // Inverse transitions in CSR form, per letter.
    std::vector<std::vector<std::size_t>> inv_start(k, std::vector<std::size_t>(n + 1, 0));
    std::vector<std::vector<State>> inv(k, std::vector<State>(n));
    for (Letter a = 0; a < k; ++a) {
        for (State q = 0; q < n; ++q) {
            ++inv_start[a][d.next(q, a) + 1];
        }
        for (std::size_t q = 0; q < n; ++q) {
            inv_start[a][q + 1] += inv_start[a][q];
        }
        std::vector<std::size_t> fill(inv_start[a].begin(), inv_start[a].end() - 1);
        for (State q = 0; q < n; ++q) {
            inv[a][fill[d.next(q, a)]++] = q;
        }
    }

    Partition part;
    part.elems.reserve(n);
    for (State q = 0; q < n; ++q) {
        if (d.is_final(q)) {
            part.elems.push_back(q);
        }
    }
    const std::size_t final_count = part.elems.size();
    for (State q = 0; q < n; ++q) {
        if (!d.is_final(q)) {
            part.elems.push_back(q);
        }
    }
    part.loc.resize(n);
    part.block_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        part.loc[part.elems[i]] = i;
    }
    auto add_block = [&](std::size_t lo, std::size_t hi) {
        const auto b = static_cast<std::uint32_t>(part.first.size());
        part.first.push_back(lo);
        part.end.push_back(hi);
        part.marked.push_back(0);
        for (std::size_t i = lo; i < hi; ++i) {
            part.block_of[part.elems[i]] = b;
        }
    };
    if (final_count > 0) {
        add_block(0, final_count);
    }
    if (final_count < n) {
        add_block(final_count, n);
    }

    std::vector<std::pair<std::uint32_t, Letter>> work;
    std::vector<std::vector<char>> queued;
    auto enqueue = [&](std::uint32_t b, Letter a) {
        if (queued.size() <= b) {
            queued.resize(b + 1, std::vector<char>(k, 0));
        }
        if (!queued[b][a]) {
            queued[b][a] = 1;
            work.emplace_back(b, a);
        }
    };
    if (part.first.size() == 2) {
        const std::uint32_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
        for (Letter a = 0; a < k; ++a) {
            enqueue(smaller, a);
        }
    }

    std::vector<State> preimage;
    std::vector<std::uint32_t> touched;
    while (!work.empty()) {
        auto [splitter, a] = work.back();
        work.pop_back();
        queued[splitter][a] = 0;

        preimage.clear();
        for (std::size_t i = part.first[splitter]; i < part.end[splitter]; ++i) {
            const State q = part.elems[i];
            for (std::size_t j = inv_start[a][q]; j < inv_start[a][q + 1]; ++j) {
                preimage.push_back(inv[a][j]);
            }
        }
        for (State p : preimage) {
            const auto b = part.block_of[p];
            if (part.marked[b] == 0) {
                touched.push_back(b);
            }
            part.mark(p);
        }
        for (auto b : touched) {
            if (part.marked[b] == part.size(b)) {
                part.marked[b] = 0;
                continue;
            }
            const auto nb = part.split(b);
            if (queued.size() <= nb) {
                queued.resize(nb + 1, std::vector<char>(k, 0));
            }
            for (Letter c = 0; c < k; ++c) {
                if (queued[b][c]) {
                    enqueue(nb, c);
                } else {
                    enqueue(part.size(nb) <= part.size(b) ? nb : b, c);
                }
            }
        }
        touched.clear();
    }

    const std::size_t blocks = part.first.size();
    std::vector<State> delta(blocks * k);
    std::vector<State> finals;
    for (std::uint32_t b = 0; b < blocks; ++b) {
        const State rep = part.elems[part.first[b]];
        for (Letter a = 0; a < k; ++a) {
            delta[b * k + a] = part.block_of[d.next(rep, a)];
        }
        if (d.is_final(rep)) {
            finals.push_back(b);
        }
    }
    return Dfa(d.alphabet(), blocks, part.block_of[d.initial()], finals, std::move(delta));
}

}  // namespace idealmatch::detail
