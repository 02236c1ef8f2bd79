// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. `--long` adds the exhaustive alphabet-minimality sweep.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "idealmatch/automata.hpp"
#include "idealmatch/complexity.hpp"
#include "idealmatch/ideals.hpp"
#include "idealmatch/matchers.hpp"
#include "idealmatch/random.hpp"
#include "idealmatch/single_word.hpp"
#include "idealmatch/witnesses.hpp"
#include "oracles.hpp"

using namespace idealmatch;

namespace {

// Collects the first few failures of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            if (failures_ < 3) {
                detail_ << (failures_ ? "; " : "") << what;
            }
            ++failures_;
        }
    }
    [[nodiscard]] bool ok() const { return failures_ == 0 && checks_ > 0; }
    [[nodiscard]] std::size_t checks() const { return checks_; }
    [[nodiscard]] std::string detail() const {
        return checks_ == 0 ? "no checks ran"
                            : std::to_string(failures_) + " failed: " + detail_.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::ostringstream detail_;
};

std::string cell(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

std::string got(std::int64_t measured, std::int64_t expected) {
    return " got " + std::to_string(measured) + " want " + std::to_string(expected);
}

Dfa pattern(Family f, int m) { return witness({f, Role::Pattern, m, 0}); }
Dfa text(Family f, int m, int n) { return witness({f, Role::Text, m, n}); }

// Measures the family directly from its witnesses and compares with the
// closed form given here, not with bound_formula.
void grid(Check& c, Family f, int m_lo, int m_hi, int n_lo, int n_hi,
          const std::function<std::int64_t(std::int64_t, std::int64_t)>& expected) {
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            const auto k = measure_witness(f, m, n);
            const auto e = expected(m, n);
            c.expect(k == e, std::string(to_string(f)) + " " + cell(m, n) + got(k, e));
        }
    }
}

void prefix_tightness(Check& c) {
    grid(c, Family::PrefixGeneral, 2, 6, 2, 6, [](auto m, auto n) { return m * n; });
}

void suffix_tightness(Check& c) {
    grid(c, Family::SuffixGeneral, 2, 8, 2, 5,
         [](auto m, auto n) { return (std::int64_t{1} << (m - 1)) * n; });
}

void factor_tightness(Check& c) {
    grid(c, Family::FactorGeneral, 3, 8, 3, 5,
         [](auto m, auto n) { return ((std::int64_t{1} << (m - 2)) + 1) * n; });
}

void subsequence_tightness(Check& c) {
    for (int m = 3; m <= 7; ++m) {
        const auto size = text(Family::SubsequenceGeneral, m, 3).alphabet().size();
        c.expect(size == static_cast<std::size_t>(m - 1), "alphabet size at m=" + std::to_string(m));
    }
    grid(c, Family::SubsequenceGeneral, 3, 7, 3, 5,
         [](auto m, auto n) { return ((std::int64_t{1} << (m - 2)) + 1) * n; });
}

void single_word_bounds(Check& c) {
    grid(c, Family::WordPrefix, 3, 10, 2, 8, [](auto m, auto n) { return m + n - 1; });
    grid(c, Family::WordSuffix, 3, 10, 2, 8, [](auto m, auto n) { return (m - 1) * n - (m - 2); });
    grid(c, Family::WordFactor, 3, 10, 2, 8, [](auto m, auto n) { return (m - 1) * n; });
    grid(c, Family::WordSubsequence, 3, 10, 2, 8, [](auto m, auto n) { return (m - 1) * n; });
    for (int m = 3; m <= 10; ++m) {
        const auto w = witness_word(Family::WordSuffix, m);
        c.expect(w.letters() == Word(static_cast<std::size_t>(m - 2), 1), "w = b^{m-2}");
    }
}

void unary(Check& c) {
    for (int m = 3; m <= 8; ++m) {
        for (int n = 2; n <= 8; ++n) {
            const auto w = witness_word(Family::Unary, m);
            const auto t = text(Family::Unary, m, n);
            std::vector<Dfa> results;
            for (auto mode : kAllMatchModes) {
                results.push_back(match_single_word(mode, w, t));
                // The generic construction on {a^{m-2}} must agree.
                c.expect(results.back() == match_language(mode, word_dfa(w), t),
                         "generic vs single-word at " + cell(m, n));
            }
            const auto k = static_cast<std::int64_t>(results[0].state_count());
            c.expect(k == m + n - 2, "unary " + cell(m, n) + got(k, m + n - 2));
            for (std::size_t i = 0; i < results.size(); ++i) {
                for (std::size_t j = i + 1; j < results.size(); ++j) {
                    c.expect(isomorphic(results[i], results[j]),
                             "modes " + std::to_string(i) + "," + std::to_string(j) + " differ at " +
                                 cell(m, n));
                }
            }
        }
    }
}

void structural_isomorphisms(Check& c) {
    for (int m = 2; m <= 10; ++m) {
        const auto left = minimize(ideal(IdealKind::Left, pattern(Family::SuffixGeneral, m)));
        c.expect(isomorphic(bm_dfa(m), left), "B_" + std::to_string(m));
    }
    for (int m = 3; m <= 10; ++m) {
        const auto two = minimize(ideal(IdealKind::TwoSided, pattern(Family::FactorGeneral, m)));
        c.expect(isomorphic(cm_dfa(m), two), "C_" + std::to_string(m));
    }
}

void oracle_equivalences(Check& c) {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        std::uniform_int_distribution<std::size_t> states(1, 12);
        std::uniform_int_distribution<std::size_t> letters(1, 3);
        const auto d = random_dfa(rng, letters_alphabet(letters(rng)), states(rng));
        const auto h = minimize(d);
        const auto o = minimize_oracle(d);
        c.expect(h.state_count() == o.state_count() && isomorphic(h, o),
                 "minimize vs oracle on sample " + std::to_string(i));
    }
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<std::size_t> states(1, 6);
        std::uniform_int_distribution<std::size_t> letters(1, 3);
        const auto n = random_nfa(rng, letters_alphabet(letters(rng)), states(rng));
        const auto d = determinize(n);
        c.expect(enumerate_language(d, 8) == enumerate_language(n, 8),
                 "determinize on NFA sample " + std::to_string(i));
    }
    auto compare = [&](const PatternWord& w) {
        for (auto mode : kAllMatchModes) {
            const auto dedicated = single_word_automaton(mode, w);
            const auto generic = ideal(ideal_kind(mode), word_dfa(w));
            c.expect(isomorphic(dedicated, generic),
                     std::string(to_string(mode)) + " w=" + w.alphabet().format_word(w.letters()));
        }
    };
    const auto ab = letters_alphabet(2);
    for (const auto& w : oracle::all_words(2, 8)) {
        if (!w.empty()) {
            compare(PatternWord(ab, w));
        }
    }
    const auto abc = letters_alphabet(3);
    std::uniform_int_distribution<std::size_t> length(1, 8);
    for (int i = 0; i < 200; ++i) {
        compare(PatternWord(abc, random_word(rng, 3, length(rng))));
    }
}

void ceilings(Check& c) {
    Rng rng(99);
    std::uniform_int_distribution<std::size_t> pattern_states(1, 5);
    std::uniform_int_distribution<std::size_t> text_states(1, 4);
    std::uniform_int_distribution<std::size_t> letters(1, 3);
    auto one = [&](MatchMode mode, const Alphabet& alphabet, std::size_t p_states) {
        const auto p = minimize(random_dfa(rng, alphabet, p_states));
        const auto t = minimize(random_dfa(rng, alphabet, text_states(rng)));
        const auto k = static_cast<std::int64_t>(match_language(mode, p, t).state_count());
        const Family general[] = {Family::PrefixGeneral, Family::SuffixGeneral,
                                  Family::FactorGeneral, Family::SubsequenceGeneral};
        const auto f = general[static_cast<std::size_t>(mode)];
        const auto lo = family_minimum(f);
        // The bounds are monotone, so machines below a family's minimum are
        // checked against the bound at the minimum.
        const int m = std::max(static_cast<int>(p.state_count()), lo.m);
        const int n = std::max(static_cast<int>(t.state_count()), lo.n);
        const auto b = bound_formula(f, m, n);
        c.expect(k <= b, std::string(to_string(mode)) + " " + cell(m, n) + got(k, b));
    };
    for (auto mode : kAllMatchModes) {
        for (int i = 0; i < 500; ++i) {
            one(mode, letters_alphabet(letters(rng)), pattern_states(rng));
        }
    }
    // Subsequence with |Σ| = m-1.
    for (int i = 0; i < 500; ++i) {
        const std::size_t m = 2 + static_cast<std::size_t>(i) % 4;
        one(MatchMode::Subsequence, letters_alphabet(m - 1), m);
    }
}

void alphabet_minimality(Check& c, bool long_mode) {
    for (int n : {2, 3}) {
        const auto r = search_alphabet_minimality(4, n, 10'000, 1);
        c.expect(r.alphabet_size == 2, "binary alphabet");
        c.expect(r.samples_tried == 10'000, "budget used");
        c.expect(r.best_kappa_found < 5 * n && !r.counterexample,
                 "n=" + std::to_string(n) + " best " + std::to_string(r.best_kappa_found));
    }
    if (long_mode) {
        for (int n : {2, 3}) {
            const auto r = exhaustive_alphabet_minimality(4, default_search_text(4, n));
            c.expect(r.best_kappa_found < 5 * n,
                     "exhaustive n=" + std::to_string(n) + " best " +
                         std::to_string(r.best_kappa_found));
        }
    }
}

void kmp_lemmas(Check& c) {
    Rng rng(77);
    std::uniform_int_distribution<std::size_t> length(1, 10);
    std::uniform_int_distribution<std::size_t> letters(1, 3);
    for (int sample = 0; sample < 500; ++sample) {
        const auto k = letters(rng);
        const PatternWord w(letters_alphabet(k), random_word(rng, k, length(rng)));
        const auto d = single_word_automaton(MatchMode::Suffix, w);
        const auto f = oracle::borders(w.letters());
        c.expect(bridge_table(w).values() == f, "border table");
        const std::size_t last = w.m() - 2;  // index of w_{m-2} = w
        const std::string name = w.alphabet().format_word(w.letters());
        for (std::size_t i = 1; i <= last; ++i) {
            const auto fi = static_cast<State>(f[i - 1]);
            for (Letter a = 0; a < k; ++a) {
                if ((i < last && a != w.letter(i + 1)) || i == last) {
                    c.expect(d.next(static_cast<State>(i), a) == d.next(fi, a),
                             "suffixword_equal w=" + name + " i=" + std::to_string(i));
                }
            }
            if (i < last) {
                c.expect(d.next(fi, w.letter(i + 1)) == static_cast<State>(f[i]),
                         "suffixword_next w=" + name + " i=" + std::to_string(i));
            }
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    const bool long_mode = argc > 1 && std::string(argv[1]) == "--long";
    struct Criterion {
        const char* name;
        std::function<void(Check&)> run;
    };
    const Criterion criteria[] = {
        {"prefix tightness", prefix_tightness},
        {"suffix tightness", suffix_tightness},
        {"factor tightness", factor_tightness},
        {"subsequence tightness", subsequence_tightness},
        {"single-word bounds", single_word_bounds},
        {"unary bound and mode coincidence", unary},
        {"B_m and C_m isomorphisms", structural_isomorphisms},
        {"oracle equivalences", oracle_equivalences},
        {"upper-bound ceilings on random inputs", ceilings},
        {"alphabet minimality search", [&](Check& c) { alphabet_minimality(c, long_mode); }},
        {"KMP structure lemmas", kmp_lemmas},
    };
    int failed = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        Check c;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2f s", elapsed.count());
        if (c.ok()) {
            std::cout << "PASS " << index << ". " << criterion.name << " (" << c.checks()
                      << " checks, " << timing << ")\n";
        } else {
            ++failed;
            std::cout << "FAIL " << index << ". " << criterion.name << " (" << c.detail() << ", "
                      << timing << ")\n";
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << '\n';
    return failed == 0 ? 0 : 1;
}
