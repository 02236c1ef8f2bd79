#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "idealmatch/witnesses.hpp"

namespace idealmatch {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Closed-form state complexity bound of a family:
///   prefix mn, suffix 2^{m-1}n, factor and subsequence (2^{m-2}+1)n,
///   word_prefix m+n-1, word_suffix (m-1)n-(m-2), word_factor and
///   word_subsequence (m-1)n, unary m+n-2.
/// Throws input_error when (m, n) is below the family minimum.
[[nodiscard]] std::int64_t bound_formula(Family family, int m, int n);

/// Inclusive integer range, written `A..B` on the command line.
struct IntRange {
    int lo = 0;
    int hi = 0;

    [[nodiscard]] static IntRange parse(std::string_view text);
    bool operator==(const IntRange&) const = default;
};

struct GridRow {
    int m = 0;
    int n = 0;
    std::optional<std::int64_t> measured;  ///< empty when the cell failed
    std::int64_t formula = 0;
    bool tight = false;
    double elapsed_ms = 0.0;  ///< rounded to microseconds
    std::string error;        ///< why the cell failed, if it did

    /// Equality ignoring timing.
    [[nodiscard]] bool same_result(const GridRow& other) const;
    bool operator==(const GridRow&) const = default;
};

struct ReportMeta {
    std::string tool_version{kToolVersion};
    std::vector<std::size_t> alphabet_sizes;  ///< distinct sizes used, ascending

    bool operator==(const ReportMeta&) const = default;
};

struct ComplexityReport {
    Family family = Family::PrefixGeneral;
    std::vector<GridRow> rows;
    ReportMeta meta;

    [[nodiscard]] bool all_tight() const;
    bool operator==(const ComplexityReport&) const = default;
};

struct GridOptions {
    std::chrono::milliseconds timeout{30'000};
    unsigned threads = 0;  ///< 0: hardware concurrency
};

/// κ of the combined language for the family's witnesses at (m, n).
[[nodiscard]] std::int64_t measure_witness(Family family, int m, int n);

/// One row per (m, n), m-major. A cell that throws or exceeds the timeout
/// is recorded as failed and the grid carries on.
[[nodiscard]] ComplexityReport run_grid(Family family, IntRange m_range, IntRange n_range,
                                        const GridOptions& options = {});

/// CSV columns: family,m,n,measured,formula,tight,elapsed_ms.
[[nodiscard]] std::string to_csv(const ComplexityReport& report);
[[nodiscard]] ComplexityReport report_from_csv(std::string_view csv);

/// {"family": ..., "rows": [{"m","n","measured","formula","tight","elapsed_ms"}], "meta": {...}}
[[nodiscard]] std::string to_json(const ComplexityReport& report);
[[nodiscard]] ComplexityReport report_from_json(std::string_view json);

struct SearchReport {
    int m = 0;
    int n = 0;
    std::size_t alphabet_size = 0;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    std::size_t samples_tried = 0;
    std::int64_t best_kappa_found = 0;
    std::int64_t bound = 0;
    /// A (pattern, text) pair reaching the bound, if one was found.
    std::optional<std::pair<Dfa, Dfa>> counterexample;
};

/// Falsification search for the subsequence bound over an alphabet of m-2
/// letters: random m-state patterns and n-state texts, or every pair when
/// that space is no larger than `budget`. Deterministic for a given seed.
[[nodiscard]] SearchReport search_alphabet_minimality(int m, int n, std::size_t budget,
                                                      std::uint64_t seed, unsigned threads = 0);

/// Every m-state pattern DFA over m-2 letters (initial state 0, non-empty
/// final set) against one fixed text.
[[nodiscard]] SearchReport exhaustive_alphabet_minimality(int m, const Dfa& text,
                                                          unsigned threads = 0);

/// The text used by exhaustive_alphabet_minimality by default: the last
/// letter cycles (0,...,n-1), the others are the identity, final n-1.
[[nodiscard]] Dfa default_search_text(int m, int n);

[[nodiscard]] std::string to_json(const SearchReport& report);

}  // namespace idealmatch
