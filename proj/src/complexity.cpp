#include "idealmatch/complexity.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "idealmatch/automata.hpp"
#include "idealmatch/error.hpp"
#include "idealmatch/matchers.hpp"
#include "idealmatch/random.hpp"
#include "idealmatch/text_format.hpp"

namespace idealmatch {

namespace {

using json = nlohmann::json;

unsigned worker_count(unsigned requested, std::size_t tasks) {
    unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
    const unsigned workers = worker_count(threads, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                fn(i);
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::size_t alphabet_size(Family family, int m) {
    if (family == Family::Unary) {
        return 1;
    }
    if (family == Family::SubsequenceGeneral) {
        return static_cast<std::size_t>(m - 1);
    }
    return 2;
}

}  // namespace

std::int64_t bound_formula(Family family, int m, int n) {
    const auto minimum = family_minimum(family);
    if (m < minimum.m || n < minimum.n) {
        throw input_error(std::string(to_string(family)) + ": (m, n) = (" + std::to_string(m) +
                          ", " + std::to_string(n) + ") outside the valid range m >= " +
                          std::to_string(minimum.m) + ", n >= " + std::to_string(minimum.n));
    }
    if (m > 60) {
        throw input_error("m too large for a 64-bit bound");
    }
    const std::int64_t M = m;
    const std::int64_t N = n;
    switch (family) {
        case Family::PrefixGeneral:
            return M * N;
        case Family::SuffixGeneral:
            return pow2(m - 1) * N;
        case Family::FactorGeneral:
        case Family::SubsequenceGeneral:
            return (pow2(m - 2) + 1) * N;
        case Family::WordPrefix:
            return M + N - 1;
        case Family::WordSuffix:
            return (M - 1) * N - (M - 2);
        case Family::WordFactor:
        case Family::WordSubsequence:
            return (M - 1) * N;
        case Family::Unary:
            return M + N - 2;
    }
    throw input_error("unknown family");
}

IntRange IntRange::parse(std::string_view text) {
    auto dots = text.find("..");
    auto number = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
            throw input_error("malformed range '" + std::string(text) + "' (expected A..B)");
        }
        return v;
    };
    IntRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = number(text);
    } else {
        r.lo = number(text.substr(0, dots));
        r.hi = number(text.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw input_error("empty range '" + std::string(text) + "'");
    }
    return r;
}

bool GridRow::same_result(const GridRow& other) const {
    return m == other.m && n == other.n && measured == other.measured &&
           formula == other.formula && tight == other.tight && error == other.error;
}

bool ComplexityReport::all_tight() const {
    return std::all_of(rows.begin(), rows.end(), [](const GridRow& r) { return r.tight; });
}

std::int64_t measure_witness(Family family, int m, int n) {
    const auto mode = family_mode(family);
    const auto text = witness({family, Role::Text, m, n});
    if (is_single_word(family)) {
        return static_cast<std::int64_t>(
            match_single_word(mode, witness_word(family, m), text).state_count());
    }
    const auto pattern = witness({family, Role::Pattern, m, n});
    return static_cast<std::int64_t>(match_language(mode, pattern, text).state_count());
}

ComplexityReport run_grid(Family family, IntRange m_range, IntRange n_range,
                          const GridOptions& options) {
    ComplexityReport report;
    report.family = family;
    std::set<std::size_t> sizes;
    for (int m = m_range.lo; m <= m_range.hi; ++m) {
        for (int n = n_range.lo; n <= n_range.hi; ++n) {
            GridRow row;
            row.m = m;
            row.n = n;
            row.formula = bound_formula(family, m, n);
            report.rows.push_back(row);
            sizes.insert(alphabet_size(family, m));
        }
    }
    report.meta.alphabet_sizes.assign(sizes.begin(), sizes.end());

    parallel_for(report.rows.size(), options.threads, [&](std::size_t i) {
        auto& row = report.rows[i];
        // Each cell runs on its own detached thread so that a cell exceeding
        // the timeout can be abandoned without stalling the grid.
        auto promise = std::make_shared<std::promise<std::int64_t>>();
        auto result = promise->get_future();
        const auto start = std::chrono::steady_clock::now();
        std::thread([promise, family, m = row.m, n = row.n] {
            try {
                promise->set_value(measure_witness(family, m, n));
            } catch (...) {
                promise->set_exception(std::current_exception());
            }
        }).detach();
        if (result.wait_for(options.timeout) == std::future_status::timeout) {
            row.error = "timeout";
        } else {
            try {
                row.measured = result.get();
            } catch (const std::exception& e) {
                row.error = e.what();
            }
        }
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        row.elapsed_ms = round_ms(elapsed.count());
        row.tight = row.measured.has_value() && *row.measured == row.formula;
    });
    return report;
}

std::string to_csv(const ComplexityReport& report) {
    std::ostringstream out;
    out << "family,m,n,measured,formula,tight,elapsed_ms\n";
    for (const auto& r : report.rows) {
        out << to_string(report.family) << ',' << r.m << ',' << r.n << ',';
        if (r.measured) {
            out << *r.measured;
        }
        out << ',' << r.formula << ',' << (r.tight ? "true" : "false") << ',' << std::fixed
            << std::setprecision(3) << r.elapsed_ms << '\n';
    }
    return out.str();
}

ComplexityReport report_from_csv(std::string_view csv) {
    ComplexityReport report;
    std::istringstream in{std::string(csv)};
    std::string line;
    std::size_t number = 0;
    bool family_seen = false;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (number == 1) {
            if (line != "family,m,n,measured,formula,tight,elapsed_ms") {
                throw input_error("csv line 1: unexpected header");
            }
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream fields(line);
        for (std::string cell; std::getline(fields, cell, ',');) {
            cells.push_back(cell);
        }
        if (line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != 7) {
            throw input_error("csv line " + std::to_string(number) + ": expected 7 columns");
        }
        try {
            const auto family = parse_family(cells[0]);
            if (family_seen && family != report.family) {
                throw input_error("mixed families");
            }
            report.family = family;
            family_seen = true;
            GridRow row;
            row.m = std::stoi(cells[1]);
            row.n = std::stoi(cells[2]);
            if (!cells[3].empty()) {
                row.measured = std::stoll(cells[3]);
            } else {
                row.error = "failed";
            }
            row.formula = std::stoll(cells[4]);
            if (cells[5] != "true" && cells[5] != "false") {
                throw input_error("tight must be true or false");
            }
            row.tight = cells[5] == "true";
            row.elapsed_ms = round_ms(std::stod(cells[6]));
            report.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw input_error("csv line " + std::to_string(number) + ": " + e.what());
        }
    }
    return report;
}

std::string to_json(const ComplexityReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row = {{"m", r.m},
                    {"n", r.n},
                    {"measured", r.measured ? json(*r.measured) : json(nullptr)},
                    {"formula", r.formula},
                    {"tight", r.tight},
                    {"elapsed_ms", r.elapsed_ms}};
        if (!r.error.empty()) {
            row["error"] = r.error;
        }
        rows.push_back(std::move(row));
    }
    json doc = {{"family", std::string(to_string(report.family))},
                {"rows", std::move(rows)},
                {"meta",
                 {{"tool_version", report.meta.tool_version},
                  {"alphabet_sizes", report.meta.alphabet_sizes}}}};
    return doc.dump(2) + "\n";
}

ComplexityReport report_from_json(std::string_view text) {
    try {
        const auto doc = json::parse(text);
        ComplexityReport report;
        report.family = parse_family(doc.at("family").get<std::string>());
        for (const auto& r : doc.at("rows")) {
            GridRow row;
            row.m = r.at("m").get<int>();
            row.n = r.at("n").get<int>();
            if (!r.at("measured").is_null()) {
                row.measured = r.at("measured").get<std::int64_t>();
            }
            row.formula = r.at("formula").get<std::int64_t>();
            row.tight = r.at("tight").get<bool>();
            row.elapsed_ms = r.at("elapsed_ms").get<double>();
            row.error = r.value("error", std::string{});
            report.rows.push_back(std::move(row));
        }
        const auto& meta = doc.at("meta");
        report.meta.tool_version = meta.at("tool_version").get<std::string>();
        report.meta.alphabet_sizes = meta.at("alphabet_sizes").get<std::vector<std::size_t>>();
        return report;
    } catch (const json::exception& e) {
        throw input_error(std::string("malformed report json: ") + e.what());
    }
}

namespace {

std::int64_t subsequence_kappa(const Dfa& pattern, const Dfa& text) {
    return static_cast<std::int64_t>(
        match_language(MatchMode::Subsequence, pattern, text).state_count());
}

// Number of complete DFAs with `states` states over `letters` letters,
// initial state 0 and a non-empty final set.
double dfa_space(std::size_t states, std::size_t letters) {
    return std::pow(static_cast<double>(states), static_cast<double>(states * letters)) *
           (std::pow(2.0, static_cast<double>(states)) - 1.0);
}

// The index-th DFA in a fixed enumeration of that space.
Dfa nth_dfa(const Alphabet& alphabet, std::size_t states, std::uint64_t index) {
    const std::uint64_t final_masks = (std::uint64_t{1} << states) - 1;
    const std::uint64_t mask = index % final_masks + 1;
    index /= final_masks;
    std::vector<State> delta(states * alphabet.size());
    for (auto& q : delta) {
        q = static_cast<State>(index % states);
        index /= states;
    }
    std::vector<State> finals;
    for (State q = 0; q < states; ++q) {
        if ((mask >> q) & 1U) {
            finals.push_back(q);
        }
    }
    return Dfa(alphabet, states, 0, finals, std::move(delta));
}

void check_search_parameters(int m, int n) {
    if (m < 3) {
        throw input_error("search: m must be at least 3");
    }
    if (n < 1) {
        throw input_error("search: n must be at least 1");
    }
    if (m - 2 > 26) {
        throw input_error("search: m too large");
    }
}

}  // namespace

SearchReport search_alphabet_minimality(int m, int n, std::size_t budget, std::uint64_t seed,
                                        unsigned threads) {
    check_search_parameters(m, n);
    const auto alphabet = letters_alphabet(static_cast<std::size_t>(m - 2));
    const auto sm = static_cast<std::size_t>(m);
    const auto sn = static_cast<std::size_t>(n);

    SearchReport report;
    report.m = m;
    report.n = n;
    report.alphabet_size = alphabet.size();
    report.seed = seed;
    report.bound = (pow2(m - 2) + 1) * n;

    const double patterns = dfa_space(sm, alphabet.size());
    const double texts = dfa_space(sn, alphabet.size());
    std::vector<std::pair<Dfa, Dfa>> samples;
    if (patterns * texts <= static_cast<double>(budget)) {
        report.exhaustive = true;
        const auto p_count = static_cast<std::uint64_t>(patterns);
        const auto t_count = static_cast<std::uint64_t>(texts);
        for (std::uint64_t i = 0; i < p_count; ++i) {
            for (std::uint64_t j = 0; j < t_count; ++j) {
                samples.emplace_back(nth_dfa(alphabet, sm, i), nth_dfa(alphabet, sn, j));
            }
        }
    } else {
        Rng rng(seed);
        samples.reserve(budget);
        for (std::size_t i = 0; i < budget; ++i) {
            auto p = random_dfa(rng, alphabet, sm);
            auto t = random_dfa(rng, alphabet, sn);
            samples.emplace_back(std::move(p), std::move(t));
        }
    }

    std::vector<std::int64_t> kappa(samples.size(), 0);
    parallel_for(samples.size(), threads, [&](std::size_t i) {
        kappa[i] = subsequence_kappa(samples[i].first, samples[i].second);
    });
    report.samples_tried = samples.size();
    if (!kappa.empty()) {
        const auto best = std::max_element(kappa.begin(), kappa.end());
        report.best_kappa_found = *best;
        if (*best >= report.bound) {
            report.counterexample = samples[static_cast<std::size_t>(best - kappa.begin())];
        }
    }
    return report;
}

Dfa default_search_text(int m, int n) {
    check_search_parameters(m, n);
    const auto alphabet = letters_alphabet(static_cast<std::size_t>(m - 2));
    const auto sn = static_cast<std::size_t>(n);
    std::vector<Transformation> letters(alphabet.size(), Transformation::identity(sn));
    letters.back() = Transformation::cycle_range(sn, 0, static_cast<State>(n - 1));
    const State finals[] = {static_cast<State>(n - 1)};
    return Dfa::from_transformations(alphabet, 0, finals, letters);
}

SearchReport exhaustive_alphabet_minimality(int m, const Dfa& text, unsigned threads) {
    const int n = static_cast<int>(text.state_count());
    check_search_parameters(m, n);
    const auto alphabet = letters_alphabet(static_cast<std::size_t>(m - 2));
    if (!(text.alphabet() == alphabet)) {
        throw input_error("search: text alphabet must be the first m-2 letters");
    }
    const auto sm = static_cast<std::size_t>(m);
    const auto count = static_cast<std::uint64_t>(dfa_space(sm, alphabet.size()));

    SearchReport report;
    report.m = m;
    report.n = n;
    report.alphabet_size = alphabet.size();
    report.exhaustive = true;
    report.bound = (pow2(m - 2) + 1) * n;

    // Chunked so each worker keeps a running maximum.
    constexpr std::uint64_t kChunk = 4096;
    const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<std::pair<std::int64_t, std::uint64_t>> best(chunks, {0, 0});
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::uint64_t end = std::min<std::uint64_t>(count, (c + 1) * kChunk);
        for (std::uint64_t i = c * kChunk; i < end; ++i) {
            const auto k = subsequence_kappa(nth_dfa(alphabet, sm, i), text);
            if (k > best[c].first) {
                best[c] = {k, i};
            }
        }
    });
    report.samples_tried = count;
    // Ties resolve to the lowest index, so the result is thread-independent.
    std::pair<std::int64_t, std::uint64_t> top{0, 0};
    for (const auto& b : best) {
        if (b.first > top.first) {
            top = b;
        }
    }
    report.best_kappa_found = top.first;
    if (top.first >= report.bound) {
        report.counterexample.emplace(nth_dfa(alphabet, sm, top.second), text);
    }
    return report;
}

std::string to_json(const SearchReport& report) {
    json doc = {{"m", report.m},
                {"n", report.n},
                {"alphabet_size", report.alphabet_size},
                {"seed", report.seed},
                {"exhaustive", report.exhaustive},
                {"samples_tried", report.samples_tried},
                {"best_kappa_found", report.best_kappa_found},
                {"bound", report.bound},
                {"counterexample", nullptr}};
    if (report.counterexample) {
        doc["counterexample"] = {{"pattern", serialize_dfa(report.counterexample->first)},
                                 {"text", serialize_dfa(report.counterexample->second)}};
    }
    return doc.dump(2) + "\n";
}

}  // namespace idealmatch
