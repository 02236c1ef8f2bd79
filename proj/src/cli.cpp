#include "idealmatch/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "idealmatch/automata.hpp"
#include "idealmatch/complexity.hpp"
#include "idealmatch/error.hpp"
#include "idealmatch/ideals.hpp"
#include "idealmatch/matchers.hpp"
#include "idealmatch/single_word.hpp"
#include "idealmatch/text_format.hpp"
#include "idealmatch/witnesses.hpp"

namespace idealmatch {

namespace {

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool dot = false;
    bool stdin_used = false;

    std::string read(const std::string& path) {
        if (path == "-") {
            if (stdin_used) {
                throw input_error("stdin can be read only once");
            }
            stdin_used = true;
            std::ostringstream buf;
            buf << in.rdbuf();
            return buf.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw input_error("cannot open '" + path + "'");
        }
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }

    // NFA files are accepted wherever a DFA is expected and determinized.
    Dfa load(const std::string& path) {
        try {
            auto parsed = parse_automaton(read(path));
            if (auto* d = std::get_if<Dfa>(&parsed)) {
                return std::move(*d);
            }
            return determinize(std::get<Nfa>(parsed));
        } catch (const input_error& e) {
            throw input_error(path + ": " + e.what());
        }
    }

    void emit(const Dfa& d) { out << (dot ? to_dot(d) : serialize_dfa(d)); }
};

// A --word pattern must use letters of the alphabet it is matched against.
PatternWord pattern_word(const Alphabet& alphabet, const std::string& word) {
    try {
        return PatternWord(alphabet, word);
    } catch (const input_error& e) {
        throw input_error(std::string("--word: ") + e.what());
    }
}

Alphabet alphabet_of_chars(const std::string& a, const std::string& b) {
    std::set<char> chars;
    for (char c : a + b) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            chars.insert(c);
        }
    }
    if (chars.empty()) {
        throw input_error("cannot infer an alphabet from empty input");
    }
    return Alphabet::from_chars(std::string(chars.begin(), chars.end()));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Pattern matching on regular languages via ideals"};
    app.name("idealmatch");
    app.require_subcommand(1, 1);
    Io io{in, out, err};
    app.add_flag("--dot", io.dot, "Print automata as Graphviz instead of the text format");

    std::string kind;
    std::string mode;
    std::string file1;
    std::string file2;
    std::string pattern_file;
    std::string word;
    std::string text_file;
    std::string input;
    std::string alphabet_spec;
    std::string family;
    std::string role;
    int m = 0;
    int n = 0;
    std::string m_range;
    std::string n_range;
    std::string format = "csv";
    std::string out_file;
    long timeout_ms = 30'000;
    unsigned threads = 0;
    std::size_t budget = 10'000;
    std::uint64_t seed = 1;
    bool exhaustive = false;

    auto* ideal_cmd = app.add_subcommand("ideal", "Minimal DFA of the ideal generated by a language");
    ideal_cmd->add_option("--kind", kind, "right|left|two_sided|all_sided")->required();
    ideal_cmd->add_option("file", file1, "Automaton file or -")->required();

    auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle of two languages");
    shuffle_cmd->add_option("file1", file1)->required();
    shuffle_cmd->add_option("file2", file2)->required();

    auto* match_cmd = app.add_subcommand("match", "Texts containing a pattern occurrence");
    match_cmd->add_option("--mode", mode, "prefix|suffix|factor|subsequence")->required();
    auto* match_pattern = match_cmd->add_option("--pattern", pattern_file, "Pattern automaton");
    auto* match_word = match_cmd->add_option("--word", word, "Single pattern word");
    match_pattern->excludes(match_word);
    match_cmd->add_option("--text", text_file, "Text automaton")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Test one word against a pattern");
    classify_cmd->add_option("--mode", mode)->required();
    auto* classify_pattern = classify_cmd->add_option("--pattern", pattern_file);
    auto* classify_word_opt = classify_cmd->add_option("--word", word);
    classify_pattern->excludes(classify_word_opt);
    classify_cmd->add_option("--input", input, "The word to classify")->required();
    classify_cmd->add_option("--alphabet", alphabet_spec,
                             "Letters for --word (default: those of the word and input)");

    auto* witness_cmd = app.add_subcommand("witness", "Emit a witness automaton");
    witness_cmd->add_option("--family", family)->required();
    witness_cmd->add_option("--role", role, "pattern|text")->required();
    witness_cmd->add_option("-m", m)->required();
    witness_cmd->add_option("-n", n);

    auto* minimize_cmd = app.add_subcommand("minimize", "Minimal complete DFA");
    minimize_cmd->add_option("file", file1)->required();

    auto* equiv_cmd = app.add_subcommand("equiv", "Language equality (exit 1 when different)");
    equiv_cmd->add_option("file1", file1)->required();
    equiv_cmd->add_option("file2", file2)->required();

    auto* iso_cmd = app.add_subcommand("iso", "Isomorphism of minimal DFAs (exit 1 when not)");
    iso_cmd->add_option("file1", file1)->required();
    iso_cmd->add_option("file2", file2)->required();

    auto* complexity_cmd = app.add_subcommand("complexity", "Measure a witness family on a grid");
    complexity_cmd->add_option("--family", family)->required();
    complexity_cmd->add_option("--m-range", m_range, "A..B")->required();
    complexity_cmd->add_option("--n-range", n_range, "C..D")->required();
    complexity_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    complexity_cmd->add_option("--out", out_file, "Write the report here instead of stdout");
    complexity_cmd->add_option("--timeout-ms", timeout_ms, "Per-cell timeout");
    complexity_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");

    auto* search_cmd =
        app.add_subcommand("search-alphabet", "Look for subsequence witnesses over m-2 letters");
    search_cmd->add_option("-m", m)->required();
    search_cmd->add_option("-n", n)->required();
    search_cmd->add_option("--budget", budget);
    search_cmd->add_option("--seed", seed);
    search_cmd->add_flag("--exhaustive", exhaustive,
                         "Try every m-state pattern against the default fixed text");
    search_cmd->add_option("--threads", threads);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInputError;
    }

    try {
        if (ideal_cmd->parsed()) {
            io.emit(ideal(parse_ideal_kind(kind), io.load(file1)));
        } else if (shuffle_cmd->parsed()) {
            io.emit(shuffle(io.load(file1), io.load(file2)));
        } else if (match_cmd->parsed()) {
            const auto mm = parse_match_mode(mode);
            const auto text = io.load(text_file);
            if (!word.empty()) {
                io.emit(match_single_word(mm, pattern_word(text.alphabet(), word), text));
            } else if (!pattern_file.empty()) {
                io.emit(match_language(mm, io.load(pattern_file), text));
            } else {
                throw input_error("match: one of --pattern or --word is required");
            }
        } else if (classify_cmd->parsed()) {
            const auto mm = parse_match_mode(mode);
            bool member = false;
            if (!pattern_file.empty()) {
                const auto p = io.load(pattern_file);
                member = classify_word(mm, p, p.alphabet().parse_word(input));
            } else if (!word.empty()) {
                const auto alphabet = alphabet_spec.empty() ? alphabet_of_chars(word, input)
                                                            : Alphabet::from_chars(alphabet_spec);
                const auto w = pattern_word(alphabet, word);
                member = accepts(single_word_automaton(mm, w), alphabet.parse_word(input));
            } else {
                throw input_error("classify: one of --pattern or --word is required");
            }
            out << (member ? "accept" : "reject") << '\n';
            return member ? kExitOk : kExitFalse;
        } else if (witness_cmd->parsed()) {
            const auto f = parse_family(family);
            const auto r = parse_role(role);
            if (r == Role::Text && n == 0) {
                throw input_error("witness: -n is required for the text role");
            }
            io.emit(witness({f, r, m, n}));
        } else if (minimize_cmd->parsed()) {
            io.emit(minimize(io.load(file1)));
        } else if (equiv_cmd->parsed()) {
            const bool same = equivalent(io.load(file1), io.load(file2));
            out << (same ? "equivalent" : "not equivalent") << '\n';
            return same ? kExitOk : kExitFalse;
        } else if (iso_cmd->parsed()) {
            const bool same = isomorphic(io.load(file1), io.load(file2));
            out << (same ? "isomorphic" : "not isomorphic") << '\n';
            return same ? kExitOk : kExitFalse;
        } else if (complexity_cmd->parsed()) {
            GridOptions options;
            options.timeout = std::chrono::milliseconds(timeout_ms);
            options.threads = threads;
            const auto report = run_grid(parse_family(family), IntRange::parse(m_range),
                                         IntRange::parse(n_range), options);
            const auto text = format == "json" ? to_json(report) : to_csv(report);
            if (out_file.empty()) {
                out << text;
            } else {
                std::ofstream file(out_file, std::ios::binary);
                if (!file || !(file << text)) {
                    throw input_error("cannot write '" + out_file + "'");
                }
            }
            for (const auto& row : report.rows) {
                if (!row.error.empty()) {
                    err << "cell m=" << row.m << " n=" << row.n << " failed: " << row.error
                        << '\n';
                }
            }
        } else if (search_cmd->parsed()) {
            const auto report = exhaustive
                                    ? exhaustive_alphabet_minimality(
                                          m, default_search_text(m, n), threads)
                                    : search_alphabet_minimality(m, n, budget, seed, threads);
            out << to_json(report);
        }
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace idealmatch
