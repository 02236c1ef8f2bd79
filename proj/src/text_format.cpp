#include "idealmatch/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "idealmatch/error.hpp"

namespace idealmatch {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        raw = trim(raw);
        if (!raw.empty()) {
            out.push_back({number, raw});
        }
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw input_error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) {
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != ' ' && s[end] != '\t') {
            ++end;
        }
        if (end > pos) {
            out.push_back(s.substr(pos, end - pos));
        }
        pos = end;
    }
    return out;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

State parse_state(std::string_view token, std::size_t line, std::size_t state_count) {
    const auto q = parse_index(token, line);
    if (q >= state_count) {
        fail(line, "state " + std::to_string(q) + " out of range");
    }
    return static_cast<State>(q);
}

// "key: value" with the key checked; returns the trimmed value.
std::string_view field(const Line& line, std::string_view key) {
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos || trim(line.text.substr(0, colon)) != key) {
        fail(line.number, "expected '" + std::string(key) + ":'");
    }
    return trim(line.text.substr(colon + 1));
}

struct Header {
    std::string kind;
    Alphabet alphabet;
    std::size_t state_count;
    State initial;
    std::vector<State> finals;
};

Header parse_header(const std::vector<Line>& lines) {
    if (lines.size() < 5) {
        fail(lines.empty() ? 1 : lines.back().number, "truncated automaton header");
    }
    std::string kind(lines[0].text);
    if (kind != "dfa" && kind != "nfa") {
        fail(lines[0].number, "expected 'dfa' or 'nfa'");
    }
    std::vector<std::string> letters;
    for (auto tok : split_ws(field(lines[1], "alphabet"))) {
        letters.emplace_back(tok);
    }
    std::optional<Alphabet> alphabet;
    try {
        alphabet.emplace(std::move(letters));
    } catch (const input_error& e) {
        fail(lines[1].number, e.what());
    }
    const auto state_count = parse_index(field(lines[2], "states"), lines[2].number);
    if (state_count == 0) {
        fail(lines[2].number, "an automaton needs at least one state");
    }
    const auto initial = parse_state(field(lines[3], "initial"), lines[3].number, state_count);
    std::vector<State> finals;
    for (auto tok : split_ws(field(lines[4], "finals"))) {
        finals.push_back(parse_state(tok, lines[4].number, state_count));
    }
    return {std::move(kind), std::move(*alphabet), state_count, initial, std::move(finals)};
}

// Splits "<state> : rest" and checks the row index.
std::string_view row_body(const Line& line, std::size_t expected_state, std::size_t state_count) {
    auto colon = line.text.find(':');
    if (colon == std::string_view::npos) {
        fail(line.number, "expected '<state> : <images>'");
    }
    const auto q = parse_state(trim(line.text.substr(0, colon)), line.number, state_count);
    if (q != expected_state) {
        fail(line.number, "expected row for state " + std::to_string(expected_state) + ", got " +
                              std::to_string(q));
    }
    return trim(line.text.substr(colon + 1));
}

void check_row_count(const std::vector<Line>& lines, const Header& h) {
    const std::size_t rows = lines.size() - 5;
    if (rows != h.state_count) {
        const auto at = rows > h.state_count ? lines[5 + h.state_count].number : lines.back().number;
        fail(at, "expected " + std::to_string(h.state_count) + " state rows, found " +
                     std::to_string(rows));
    }
}

Dfa build_dfa(const std::vector<Line>& lines, Header h) {
    check_row_count(lines, h);
    const std::size_t k = h.alphabet.size();
    std::vector<State> delta;
    delta.reserve(h.state_count * k);
    for (std::size_t q = 0; q < h.state_count; ++q) {
        const auto& line = lines[5 + q];
        auto images = split_ws(row_body(line, q, h.state_count));
        if (images.size() != k) {
            fail(line.number, "expected " + std::to_string(k) + " images, found " +
                                  std::to_string(images.size()));
        }
        for (auto tok : images) {
            delta.push_back(parse_state(tok, line.number, h.state_count));
        }
    }
    return Dfa(std::move(h.alphabet), h.state_count, h.initial, h.finals, std::move(delta));
}

Nfa build_nfa(const std::vector<Line>& lines, Header h) {
    check_row_count(lines, h);
    const std::size_t k = h.alphabet.size();
    std::vector<Nfa::StateSet> delta;
    delta.reserve(h.state_count * k);
    for (std::size_t q = 0; q < h.state_count; ++q) {
        const auto& line = lines[5 + q];
        auto body = row_body(line, q, h.state_count);
        std::size_t cells = 0;
        std::size_t pos = 0;
        while (true) {
            while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) {
                ++pos;
            }
            if (pos == body.size()) {
                break;
            }
            if (body[pos] != '{') {
                fail(line.number, "expected '{' to open a state set");
            }
            auto close = body.find('}', pos);
            if (close == std::string_view::npos) {
                fail(line.number, "unterminated state set");
            }
            Nfa::StateSet cell;
            auto inner = body.substr(pos + 1, close - pos - 1);
            while (!trim(inner).empty()) {
                auto comma = inner.find(',');
                cell.push_back(parse_state(trim(inner.substr(0, comma)), line.number, h.state_count));
                inner = comma == std::string_view::npos ? std::string_view{} : inner.substr(comma + 1);
                if (comma != std::string_view::npos && trim(inner).empty()) {
                    fail(line.number, "trailing ',' in state set");
                }
            }
            delta.push_back(std::move(cell));
            ++cells;
            pos = close + 1;
        }
        if (cells != k) {
            fail(line.number, "expected " + std::to_string(k) + " state sets, found " +
                                  std::to_string(cells));
        }
    }
    return Nfa(std::move(h.alphabet), h.state_count, h.initial, h.finals, std::move(delta));
}

void write_header(std::ostringstream& out, std::string_view kind, const Alphabet& alphabet,
                  std::size_t states, State initial, const std::vector<State>& finals) {
    out << kind << "\nalphabet:";
    for (const auto& l : alphabet.names()) {
        out << ' ' << l;
    }
    out << "\nstates: " << states << "\ninitial: " << initial << "\nfinals:";
    for (State f : finals) {
        out << ' ' << f;
    }
    out << '\n';
}

}  // namespace

std::variant<Dfa, Nfa> parse_automaton(std::string_view text) {
    auto lines = content_lines(text);
    auto header = parse_header(lines);
    if (header.kind == "dfa") {
        return build_dfa(lines, std::move(header));
    }
    return build_nfa(lines, std::move(header));
}

Dfa parse_dfa(std::string_view text) {
    auto lines = content_lines(text);
    auto header = parse_header(lines);
    if (header.kind != "dfa") {
        fail(lines[0].number, "expected 'dfa'");
    }
    return build_dfa(lines, std::move(header));
}

Nfa parse_nfa(std::string_view text) {
    auto lines = content_lines(text);
    auto header = parse_header(lines);
    if (header.kind != "nfa") {
        fail(lines[0].number, "expected 'nfa'");
    }
    return build_nfa(lines, std::move(header));
}

std::string serialize_dfa(const Dfa& d) {
    std::ostringstream out;
    write_header(out, "dfa", d.alphabet(), d.state_count(), d.initial(), d.finals());
    for (State q = 0; q < d.state_count(); ++q) {
        out << q << " :";
        for (Letter a = 0; a < d.letter_count(); ++a) {
            out << ' ' << d.next(q, a);
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_nfa(const Nfa& n) {
    std::ostringstream out;
    write_header(out, "nfa", n.alphabet(), n.state_count(), n.initial(), n.finals());
    for (State q = 0; q < n.state_count(); ++q) {
        out << q << " :";
        for (Letter a = 0; a < n.letter_count(); ++a) {
            out << " {";
            const auto& cell = n.next(q, a);
            for (std::size_t i = 0; i < cell.size(); ++i) {
                out << (i ? "," : "") << cell[i];
            }
            out << '}';
        }
        out << '\n';
    }
    return out.str();
}

std::string to_dot(const Dfa& d) {
    std::ostringstream out;
    out << "digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n";
    for (State q = 0; q < d.state_count(); ++q) {
        out << "  " << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle") << "];\n";
    }
    out << "  start -> " << d.initial() << ";\n";
    for (State q = 0; q < d.state_count(); ++q) {
        // Parallel edges are merged into one comma-separated label.
        std::vector<std::string> labels(d.state_count());
        for (Letter a = 0; a < d.letter_count(); ++a) {
            auto& label = labels[d.next(q, a)];
            label += (label.empty() ? "" : ",") + d.alphabet().name(a);
        }
        for (State p = 0; p < d.state_count(); ++p) {
            if (!labels[p].empty()) {
                out << "  " << q << " -> " << p << " [label=\"" << labels[p] << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace idealmatch
