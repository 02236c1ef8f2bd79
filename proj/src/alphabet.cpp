#include "idealmatch/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "idealmatch/error.hpp"

namespace idealmatch {

namespace {

bool valid_letter_name(std::string_view name) {
    if (name.empty()) {
        return false;
    }
    return std::none_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isspace(c) || c == '#' || c == '{' || c == '}' || c == ',' || !std::isprint(c);
    });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw input_error("alphabet must be non-empty");
    }
    std::set<std::string_view> seen;
    for (const auto& l : letters_) {
        if (!valid_letter_name(l)) {
            throw input_error("invalid letter name '" + l + "'");
        }
        if (!seen.insert(l).second) {
            throw input_error("duplicate letter '" + l + "' in alphabet");
        }
        single_char_ = single_char_ && l.size() == 1;
    }
}

Alphabet::Alphabet(std::initializer_list<std::string_view> letters)
    : Alphabet(std::vector<std::string>(letters.begin(), letters.end())) {}

Alphabet Alphabet::from_chars(std::string_view letters) {
    std::vector<std::string> names;
    names.reserve(letters.size());
    for (char c : letters) {
        names.emplace_back(1, c);
    }
    return Alphabet(std::move(names));
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
    auto it = std::find(letters_.begin(), letters_.end(), name);
    if (it == letters_.end()) {
        return std::nullopt;
    }
    return static_cast<Letter>(it - letters_.begin());
}

Letter Alphabet::at(std::string_view name) const {
    if (auto l = find(name)) {
        return *l;
    }
    throw input_error("unknown letter '" + std::string(name) + "'");
}

Word Alphabet::parse_word(std::string_view text) const {
    Word out;
    const bool spaced = std::any_of(text.begin(), text.end(),
                                    [](unsigned char c) { return std::isspace(c); });
    std::size_t pos = 0;
    std::size_t index = 0;
    if (spaced) {
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
                ++pos;
            }
            if (pos == text.size()) {
                break;
            }
            std::size_t end = pos;
            while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
                ++end;
            }
            auto token = text.substr(pos, end - pos);
            auto l = find(token);
            if (!l) {
                throw input_error("unknown letter '" + std::string(token) + "' at position " +
                                  std::to_string(index));
            }
            out.push_back(*l);
            ++index;
            pos = end;
        }
        return out;
    }
    while (pos < text.size()) {
        std::optional<Letter> best;
        std::size_t best_len = 0;
        for (Letter l = 0; l < letters_.size(); ++l) {
            const auto& name = letters_[l];
            if (name.size() > best_len && text.substr(pos, name.size()) == name) {
                best = l;
                best_len = name.size();
            }
        }
        if (!best) {
            throw input_error("unknown letter '" + std::string(1, text[pos]) + "' at position " +
                              std::to_string(index));
        }
        out.push_back(*best);
        pos += best_len;
        ++index;
    }
    return out;
}

std::string Alphabet::format_word(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_char_ && i > 0) {
            out += ' ';
        }
        out += name(w[i]);
    }
    return out;
}

}  // namespace idealmatch
