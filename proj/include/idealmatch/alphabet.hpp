#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace idealmatch {

/// Index of a letter within its alphabet.
using Letter = std::uint32_t;

/// A word is a sequence of letter indices; its meaning depends on the alphabet.
using Word = std::vector<Letter>;

/// Ordered set of distinct letter names. The order is fixed at construction
/// and determines table columns, canonical numbering and enumeration order.
///
/// Letter names are usually single characters ("a", "b"), but tokens such as
/// "a1" are allowed so that the large-alphabet subsequence witnesses can be
/// written down. A name may not contain whitespace or any of `#{},`.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);
    Alphabet(std::initializer_list<std::string_view> letters);

    /// Single-character letters, one per char of `letters`.
    static Alphabet from_chars(std::string_view letters);

    [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
    [[nodiscard]] const std::string& name(Letter l) const { return letters_.at(l); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return letters_; }
    [[nodiscard]] std::optional<Letter> find(std::string_view name) const;
    [[nodiscard]] Letter at(std::string_view name) const;

    /// True when every letter name is a single character.
    [[nodiscard]] bool single_char() const noexcept { return single_char_; }

    /// Tokenizes `text` into a word. Whitespace-separated tokens are used when
    /// the text contains whitespace; otherwise the longest letter name matching
    /// at each position is taken. Throws input_error naming the offending
    /// letter and its position.
    [[nodiscard]] Word parse_word(std::string_view text) const;

    /// Inverse of parse_word: concatenation for single-char alphabets,
    /// space-separated tokens otherwise.
    [[nodiscard]] std::string format_word(const Word& w) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> letters_;
    bool single_char_ = true;
};

}  // namespace idealmatch
