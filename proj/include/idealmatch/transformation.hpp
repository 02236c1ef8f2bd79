#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace idealmatch {

using State = std::uint32_t;

/// A total map on {0, ..., n-1}, stored as its image array. Witness DFAs are
/// defined letter by letter through these.
///
/// Composition follows the left-to-right convention: `s.then(t)` maps q to
/// t(s(q)).
class Transformation {
public:
    explicit Transformation(std::vector<State> image);

    static Transformation identity(std::size_t n);

    /// The cycle q0 -> q1 -> ... -> q_{k-1} -> q0; all other states fixed.
    /// A cycle of length 0 or 1 is the identity.
    static Transformation cycle(std::size_t n, std::initializer_list<State> states);
    static Transformation cycle(std::size_t n, const std::vector<State>& states);

    /// The cycle (from, from+1, ..., to).
    static Transformation cycle_range(std::size_t n, State from, State to);

    /// q -> q+1 for from <= q <= to, identity elsewhere.
    static Transformation shift_up(std::size_t n, State from, State to);

    /// q -> q-1 for from <= q <= to, identity elsewhere.
    static Transformation shift_down(std::size_t n, State from, State to);

    /// Sends `from` to `to`, identity elsewhere.
    static Transformation point(std::size_t n, State from, State to);

    [[nodiscard]] std::size_t size() const noexcept { return image_.size(); }
    [[nodiscard]] State operator()(State q) const { return image_.at(q); }
    [[nodiscard]] const std::vector<State>& image() const noexcept { return image_; }

    [[nodiscard]] Transformation then(const Transformation& next) const;

    bool operator==(const Transformation&) const = default;

private:
    std::vector<State> image_;
};

}  // namespace idealmatch
