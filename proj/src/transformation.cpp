#include "idealmatch/transformation.hpp"

#include <numeric>
#include <set>
#include <string>

#include "idealmatch/error.hpp"

namespace idealmatch {

namespace {

void check_in_range(std::size_t n, State q) {
    if (q >= n) {
        throw input_error("transformation: state " + std::to_string(q) + " out of range (n = " +
                          std::to_string(n) + ")");
    }
}

}  // namespace

Transformation::Transformation(std::vector<State> image) : image_(std::move(image)) {
    for (State q : image_) {
        check_in_range(image_.size(), q);
    }
}

Transformation Transformation::identity(std::size_t n) {
    std::vector<State> image(n);
    std::iota(image.begin(), image.end(), State{0});
    return Transformation(std::move(image));
}

Transformation Transformation::cycle(std::size_t n, std::initializer_list<State> states) {
    return cycle(n, std::vector<State>(states));
}

Transformation Transformation::cycle(std::size_t n, const std::vector<State>& states) {
    auto image = identity(n).image_;
    std::set<State> seen;
    for (State q : states) {
        check_in_range(n, q);
        if (!seen.insert(q).second) {
            throw input_error("transformation: repeated state in cycle");
        }
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        image[states[i]] = states[(i + 1) % states.size()];
    }
    return Transformation(std::move(image));
}

Transformation Transformation::cycle_range(std::size_t n, State from, State to) {
    std::vector<State> states;
    for (State q = from; q <= to; ++q) {
        states.push_back(q);
    }
    return cycle(n, states);
}

Transformation Transformation::shift_up(std::size_t n, State from, State to) {
    auto image = identity(n).image_;
    for (State q = from; q <= to && q < n; ++q) {
        check_in_range(n, q + 1);
        image[q] = q + 1;
    }
    return Transformation(std::move(image));
}

Transformation Transformation::shift_down(std::size_t n, State from, State to) {
    auto image = identity(n).image_;
    for (State q = from; q <= to && q < n; ++q) {
        if (q == 0) {
            throw input_error("transformation: cannot shift state 0 down");
        }
        image[q] = q - 1;
    }
    return Transformation(std::move(image));
}

Transformation Transformation::point(std::size_t n, State from, State to) {
    check_in_range(n, from);
    check_in_range(n, to);
    auto image = identity(n).image_;
    image[from] = to;
    return Transformation(std::move(image));
}

Transformation Transformation::then(const Transformation& next) const {
    if (next.size() != size()) {
        throw input_error("transformation: composing maps on sets of different size");
    }
    std::vector<State> image(size());
    for (std::size_t q = 0; q < size(); ++q) {
        image[q] = next(image_[q]);
    }
    return Transformation(std::move(image));
}

}  // namespace idealmatch
