#pragma once

#include <stdexcept>
#include <string>

namespace idealmatch {

/// Raised for malformed or out-of-contract input: unknown letters, bad
/// state indices, alphabet mismatches, parameters below a family minimum.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace idealmatch
