#pragma once

#include <stdexcept>
#include <string>

namespace twalg {

// Violated precondition or domain constraint (CLI exit code 1).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input literal or config (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kExactTol = 1e-9;
inline constexpr double kLaurentTol = 1e-6;
inline constexpr int kDefaultGrid = 64;

}  // namespace twalg
