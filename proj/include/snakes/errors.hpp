#pragma once

#include <stdexcept>
#include <string>

namespace snakes {

// Bad arguments from the caller: malformed words, out-of-range sizes.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Two independent computations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A structural law of toggling dynamics failed on concrete data.
class TheoremViolation : public std::runtime_error {
public:
    explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace snakes
