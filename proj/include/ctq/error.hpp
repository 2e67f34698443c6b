#pragma once

#include <stdexcept>
#include <string>

namespace ctq {

// Bad input: malformed task files, non-positive bursts, empty sets, bad ranges.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A schedule or trace that breaks one of its structural invariants.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ctq
