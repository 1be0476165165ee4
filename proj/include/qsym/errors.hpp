#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

// Violated operation precondition (bad shape, wrong variable count, ...).
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual or JSON input.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a polynomial grows past the configured term bound.
class term_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qsym
