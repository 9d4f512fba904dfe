#pragma once

#include <stdexcept>
#include <string>

namespace pmin {

// An enumeration produced more items than its configured cap allows.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// An instance is too large for an exponential-size sweep or table.
struct too_large : std::runtime_error {
    explicit too_large(const std::string& what) : std::runtime_error(what) {}
};

// A checker was called on an instance outside its stated domain.
struct precondition_violated : std::invalid_argument {
    explicit precondition_violated(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input text; line numbers are 1-based.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace pmin
