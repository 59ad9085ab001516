#pragma once

#include <stdexcept>
#include <string>

namespace skewq {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A domain precondition does not hold (vertex out of range, edge not
// isolated, no isolated vertex present, ...).
struct precondition_error : error {
    using error::error;
};

// A configured size cap was exceeded.
struct cap_error : error {
    using error::error;
};

// Two computation routes that must agree disagreed.  Signals an
// implementation bug, never bad input.
struct inconsistency_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    parse_error(int line_no, const std::string& message)
        : error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

}  // namespace skewq
