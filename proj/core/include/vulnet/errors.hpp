#pragma once

#include <stdexcept>
#include <string>

namespace vulnet {

// failure while reading an input file; line is 1-based
struct parse_error : std::runtime_error {
    int line;
    parse_error(const std::string& msg, int line_number)
        : std::runtime_error(msg + " (line " + std::to_string(line_number) + ")"),
          line(line_number) {}
};

// a documented precondition was violated by the caller
struct contract_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// work refused or cut short because it would exceed a configured budget
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vulnet
