#ifndef LICOL_ERRORS_HPP
#define LICOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace licol {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Domain violations: bad vertex ids, malformed assignments, mismatched sizes.
struct invalid_argument_error : error {
    explicit invalid_argument_error(const std::string& msg) : error(msg) {}
};

// Malformed input text (graph files, assignment documents).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// An enumeration would exceed the configured work budget. Callers must opt
// in explicitly to run anyway; there is no silent truncation.
struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};

} // namespace licol

#endif // LICOL_ERRORS_HPP
