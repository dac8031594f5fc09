#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbigeo {

// Precondition violations on otherwise well-formed input.  The CLI maps
// these to exit code 1 ("analysis refused").
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// The log-terminality bracket of an isotropy formula is zero or negative.
class non_klt_error : public usage_error {
public:
    non_klt_error(const std::string& what, std::string point_id = "")
        : usage_error(what), point(std::move(point_id)) {}
    std::string point;
};

// A singularity type outside the isotropy table (E6, E8).
class unsupported_singularity_error : public usage_error {
public:
    explicit unsupported_singularity_error(const std::string& what) : usage_error(what) {}
};

// Scenario text that does not conform to the grammar.  Exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace orbigeo
