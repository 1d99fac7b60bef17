#ifndef CWTK_ERRORS_HPP
#define CWTK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cwtk {

// Malformed textual input (graph6, edge list, config files).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    static ParseError at_line(const std::string& message, std::size_t line) {
        ParseError e(message + " (at line " + std::to_string(line) + ")");
        e.line_ = line;
        return e;
    }

    std::size_t offset() const { return offset_; }
    std::size_t line() const { return line_; }

private:
    explicit ParseError(std::string message) : std::runtime_error(std::move(message)) {}
    std::size_t offset_ = 0;
    std::size_t line_ = 0;
};

// Input exceeds a solver's configured exact-computation limit.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cwtk

#endif
