#ifndef EVOMINE_ERRORS_HPP
#define EVOMINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evomine {

// Invalid configuration (bad threshold, inconsistent window bounds, ...).
// The CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data. Carries a 1-based line number when the error comes
// from a stream file (0 when not applicable). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A violated internal invariant. CLI exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace evomine

#endif
