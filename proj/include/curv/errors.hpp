#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curv {

// Input text could not be parsed; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A documented precondition was violated (wrong network kind, bad edge id,
// unbalanced transport instance, curvature undefined for the input).
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace curv
