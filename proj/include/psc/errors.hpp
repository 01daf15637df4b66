#pragma once

#include <stdexcept>
#include <string>

namespace psc {

// Expression text did not conform to the grammar. `position` is the
// 1-based character offset of the offending token.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::string message, std::size_t position)
        : std::invalid_argument(std::move(message)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An algebra definition file is malformed. `line` is 1-based.
class FileFormatError : public std::invalid_argument {
public:
    FileFormatError(std::string message, std::size_t line)
        : std::invalid_argument(std::move(message)), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A documented operation precondition was violated (e.g. weight
// decomposition requested on an uncertified algebra).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& message)
        : std::logic_error(message) {}
};

}  // namespace psc
