#pragma once

#include <stdexcept>
#include <string>

namespace singclass {

/// Syntax error in one of the text grammars, with the 0-based offset of the
/// offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A value that parses but violates a precondition of the requested operation.
class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace singclass
