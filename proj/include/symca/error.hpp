#pragma once

#include <stdexcept>
#include <string>

namespace symca {

enum class ErrorCode {
    Domain,
    Parse,
    Unsupported,
    CapExceeded,
    InvalidLattice,
    Mismatch,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure carrying the 0-based offset of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(ErrorCode::Parse,
                message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace symca
