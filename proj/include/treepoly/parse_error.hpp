#pragma once

#include <stdexcept>
#include <string>

namespace treepoly {

/// Thrown by the text parsers. `position` is a 0-based byte offset into the
/// offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace treepoly
