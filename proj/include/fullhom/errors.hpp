#ifndef FULLHOM_ERRORS_HPP
#define FULLHOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fullhom {

// Thrown when a construction would exceed the 32-vertex capacity.
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

// Malformed graph6 input; offset is the byte position of the first bad byte.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace fullhom

#endif
