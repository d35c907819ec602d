#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmp {

// Input syntax problem (graph6 and friends); carries the byte offset of the
// offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Instance exceeds a hard representation or solver limit.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A generator's post-construction self-check failed, or an audited claim was
// contradicted by the solvers.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dmp
