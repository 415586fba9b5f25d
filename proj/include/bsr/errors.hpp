#pragma once

#include <stdexcept>
#include <string>

namespace bsr {

/// Classifies every failure the library reports. The CLI maps kinds onto
/// exit codes, so new kinds need a mapping there as well.
enum class ErrorKind {
    length_mismatch,
    empty_set,
    zero_width,
    limit_exceeded,
    index_out_of_range,
    size_explosion,
    too_large,
    not_representable,
    uncoverable,
    invalid_element,
    internal_invariant,
    parse_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& detail) {
    throw Error(kind, detail);
}

}  // namespace bsr
