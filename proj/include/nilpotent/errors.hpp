#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nilpotent {

/// Malformed textual input (word grammar, ring names, JSON payloads).
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string &what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string &what) : std::invalid_argument(what) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_ = 0;
};

/// Well-formed input that the mathematics rejects (trivial word given to
/// the witness search, mismatched contexts, non-unit constant term, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace nilpotent
