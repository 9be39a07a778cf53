#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsei {

/// Input violates an operation's precondition (non-coprime weights,
/// non-coinvariant monomial, parity mismatch, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed expression text; carries the 0-based byte offset of the fault.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qsei
