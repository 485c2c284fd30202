#ifndef CYCTOPE_ERRORS_HPP
#define CYCTOPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyctope {

// Malformed caller data: unknown ids, bad bounds, unparseable files. CLI exit 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap or truncation limit was hit. CLI exit 3.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Back-and-forth extension failed against a non-dense side with stage
// raising disabled. CLI exit 1.
class NoWitnessError : public std::runtime_error {
 public:
  explicit NoWitnessError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cyctope

#endif  // CYCTOPE_ERRORS_HPP
