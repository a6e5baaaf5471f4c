#ifndef MERITRANK_ERRORS_HPP
#define MERITRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace meritrank {

// File could not be read or written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input exists but does not conform to its documented format.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration key/value rejected by validation.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace meritrank

#endif
