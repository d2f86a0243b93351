#pragma once

#include <stdexcept>
#include <string>

namespace parkrl {

// Bad layout / config contents. Surfaced by the CLI as a usage error.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// API misuse, e.g. stepping a finished episode.
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

struct InvalidActionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite loss or target during an update.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace parkrl
