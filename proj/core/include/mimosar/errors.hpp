#ifndef MIMOSAR_ERRORS_HPP
#define MIMOSAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mimosar {

/// Exit codes used by the CLI. 0 = success, 1 = unexpected.
enum class ErrorCode : int {
  ok = 0,
  validation = 2,
  insufficient_gcps = 3,
  ill_conditioned = 4,
  io = 5,
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientGcpsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IllConditionedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mimosar

#endif
