#pragma once

#include <stdexcept>
#include <string>

namespace hopspan {

/// Base class for input validation failures (bad files, malformed point
/// sets, edges outside the unit disk graph). Precondition violations on
/// library calls throw std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopspan
