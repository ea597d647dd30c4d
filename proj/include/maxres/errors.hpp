// Copyright (c) 2026 maxres contributors
// Distributed under the MIT license.

#pragma once

#include <stdexcept>
#include <string>

namespace maxres {

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Thrown when a configured clause/space cap is exceeded (pure resolution can
// blow up exponentially in the induced width).
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace maxres
