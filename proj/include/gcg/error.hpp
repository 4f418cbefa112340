#pragma once

#include <stdexcept>
#include <string>

namespace gcg {

// Caller handed us something invalid: unknown catalog id, bad parameter
// combination, output-path conflict. Maps to CLI exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// The computation itself failed: non-monotone bracket, copy-count cap,
// missing axis-parallel edge. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gcg
