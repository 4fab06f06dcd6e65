#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

// Malformed input or a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query needs factors longer than the oracle horizon.
class HorizonExceeded : public Error {
 public:
  HorizonExceeded(const std::string& what, std::size_t required)
      : Error(what + " (requires horizon " + std::to_string(required) + ")"),
        required_(required) {}
  std::size_t required() const noexcept { return required_; }

 private:
  std::size_t required_;
};

}  // namespace symdyn
