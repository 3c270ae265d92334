#pragma once

#include <stdexcept>
#include <string>

namespace reflexa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible coefficient fields or ambient rings.
struct RingMismatchError : Error {
  using Error::Error;
};

// Exponent-vector length or matrix shape disagreement.
struct DimensionError : Error {
  using Error::Error;
};

// Polynomial or script text errors; positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  int line = 0;
  int col = 0;
};

}  // namespace reflexa
