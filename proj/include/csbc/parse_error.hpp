#pragma once

#include <stdexcept>

namespace csbc {

/// Malformed textual input (inequality rows, information expressions, scenario files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace csbc
