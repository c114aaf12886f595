#pragma once

#include <stdexcept>
#include <string>

namespace tl {

// Domain error raised by library operations. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tl
