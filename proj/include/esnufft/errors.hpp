#pragma once

#include <stdexcept>
#include <string>

namespace esnufft {

// Numeric values are part of the C ABI (see esnufft.h); do not renumber.
enum class Status : int {
  ok = 0,
  bad_tolerance = 1,
  bounds = 2,
  size = 3,
  resource = 4,
  argument = 5,
  data = 6,
  internal = 7,
};

const char* status_name(Status s) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  Status status() const noexcept { return status_; }

 private:
  Status status_;
};

}  // namespace esnufft
