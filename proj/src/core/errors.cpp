#include "esnufft/errors.hpp"

namespace esnufft {

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::ok: return "ok";
    case Status::bad_tolerance: return "bad tolerance";
    case Status::bounds: return "point out of bounds";
    case Status::size: return "size error";
    case Status::resource: return "resource limit exceeded";
    case Status::argument: return "invalid argument";
    case Status::data: return "non-finite input data";
    case Status::internal: return "internal error";
  }
  return "unknown status";
}

}  // namespace esnufft
