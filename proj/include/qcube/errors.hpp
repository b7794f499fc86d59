#pragma once

#include <stdexcept>

namespace qcube {

// Error taxonomy shared by the library and the CLI exit codes:
//   InputError    -> exit 2 (bad arguments, malformed files, precondition violations)
//   ResourceError -> exit 3 (a configured size/work cap was exceeded)
//   InternalError -> exit 4 (a mathematical invariant the code relies on failed)
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace qcube
