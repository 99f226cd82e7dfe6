#pragma once

#include <stdexcept>

namespace quiverfan {

/// An internal invariant the theory guarantees has been violated; indicates
/// a kernel bug, never bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quiverfan
