#pragma once

#include <stdexcept>

namespace slicekit {

/// Bad user-supplied parameters or malformed input data.
class invalid_input : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A checked internal consistency condition failed.
class internal_error : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace slicekit
