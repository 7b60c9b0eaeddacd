// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include <stdexcept>

namespace beamsim {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Full command-line driver. Returns 0 on success, 1 on validation or
// configuration errors, 2 on I/O errors.
int run_cli(int argc, const char *const *argv);

} // namespace beamsim
