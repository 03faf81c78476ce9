#pragma once

#include <stdexcept>

namespace superschur {

/// Thrown when an exhaustive method would exceed its configured cap.
/// Callers must raise the cap deliberately rather than silently waiting.
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace superschur
