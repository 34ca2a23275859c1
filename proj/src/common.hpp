#pragma once

#include <stdexcept>
#include <string>

namespace tatehh {

// usage errors (bad shapes, mismatched moduli, violated preconditions)
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tatehh
