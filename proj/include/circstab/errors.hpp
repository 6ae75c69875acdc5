#pragma once

#include <stdexcept>
#include <string>

namespace circstab {

// Invalid parameters or malformed connection sets. CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configured size cap was exceeded. CLI maps this to exit code 3.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace circstab
