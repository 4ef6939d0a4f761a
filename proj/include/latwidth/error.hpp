#pragma once
#include <stdexcept>
#include <string>

namespace lw {

// every failure carries a short machine-readable code ("EmptyPointSet", ...)
struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

}  // namespace lw
