#pragma once

#include <stdexcept>
#include <string>

namespace cell24 {

/// Malformed or inconsistent input (pairing files, CLI arguments).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A vertex correspondence that no isometry realizes, or one that is
/// realizable only orientation-reversingly.
class geometry_error : public std::runtime_error {
public:
    explicit geometry_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace cell24
