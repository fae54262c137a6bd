#pragma once

#include <stdexcept>
#include <string>

namespace toriclink {

// Bad user input: malformed files, non-pointed cones, index errors.
// CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical identity the engine checks did not hold for valid input.
// Never silently resolved; surfaces in reports. CLI exit code 2.
class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (signals a bug, not bad input).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace toriclink
