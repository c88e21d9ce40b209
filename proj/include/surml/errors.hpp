#pragma once

#include <stdexcept>
#include <string>

namespace surml {

// Input files or preconditions on user data failed; CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A compute budget expired mid-run; CLI exit code 3.
class ComputeTimeout : public std::runtime_error {
public:
    explicit ComputeTimeout(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace surml
