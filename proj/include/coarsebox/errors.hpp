#pragma once

#include <stdexcept>
#include <string>

namespace coarsebox {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// A branch the underlying theorem forbids was reached. Signals an
// implementation bug, never expected in a correct build. CLI exit code 3.
class InternalContradictionError : public std::logic_error {
public:
    explicit InternalContradictionError(const std::string& what) : std::logic_error(what) {}
};

// A configured size cap was exceeded. CLI exit code 2.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace coarsebox
