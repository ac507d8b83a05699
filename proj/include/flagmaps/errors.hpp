#pragma once

#include <stdexcept>
#include <string>

namespace flagmaps {

/// Malformed or out-of-contract input (bad tag, wrong rank, syntax error...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (terms, orbit size, n) was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace flagmaps
