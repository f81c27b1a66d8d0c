#pragma once

#include <stdexcept>
#include <string>

namespace bredon {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input (matrix file, corpus entry, flag value).
class InputError : public Error {
public:
    using Error::Error;
};

/// A caller violated an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap (group order, prime search) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Internal consistency check failed; indicates a bug or tolerance failure.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace bredon
