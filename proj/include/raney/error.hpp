#pragma once

#include <stdexcept>
#include <string>

namespace raney {

// Base class for all library-specific failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A canonical code that violates the deficit invariant (corrupt input).
class MalformedCodeError : public Error {
public:
    explicit MalformedCodeError(const std::string& what) : Error(what) {}
};

// An operation was applied to a diagram whose (p, r) parameters do not
// satisfy the operation's requirement (e.g. edge subdivision needs r == p).
class ParameterMismatchError : public Error {
public:
    explicit ParameterMismatchError(const std::string& what) : Error(what) {}
};

// An enumeration would have to visit more objects than the configured cap.
class SizeLimitError : public Error {
public:
    SizeLimitError(const std::string& what, unsigned long long cap)
        : Error(what), cap(cap) {}

    unsigned long long cap;
};

}  // namespace raney
