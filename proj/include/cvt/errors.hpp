#pragma once

#include <stdexcept>
#include <string>

namespace cvt {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value or intermediate result does not fit in the supported 63-bit range.
class overflow_error : public error {
public:
    using error::error;
};

/// Malformed input: digit out of range for the radix, or radix below 2.
class malformed_input : public error {
public:
    using error::error;
};

/// A size parameter is outside the supported desk-scale range.
class range_error : public error {
public:
    using error::error;
};

/// An orbit failed to reach its fixed point within the iteration cap.
class cap_exceeded : public error {
public:
    using error::error;
};

} // namespace cvt
