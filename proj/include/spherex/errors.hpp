#pragma once

#include <stdexcept>
#include <string>

namespace spherex {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct ParseError : Error {
    using Error::Error;
};

// Carries the offending value's canonical text in what().
struct NotRational : Error {
    explicit NotRational(const std::string& value) : Error("not rational: " + value) {}
};

struct NotRootOfUnity : Error {
    explicit NotRootOfUnity(const std::string& value) : Error("not a root of unity: " + value) {}
};

// Bad family parameters or an unknown spec string.
struct SpecError : Error {
    using Error::Error;
};

// Element cap or scan cap exceeded.
struct ResourceError : Error {
    using Error::Error;
};

// Internal consistency failure (fixed points, incomplete catalogs, ...).
struct InternalError : Error {
    using Error::Error;
};

struct IrrationalXi : Error {
    explicit IrrationalXi(const std::string& value) : Error("irrational xi: " + value) {}
};

struct SpinError : Error {
    using Error::Error;
};

}  // namespace spherex
