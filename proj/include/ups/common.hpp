#pragma once

#include <stdexcept>
#include <string>

namespace ups {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// t outside the function domain, division by zero, etc.
struct DomainError : Error {
    using Error::Error;
};

// bad arguments to an operation (non-coprime cable, gc < 1, ...)
struct ArgumentError : Error {
    using Error::Error;
};

// int64 arithmetic left the representable range; exactness is never
// traded for wrap-around
struct OverflowError : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t offset;
    std::string expected;
    ParseError(size_t off, const std::string& exp, const std::string& msg)
        : Error(msg), offset(off), expected(exp) {}
};

// a facts document violated a structural invariant; names the axiom
struct IngestError : Error {
    std::string axiom;
    IngestError(const std::string& ax, const std::string& msg) : Error(msg), axiom(ax) {}
};

struct DeriveError : Error {
    using Error::Error;
};

struct CertificateError : Error {
    using Error::Error;
};

// int64 product that throws instead of wrapping
inline long long checked_mul(long long a, long long b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw OverflowError("integer product exceeds 64-bit range");
    return static_cast<long long>(p);
}
inline long long checked_add(long long a, long long b) {
    __int128 s = static_cast<__int128>(a) + b;
    if (s > INT64_MAX || s < INT64_MIN) throw OverflowError("integer sum exceeds 64-bit range");
    return static_cast<long long>(s);
}

}  // namespace ups
