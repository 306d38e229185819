#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "ups/common.hpp"

namespace ups {

// Exact fraction over int64. Always stored reduced with positive
// denominator. Arithmetic goes through 128-bit intermediates and throws
// OverflowError instead of wrapping; there is no floating point here.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) {
            nn = -nn;
            dd = -dd;
        }
        assign_reduced(nn, dd);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return make(n, d);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // floor of the exact quotient num/den
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    // rendered "num/den", e.g. "2/3", "-1/1"
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    // accepts "num/den" or a bare integer "num"
    static Rational parse(const std::string& s);

private:
    static Rational make(__int128 n, __int128 d) {
        Rational r;
        r.assign_reduced(n, d);
        return r;
    }
    void assign_reduced(__int128 n, __int128 d) {
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a != 0) {
            n /= a;
            d /= a;
        } else {
            d = 1;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw OverflowError("rational exceeds 64-bit range");
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }

    long long num_;
    long long den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational Rational::parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Rational(n);
        }
        long long n = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(s);
        long long d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw std::invalid_argument(s);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw ParseError(0, "rational", "not a rational: '" + s + "'");
    }
}

}  // namespace ups
