#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ups/rational.hpp"

namespace ups {

// A point where the slope jumps.
struct SlopeChange {
    Rational t;        // in (0,2)
    long long before;  // slope on the left
    long long after;   // slope on the right
    long long delta() const { return after - before; }

    bool operator==(const SlopeChange&) const = default;
};

// Interval with rational endpoints and open/closed flags.
struct Interval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    Interval() = default;
    Interval(Rational l, Rational h, bool lc = true, bool hc = true)
        : lo(std::move(l)), hi(std::move(h)), lo_closed(lc), hi_closed(hc) {
        if (lo > hi) throw ArgumentError("interval with lo > hi");
        if (lo == hi && !(lo_closed && hi_closed))
            throw ArgumentError("degenerate interval must be closed");
    }
    static Interval point(const Rational& t) { return Interval(t, t); }

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& t) const {
        if (t < lo || t > hi) return false;
        if (t == lo && !lo_closed) return false;
        if (t == hi && !hi_closed) return false;
        return true;
    }
    // every point of *this is <= every point of `other`, with no shared point
    friend bool strictly_before(const Interval& a, const Interval& b) {
        if (a.hi < b.lo) return true;
        // touching endpoints certify only when both sides exclude the point
        if (a.hi == b.lo) return !a.hi_closed && !b.lo_closed;
        return false;
    }
    bool subset_of(const Interval& o) const {
        bool lo_ok = lo > o.lo || (lo == o.lo && (o.lo_closed || !lo_closed));
        bool hi_ok = hi < o.hi || (hi == o.hi && (o.hi_closed || !hi_closed));
        return lo_ok && hi_ok;
    }
    // empty optional when the intersection is empty
    static std::optional<Interval> intersect(const Interval& a, const Interval& b);

    std::string str() const {
        return std::string(lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() +
               (hi_closed ? "]" : ")");
    }
    bool operator==(const Interval&) const = default;
};

// Piecewise linear function on [0,2] with integer slopes, represented by
// the value at 0, the interior breakpoints and one slope per segment.
// Canonical: adjacent slopes differ, so breakpoints are exactly the
// singularities. Values at breakpoints are always derived, never stored.
class PLFunction {
public:
    // the zero function
    PLFunction() : anchor_(0), slopes_{0} {}

    // canonicalizes (merges equal adjacent slopes); throws ArgumentError on
    // unsorted/out-of-range breakpoints or slope count mismatch
    static PLFunction from_segments(Rational anchor, std::vector<Rational> breakpoints,
                                    std::vector<long long> slopes);

    const Rational& anchor() const { return anchor_; }
    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<long long>& slopes() const { return slopes_; }

    bool is_zero() const { return breaks_.empty() && slopes_[0] == 0 && anchor_.is_zero(); }
    long long slope_at_zero() const { return slopes_.front(); }

    Rational eval(const Rational& t) const;

    PLFunction operator+(const PLFunction& o) const;
    PLFunction operator-() const;
    PLFunction operator-(const PLFunction& o) const { return *this + (-o); }
    PLFunction scaled(long long n) const;

    // t -> f(2 - t)
    PLFunction reflected() const;

    // all slope changes, ordered by t ascending
    std::vector<SlopeChange> singularities() const;
    std::optional<SlopeChange> first_singularity() const {
        auto s = singularities();
        if (s.empty()) return std::nullopt;
        return s.front();
    }
    // slope on the segment containing t on its right, i.e. at t + epsilon
    long long slope_after(const Rational& t) const;

    long long max_slope() const;
    long long min_slope() const;

    bool operator==(const PLFunction&) const = default;

    // compact human form: "-1+|1-t|", "3*(-1+|1-t|)", "0", or a breakpoint list
    std::string str() const;

private:
    Rational anchor_;
    std::vector<Rational> breaks_;
    std::vector<long long> slopes_;
};

// tau * (-1 + |1-t|); the zero function for tau = 0
PLFunction upsilon_simple(long long tau);

}  // namespace ups
