#include "ups/pl_function.hpp"

#include <algorithm>

namespace ups {

static const Rational kTwo(2);

std::optional<Interval> Interval::intersect(const Interval& a, const Interval& b) {
    Rational lo = a.lo;
    bool lc = a.lo_closed;
    if (b.lo > lo || (b.lo == lo && !b.lo_closed)) {
        lo = b.lo;
        lc = a.lo == b.lo ? (a.lo_closed && b.lo_closed) : b.lo_closed;
    }
    Rational hi = a.hi;
    bool hc = a.hi_closed;
    if (b.hi < hi || (b.hi == hi && !b.hi_closed)) {
        hi = b.hi;
        hc = a.hi == b.hi ? (a.hi_closed && b.hi_closed) : b.hi_closed;
    }
    if (lo > hi) return std::nullopt;
    if (lo == hi && !(lc && hc)) return std::nullopt;
    return Interval(lo, hi, lc, hc);
}

PLFunction PLFunction::from_segments(Rational anchor, std::vector<Rational> breakpoints,
                                     std::vector<long long> slopes) {
    if (slopes.size() != breakpoints.size() + 1)
        throw ArgumentError("slope count must be breakpoint count + 1");
    for (size_t i = 0; i < breakpoints.size(); ++i) {
        if (breakpoints[i] <= Rational(0) || breakpoints[i] >= kTwo)
            throw ArgumentError("breakpoint outside (0,2): " + breakpoints[i].str());
        if (i > 0 && breakpoints[i] <= breakpoints[i - 1])
            throw ArgumentError("breakpoints not strictly increasing");
    }
    PLFunction f;
    f.anchor_ = std::move(anchor);
    f.breaks_.clear();
    f.slopes_.clear();
    f.slopes_.push_back(slopes[0]);
    for (size_t i = 0; i < breakpoints.size(); ++i) {
        if (slopes[i + 1] != f.slopes_.back()) {
            f.breaks_.push_back(breakpoints[i]);
            f.slopes_.push_back(slopes[i + 1]);
        }
    }
    return f;
}

Rational PLFunction::eval(const Rational& t) const {
    if (t < Rational(0) || t > kTwo)
        throw DomainError("eval outside [0,2] at t = " + t.str());
    Rational value = anchor_;
    Rational prev(0);
    for (size_t i = 0; i < breaks_.size(); ++i) {
        if (t <= breaks_[i]) {
            return value + (t - prev) * Rational(slopes_[i]);
        }
        value += (breaks_[i] - prev) * Rational(slopes_[i]);
        prev = breaks_[i];
    }
    return value + (t - prev) * Rational(slopes_.back());
}

PLFunction PLFunction::operator+(const PLFunction& o) const {
    std::vector<Rational> merged;
    merged.reserve(breaks_.size() + o.breaks_.size());
    std::merge(breaks_.begin(), breaks_.end(), o.breaks_.begin(), o.breaks_.end(),
               std::back_inserter(merged));
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    std::vector<long long> slopes;
    slopes.reserve(merged.size() + 1);
    size_t ia = 0, ib = 0;
    slopes.push_back(slopes_[0] + o.slopes_[0]);
    for (const auto& b : merged) {
        if (ia < breaks_.size() && breaks_[ia] == b) ++ia;
        if (ib < o.breaks_.size() && o.breaks_[ib] == b) ++ib;
        slopes.push_back(slopes_[ia] + o.slopes_[ib]);
    }
    return from_segments(anchor_ + o.anchor_, std::move(merged), std::move(slopes));
}

PLFunction PLFunction::operator-() const {
    PLFunction f = *this;
    f.anchor_ = -f.anchor_;
    for (auto& s : f.slopes_) s = -s;
    return f;
}

PLFunction PLFunction::scaled(long long n) const {
    if (n == 0) return PLFunction();
    PLFunction f = *this;
    f.anchor_ = f.anchor_ * Rational(n);
    for (auto& s : f.slopes_) s *= n;
    return f;
}

PLFunction PLFunction::reflected() const {
    std::vector<Rational> rb;
    std::vector<long long> rs;
    rb.reserve(breaks_.size());
    rs.reserve(slopes_.size());
    for (auto it = breaks_.rbegin(); it != breaks_.rend(); ++it) rb.push_back(kTwo - *it);
    for (auto it = slopes_.rbegin(); it != slopes_.rend(); ++it) rs.push_back(-*it);
    return from_segments(eval(kTwo), std::move(rb), std::move(rs));
}

std::vector<SlopeChange> PLFunction::singularities() const {
    std::vector<SlopeChange> out;
    out.reserve(breaks_.size());
    for (size_t i = 0; i < breaks_.size(); ++i)
        out.push_back(SlopeChange{breaks_[i], slopes_[i], slopes_[i + 1]});
    return out;
}

long long PLFunction::slope_after(const Rational& t) const {
    if (t < Rational(0) || t >= kTwo) throw DomainError("slope_after needs t in [0,2)");
    size_t i = 0;
    while (i < breaks_.size() && breaks_[i] <= t) ++i;
    return slopes_[i];
}

long long PLFunction::max_slope() const { return *std::max_element(slopes_.begin(), slopes_.end()); }
long long PLFunction::min_slope() const { return *std::min_element(slopes_.begin(), slopes_.end()); }

std::string PLFunction::str() const {
    if (is_zero()) return "0";
    long long tau = -slope_at_zero();
    if (*this == upsilon_simple(tau)) {
        if (tau == 1) return "-1+|1-t|";
        if (tau == -1) return "1-|1-t|";
        return std::to_string(tau) + "*(-1+|1-t|)";
    }
    std::string s = "pl{0:" + std::to_string(slopes_[0]);
    for (size_t i = 0; i < breaks_.size(); ++i)
        s += ", " + breaks_[i].str() + ":" + std::to_string(slopes_[i + 1]);
    return s + "}";
}

PLFunction upsilon_simple(long long tau) {
    if (tau == 0) return PLFunction();
    return PLFunction::from_segments(Rational(0), {Rational(1)}, {-tau, tau});
}

}  // namespace ups
