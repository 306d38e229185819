#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ups/pl_function.hpp"

namespace ups {

// Integer range, possibly half-open on either side.
struct IntRange {
    std::optional<long long> lo, hi;

    bool known() const { return lo || hi; }
    bool exact() const { return lo && hi && *lo == *hi; }
    std::optional<long long> exact_value() const {
        if (exact()) return *lo;
        return std::nullopt;
    }
    bool empty() const { return lo && hi && *lo > *hi; }
    // true when the whole range is on one side of zero
    bool excludes_zero() const { return (lo && *lo > 0) || (hi && *hi < 0); }

    static IntRange at(long long v) { return IntRange{v, v}; }
    static IntRange at_most(long long v) { return IntRange{std::nullopt, v}; }
    static IntRange at_least(long long v) { return IntRange{v, std::nullopt}; }

    // intersection; empty() afterwards signals contradictory facts
    IntRange meet(const IntRange& o) const {
        IntRange r = *this;
        if (o.lo && (!r.lo || *o.lo > *r.lo)) r.lo = o.lo;
        if (o.hi && (!r.hi || *o.hi < *r.hi)) r.hi = o.hi;
        return r;
    }
    IntRange operator+(const IntRange& o) const {
        IntRange r;
        if (lo && o.lo) r.lo = *lo + *o.lo;
        if (hi && o.hi) r.hi = *hi + *o.hi;
        return r;
    }
    IntRange negated() const {
        IntRange r;
        if (hi) r.lo = -*hi;
        if (lo) r.hi = -*lo;
        return r;
    }
    std::string str() const {
        auto s = [](const std::optional<long long>& v) {
            return v ? std::to_string(*v) : std::string("?");
        };
        return "[" + s(lo) + "," + s(hi) + "]";
    }
    bool operator==(const IntRange&) const = default;
};

// Two-sided exact PL bound, meaningful on valid_on only.
struct Envelope {
    PLFunction lower, upper;
    Interval valid_on;
    bool operator==(const Envelope&) const = default;
};

struct NoSingularity {
    bool operator==(const NoSingularity&) const = default;
};
// What is known about the location of the first slope change:
// nothing, provably none (exact zero-slope-change profile), an exact t,
// or a window.
using FirstSing = std::variant<std::monostate, NoSingularity, Rational, Interval>;

using UpsilonInfo = std::variant<std::monostate, PLFunction, Envelope>;

struct TraceEntry {
    std::string rule;
    std::string detail;
};

// Best-known invariant record for a knot expression. Fields stay unset
// when no rule determines them; rules never guess.
struct KnotFacts {
    std::optional<long long> tau;
    // when epsilon is unknown a cable's tau is only known up to a case
    // set; deciders must then succeed under every listed value
    std::vector<long long> tau_cases;
    std::optional<int> epsilon;  // -1, 0, 1
    std::optional<long long> sigma;
    UpsilonInfo upsilon;
    IntRange upsilon1;  // bounds on the value at t=1; collapsed = exact
    IntRange g3, g4, gc, gamma4;
    FirstSing first_sing;
    std::optional<long long> alpha;  // slope just after the first singularity
    bool top_slice = false;
    std::vector<TraceEntry> trace;

    bool tau_known() const { return tau.has_value(); }
    // certified nonzero: exact and nonzero, or nonzero in every case
    bool tau_nonzero() const {
        if (tau) return *tau != 0;
        if (!tau_cases.empty()) {
            for (long long v : tau_cases)
                if (v == 0) return false;
            return true;
        }
        return false;
    }
    std::optional<long long> upsilon1_exact() const { return upsilon1.exact_value(); }
    bool upsilon1_nonzero() const { return upsilon1.excludes_zero(); }

    const PLFunction* exact_upsilon() const { return std::get_if<PLFunction>(&upsilon); }
    const Envelope* upsilon_envelope() const { return std::get_if<Envelope>(&upsilon); }
    // exact profile equal to tau*(-1+|1-t|)
    bool upsilon_simple_known() const {
        const PLFunction* f = exact_upsilon();
        return f && tau && *f == ::ups::upsilon_simple(*tau);
    }
    std::optional<Rational> first_sing_exact() const {
        if (const Rational* t = std::get_if<Rational>(&first_sing)) return *t;
        return std::nullopt;
    }
    // window containing the first singularity, when anything is known
    std::optional<Interval> first_sing_window() const {
        if (const Rational* t = std::get_if<Rational>(&first_sing)) return Interval::point(*t);
        if (const Interval* w = std::get_if<Interval>(&first_sing)) return *w;
        return std::nullopt;
    }
    // largest s such that (0,s) is certified singularity-free; 0 if none
    Rational sing_free_radius() const;

    void note(std::string rule, std::string detail) {
        trace.push_back(TraceEntry{std::move(rule), std::move(detail)});
    }
};

struct Violation {
    std::string check;
    std::string detail;
};

// Cross-field sanity: exact upsilon vs tau/upsilon1/first_sing, envelope
// ordering, range emptiness, |tau| <= g4, top_slice => sigma = 0.
std::vector<Violation> consistency_check(const KnotFacts& f);

}  // namespace ups
