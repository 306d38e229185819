#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ups/pl_function.hpp"

namespace ups {

// The structural constraints every Upsilon function satisfies, checkable
// on a candidate PL profile. Checks against claimed tau / g4 / gc run only
// when the claim is supplied; absent claims pass vacuously.
enum class Axiom {
    Symmetry,        // f(t) = f(2-t)
    IntegerSlopes,   // enforced by the representation
    ZeroAtZero,      // f(0) = 0
    SlopeAtZero,     // slope at 0 equals -tau
    EvenJumps,       // t * (slope jump at t) is an even integer
    FourGenusBound,  // |f(t)| <= t*g4 on [0,1]
    MaxSlopeBound,   // max slope <= gc
};

const char* axiom_name(Axiom a);

struct AxiomCheck {
    Axiom axiom;
    bool applicable;  // false when the needed claim is absent
    bool passed;      // true when not applicable
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const AxiomCheck* find(Axiom a) const {
        for (const auto& c : checks)
            if (c.axiom == a) return &c;
        return nullptr;
    }
};

struct CandidateClaims {
    std::optional<long long> tau;
    std::optional<long long> g4;
    std::optional<long long> gc;
};

ValidationReport validate_candidate(const PLFunction& f, const CandidateClaims& claims = {});

// Admissible locations in (0,1] for a slope change m1 -> m2, from the even
// integrality of t * (m2 - m1). A |jump| of 1 is impossible; a jump of 2
// forces t = 1 and m2 = -m1 in {1,-1}.
struct CandidateSet {
    std::vector<Rational> candidates;  // empty iff rejected
    bool rejected = false;
    std::string reason;
};
CandidateSet singularity_candidates(long long m1, long long m2);

// Closed window [1/gc, (2gc-1)/gc] containing every singularity of a knot
// with concordance genus gc.
Interval gc_window(long long gc);

}  // namespace ups
