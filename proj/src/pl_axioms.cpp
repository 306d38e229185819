#include "ups/pl_axioms.hpp"

namespace ups {

const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Symmetry: return "symmetry";
        case Axiom::IntegerSlopes: return "integer-slopes";
        case Axiom::ZeroAtZero: return "zero-at-zero";
        case Axiom::SlopeAtZero: return "slope-at-zero";
        case Axiom::EvenJumps: return "even-jumps";
        case Axiom::FourGenusBound: return "four-genus-bound";
        case Axiom::MaxSlopeBound: return "max-slope-bound";
    }
    return "?";
}

static bool even_jump_ok(const SlopeChange& s) {
    Rational v = s.t * Rational(s.delta());
    return v.is_integer() && v.num() % 2 == 0;
}

ValidationReport validate_candidate(const PLFunction& f, const CandidateClaims& claims) {
    ValidationReport rep;
    auto add = [&rep](Axiom a, bool applicable, bool ok, std::string detail = "") {
        rep.checks.push_back(AxiomCheck{a, applicable, !applicable || ok, std::move(detail)});
    };

    bool sym = f == f.reflected();
    add(Axiom::Symmetry, true, sym, sym ? "" : "f(t) != f(2-t)");

    // integer slopes hold by construction of PLFunction
    add(Axiom::IntegerSlopes, true, true);

    bool zero0 = f.anchor().is_zero();
    add(Axiom::ZeroAtZero, true, zero0, zero0 ? "" : "f(0) = " + f.anchor().str());

    if (claims.tau) {
        bool ok = f.slope_at_zero() == -*claims.tau;
        add(Axiom::SlopeAtZero, true, ok,
            ok ? "" : "slope at 0 is " + std::to_string(f.slope_at_zero()) +
                          ", claimed tau " + std::to_string(*claims.tau));
    } else {
        add(Axiom::SlopeAtZero, false, true);
    }

    bool even_ok = true;
    std::string even_detail;
    for (const auto& s : f.singularities()) {
        if (!even_jump_ok(s)) {
            even_ok = false;
            even_detail = "t*delta = " + (s.t * Rational(s.delta())).str() + " at t = " + s.t.str();
            break;
        }
    }
    add(Axiom::EvenJumps, true, even_ok, even_detail);

    if (claims.g4) {
        // |f| <= g4*t on [0,1]; both sides linear per segment, so endpoint
        // checks on the refinement by breakpoints and t=1 suffice
        bool ok = true;
        std::string detail;
        std::vector<Rational> pts{Rational(1)};
        for (const auto& b : f.breakpoints())
            if (b < Rational(1)) pts.push_back(b);
        for (const auto& t : pts) {
            Rational bound = Rational(*claims.g4) * t;
            Rational v = f.eval(t);
            if (v > bound || -v > bound) {
                ok = false;
                detail = "|f(" + t.str() + ")| = " + abs(v).str() + " > " + bound.str();
                break;
            }
        }
        add(Axiom::FourGenusBound, true, ok, detail);
    } else {
        add(Axiom::FourGenusBound, false, true);
    }

    if (claims.gc) {
        bool ok = f.max_slope() <= *claims.gc;
        add(Axiom::MaxSlopeBound, true, ok,
            ok ? "" : "max slope " + std::to_string(f.max_slope()) + " > gc " +
                          std::to_string(*claims.gc));
    } else {
        add(Axiom::MaxSlopeBound, false, true);
    }
    return rep;
}

CandidateSet singularity_candidates(long long m1, long long m2) {
    if (m1 == m2) throw ArgumentError("slopes must differ");
    long long d = m2 > m1 ? m2 - m1 : m1 - m2;
    CandidateSet out;
    if (d == 1) {
        out.rejected = true;
        out.reason = "|m2-m1| = 1 would force a singularity at an even integer";
        return out;
    }
    if (d == 2 && m2 != -m1) {
        out.rejected = true;
        out.reason = "|m2-m1| = 2 forces t=1 and m2 = -m1 in {1,-1}";
        return out;
    }
    for (long long k = 1; k <= d / 2; ++k) out.candidates.push_back(Rational(2 * k, d));
    return out;
}

Interval gc_window(long long gc) {
    if (gc < 1) throw ArgumentError("gc must be >= 1");
    return Interval(Rational(1, gc), Rational(2 * gc - 1, gc));
}

}  // namespace ups
