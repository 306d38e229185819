#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ups/knot_facts.hpp"

namespace ups {

// Evidence that a knot's Upsilon has a singularity in a known place. An
// exact location with a known jump yields the lambda coordinate.
struct SingularityCertificate {
    std::string knot;
    std::variant<Rational, Interval> location;
    std::optional<long long> delta;   // slope jump, when exactly known
    std::optional<Rational> lambda;   // normalized jump, when computable
    bool lambda_certified = false;    // +-1 certified by an exhaustive window argument

    Interval window() const {
        if (const Rational* t = std::get_if<Rational>(&location)) return Interval::point(*t);
        return std::get<Interval>(location);
    }
    bool exact() const { return std::holds_alternative<Rational>(location); }
};

// delta/(2q) for t = p/q with p odd, delta/q for p even; requires the even
// integrality t*delta in 2Z, else the certificate is invalid.
Rational lambda_value(const Rational& t, long long delta);

enum class Verdict { independent, summand_basis, inconclusive };
const char* verdict_name(Verdict v);

struct IndependenceReport {
    std::vector<std::string> members;
    std::vector<SingularityCertificate> certificates;
    Verdict verdict = Verdict::inconclusive;
    std::vector<TraceEntry> trace;
};

// Certifies independence from strictly ordered, pairwise disjoint
// singularity windows; upgrades to summand_basis when every member's
// lambda is +-1. Never returns "dependent".
IndependenceReport check_independence(std::vector<SingularityCertificate> certs);

struct Decision {
    bool independent = false;
    std::vector<TraceEntry> trace;
};

// {K, P(K)} independence from the four hypotheses on (tau, t0, alpha, r).
// `alpha_below_tau` stands in for an exact alpha when only |alpha| < tau
// is known (the convexity route); dtau_equals_r is the tau-shift hypothesis.
Decision decide_satellite_pair(long long tau, const Rational& t0, std::optional<long long> alpha,
                       bool alpha_below_tau, long long r, bool dtau_equals_r);

// {T(p,q), M^i(T(p,q))} for 3 <= p < q: independent iff p does not divide i
// and gcd(i, (p-1)(q-1)/2) = 1.
Decision decide_torus_mazur(long long p, long long q, long long i);

// {K, K_{p,q}} via the first applicable route: simple profile, exact first
// singularity, concordance-genus gap, vanishing tau with nonzero upsilon,
// or the cable signature argument for topologically slice non-torsion K.
Decision decide_cable_pair(const KnotFacts& f, long long p, long long q);

// Certificate for a knot expression from its derived facts, when anything
// about the first singularity is known.
std::optional<SingularityCertificate> certificate_from_facts(const std::string& id,
                                                             const KnotFacts& f);

// {K_{base^i,1}}_{i=0..count-1}: windows per member, exact pairwise
// disjointness check, verdict from check_independence.
IndependenceReport family_power_cables(const KnotFacts& f, const std::string& base_name,
                                       long long base, long long count);

struct IteratedCablesResult {
    std::vector<long long> ps;
    IndependenceReport report;
};
// Greedy iterated (p_i, 1) cables with certified disjoint windows; p_i is
// minimal unless forced larger. Stops (inconclusive) once a window's lower
// end hits 0.
IteratedCablesResult family_iterated_cables(const KnotFacts& f, const std::string& base_name,
                                            long long count,
                                            const std::vector<long long>& forced_p = {});

// For K with tau = g4 = gc = 1 and the simple profile: the first
// singularity of K_{2^i,1} lies at 2/(2^i + l) with jump exactly 2^i + l,
// and every admissible l gives lambda = 1 (checked exhaustively).
SingularityCertificate certify_summand_window(const KnotFacts& f, long long i,
                                              const std::string& id);
// same argument for an arbitrary (p,1) cable
SingularityCertificate certify_summand_window_cable(const KnotFacts& f, long long p,
                                                    const std::string& id);

struct JnResult {
    KnotFacts jn;  // facts for 2nK # -K_{2n,1}
    IndependenceReport report;
};
// {J_n, (J_n)_{p,+-1}} for simple topologically slice K with tau = g4 > 0;
// a declared exact first singularity of J_n sharpens the admissible p.
JnResult jn_family(const KnotFacts& k, long long n, long long p, int q_sign,
                   std::optional<Rational> declared_first_sing = std::nullopt);

}  // namespace ups
