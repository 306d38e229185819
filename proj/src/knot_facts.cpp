#include "ups/knot_facts.hpp"

#include <algorithm>

#include "ups/pl_axioms.hpp"

namespace ups {

Rational KnotFacts::sing_free_radius() const {
    Rational best(0);
    auto grow = [&best](const Rational& r) {
        if (r > best) best = r;
    };
    if (const PLFunction* f = exact_upsilon()) {
        if (f->breakpoints().empty())
            grow(Rational(2));
        else
            grow(f->breakpoints().front());
    }
    if (std::holds_alternative<NoSingularity>(first_sing)) grow(Rational(2));
    if (const Rational* t = std::get_if<Rational>(&first_sing)) grow(*t);
    if (const Interval* w = std::get_if<Interval>(&first_sing)) grow(w->lo);
    if (gc.hi && *gc.hi >= 1) grow(Rational(1, *gc.hi));
    return best;
}

// midpoints and breakpoints of both functions, restricted to `dom`
static std::vector<Rational> probe_points(const PLFunction& a, const PLFunction& b,
                                          const Interval& dom) {
    std::vector<Rational> pts{dom.lo, dom.hi};
    for (const auto& f : {&a, &b})
        for (const auto& t : f->breakpoints())
            if (dom.contains(t)) pts.push_back(t);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Rational> out = pts;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        out.push_back((pts[i] + pts[i + 1]) / Rational(2));
    return out;
}

std::vector<Violation> consistency_check(const KnotFacts& f) {
    std::vector<Violation> v;
    auto bad = [&v](std::string check, std::string detail) {
        v.push_back(Violation{std::move(check), std::move(detail)});
    };

    for (const auto& [name, r] :
         {std::pair{"g3", &f.g3}, {"g4", &f.g4}, {"gc", &f.gc}, {"gamma4", &f.gamma4},
          {"upsilon1", &f.upsilon1}}) {
        if (r->empty()) bad(std::string("range-empty-") + name, r->str());
    }

    if (f.epsilon && (*f.epsilon < -1 || *f.epsilon > 1)) bad("epsilon-value", "");
    if (f.epsilon && *f.epsilon == 0 && f.tau && *f.tau != 0)
        bad("epsilon-zero-tau", "epsilon = 0 forces tau = 0");
    if (f.sigma && *f.sigma % 2 != 0) bad("sigma-parity", "sigma must be even");
    if (f.top_slice && f.sigma && *f.sigma != 0)
        bad("top-slice-sigma", "topologically slice knots have sigma = 0");
    if (f.tau && f.g4.hi && (*f.tau > *f.g4.hi || -*f.tau > *f.g4.hi))
        bad("tau-vs-g4", "|tau| exceeds the g4 upper bound");
    if (f.tau && !f.tau_cases.empty() &&
        std::find(f.tau_cases.begin(), f.tau_cases.end(), *f.tau) == f.tau_cases.end())
        bad("tau-case-mismatch", "exact tau outside its recorded case set");

    if (const PLFunction* u = f.exact_upsilon()) {
        CandidateClaims claims;
        claims.tau = f.tau;
        claims.g4 = f.g4.hi;
        claims.gc = f.gc.hi;
        ValidationReport rep = validate_candidate(*u, claims);
        for (const auto& c : rep.checks)
            if (!c.passed) bad(std::string("axiom-") + axiom_name(c.axiom), c.detail);

        Rational at1 = u->eval(Rational(1));
        if (!at1.is_integer())
            bad("upsilon1-not-integer", "Upsilon(1) = " + at1.str());
        else {
            long long vv = at1.num();
            if ((f.upsilon1.lo && vv < *f.upsilon1.lo) || (f.upsilon1.hi && vv > *f.upsilon1.hi))
                bad("upsilon1-outside-range", "Upsilon(1) = " + std::to_string(vv) +
                                                  " not in " + f.upsilon1.str());
        }
        auto first = u->first_singularity();
        if (auto t = f.first_sing_exact()) {
            if (!first || first->t != *t)
                bad("first-singularity-mismatch",
                    "recorded " + t->str() + " vs profile " +
                        (first ? first->t.str() : std::string("none")));
        } else if (const Interval* w = std::get_if<Interval>(&f.first_sing)) {
            if (!first || !w->contains(first->t))
                bad("first-singularity-mismatch",
                    "profile singularity " + (first ? first->t.str() : std::string("none")) +
                        " outside the recorded window " + w->str());
        }
        if (std::holds_alternative<NoSingularity>(f.first_sing) && first)
            bad("first-singularity-mismatch", "profile has a singularity at " + first->t.str());
        if (f.alpha && first && u->slope_after(first->t) != *f.alpha)
            bad("alpha-mismatch", "slope after first singularity is " +
                                      std::to_string(u->slope_after(first->t)));
    }

    if (const Envelope* env = f.upsilon_envelope()) {
        for (const auto& t : probe_points(env->lower, env->upper, env->valid_on)) {
            if (env->lower.eval(t) > env->upper.eval(t)) {
                bad("envelope-order", "lower > upper at t = " + t.str());
                break;
            }
        }
    }
    return v;
}

}  // namespace ups
