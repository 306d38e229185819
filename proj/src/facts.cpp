#include "ups/facts.hpp"

#include "ups/pl_axioms.hpp"
#include "ups/rules.hpp"

namespace ups {

KnotFacts validate_record(const GeneratorFacts& rec) {
    auto reject = [&rec](const std::string& axiom, const std::string& msg) {
        throw IngestError(axiom, "record '" + rec.name + "': " + msg);
    };

    if (rec.epsilon && (*rec.epsilon < -1 || *rec.epsilon > 1))
        reject("epsilon-value", "epsilon must be -1, 0 or 1");
    if (rec.epsilon && *rec.epsilon == 0 && rec.tau && *rec.tau != 0)
        reject("epsilon-zero-tau", "epsilon = 0 forces tau = 0");
    if (rec.sigma && *rec.sigma % 2 != 0) reject("sigma-parity", "sigma must be even");
    if (rec.top_slice && rec.sigma && *rec.sigma != 0)
        reject("top-slice-sigma", "topologically slice knots have sigma = 0");

    for (const auto& [name, r] :
         {std::pair{"g3", &rec.g3}, {"g4", &rec.g4}, {"gc", &rec.gc}, {"gamma4", &rec.gamma4}}) {
        if (r->empty()) reject(std::string("range-") + name, "min exceeds max");
    }
    if (rec.tau) {
        long long at = *rec.tau < 0 ? -*rec.tau : *rec.tau;
        if (rec.g4.hi && at > *rec.g4.hi) reject("tau-vs-g4", "|tau| exceeds the g4 upper bound");
    }
    if (rec.g4.lo && rec.gc.hi && *rec.g4.lo > *rec.gc.hi)
        reject("g4-vs-gc", "g4 exceeds the gc upper bound");
    if (rec.gc.lo && rec.g3.hi && *rec.gc.lo > *rec.g3.hi)
        reject("gc-vs-g3", "gc exceeds the g3 upper bound");

    if (rec.upsilon) {
        CandidateClaims claims;
        claims.tau = rec.tau;
        claims.g4 = rec.g4.hi;
        claims.gc = rec.gc.hi;
        ValidationReport rep = validate_candidate(*rec.upsilon, claims);
        for (const auto& c : rep.checks)
            if (!c.passed)
                reject(std::string("axiom-") + axiom_name(c.axiom),
                       "declared profile fails: " + c.detail);
        if (auto t = std::get_if<Rational>(&rec.first_sing)) {
            auto s0 = rec.upsilon->first_singularity();
            if (!s0 || s0->t != *t)
                reject("first-singularity-mismatch", "declared location disagrees with the profile");
        }
        if (rec.alpha) {
            auto s0 = rec.upsilon->first_singularity();
            if (s0 && rec.upsilon->slope_after(s0->t) != *rec.alpha)
                reject("alpha-mismatch", "declared alpha disagrees with the profile");
        }
    }

    KnotFacts f;
    f.tau = rec.tau;
    f.epsilon = rec.epsilon;
    f.sigma = rec.sigma;
    f.g3 = rec.g3;
    f.g4 = rec.g4;
    f.gc = rec.gc;
    f.gamma4 = rec.gamma4;
    f.top_slice = rec.top_slice;
    if (rec.upsilon) f.upsilon = *rec.upsilon;
    f.first_sing = rec.first_sing;
    f.alpha = rec.alpha;
    tighten(f);
    auto violations = consistency_check(f);
    if (!violations.empty())
        reject(violations.front().check, violations.front().detail);
    return f;
}

FactTable::FactTable() {
    GeneratorFacts u;
    u.name = "U";
    u.tau = 0;
    u.epsilon = 0;
    u.sigma = 0;
    u.g3 = IntRange::at(0);
    u.g4 = IntRange::at(0);
    u.gc = IntRange::at(0);
    u.gamma4 = IntRange::at(0);
    u.top_slice = true;
    u.upsilon = PLFunction();
    u.first_sing = NoSingularity{};
    entries_.emplace("U", std::move(u));
    builtin_.insert("U");
}

void FactTable::add(const GeneratorFacts& rec) {
    if (rec.name.empty()) throw IngestError("name", "record without a name");
    validate_record(rec);
    if (builtin_.erase(rec.name) > 0) {
        entries_[rec.name] = rec;
        return;
    }
    if (!entries_.emplace(rec.name, rec).second)
        throw IngestError("duplicate-name", "duplicate record '" + rec.name + "'");
}

}  // namespace ups
