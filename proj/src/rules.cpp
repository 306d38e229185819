#include "ups/rules.hpp"

#include <algorithm>

#include "ups/cables.hpp"
#include "ups/pl_axioms.hpp"

namespace ups {

namespace {

PLFunction linear(long long slope) {
    return PLFunction::from_segments(Rational(0), {}, {slope});
}

void append_trace(KnotFacts& out, const std::vector<TraceEntry>& t) {
    out.trace.insert(out.trace.end(), t.begin(), t.end());
}

std::string fs_str(const FirstSing& fs) {
    if (std::holds_alternative<NoSingularity>(fs)) return "none";
    if (const Rational* t = std::get_if<Rational>(&fs)) return t->str();
    if (const Interval* w = std::get_if<Interval>(&fs)) return w->str();
    return "unknown";
}

}  // namespace

KnotFacts rule_mirror(const KnotFacts& f) {
    KnotFacts out;
    out.trace = f.trace;
    if (f.tau) out.tau = -*f.tau;
    for (long long t : f.tau_cases) out.tau_cases.push_back(-t);
    std::sort(out.tau_cases.begin(), out.tau_cases.end());
    if (f.epsilon) out.epsilon = -*f.epsilon;
    if (f.sigma) out.sigma = -*f.sigma;
    if (const PLFunction* u = f.exact_upsilon()) out.upsilon = -*u;
    if (const Envelope* e = f.upsilon_envelope())
        out.upsilon = Envelope{-e->upper, -e->lower, e->valid_on};
    out.upsilon1 = f.upsilon1.negated();
    out.g3 = f.g3;
    out.g4 = f.g4;
    out.gc = f.gc;
    out.gamma4 = f.gamma4;
    out.first_sing = f.first_sing;  // -Upsilon has the same breakpoints
    if (f.alpha) out.alpha = -*f.alpha;
    out.top_slice = f.top_slice;
    out.note("mirror", "negate tau, epsilon, sigma, upsilon; genus bounds unchanged");
    tighten(out);
    return out;
}

KnotFacts rule_reverse(const KnotFacts& f) {
    KnotFacts out = f;
    out.note("reverse", "all recorded invariants are orientation-insensitive");
    return out;
}

KnotFacts rule_sum(const KnotFacts& a, const KnotFacts& b) {
    KnotFacts out;
    append_trace(out, a.trace);
    append_trace(out, b.trace);

    if (a.tau && b.tau) {
        out.tau = *a.tau + *b.tau;
    } else {
        auto cases_of = [](const KnotFacts& f) {
            std::vector<long long> c = f.tau_cases;
            if (f.tau) c = {*f.tau};
            return c;
        };
        auto ca = cases_of(a), cb = cases_of(b);
        if (!ca.empty() && !cb.empty()) {
            for (long long x : ca)
                for (long long y : cb) out.tau_cases.push_back(x + y);
            std::sort(out.tau_cases.begin(), out.tau_cases.end());
            out.tau_cases.erase(std::unique(out.tau_cases.begin(), out.tau_cases.end()),
                                out.tau_cases.end());
            if (out.tau_cases.size() == 1) {
                out.tau = out.tau_cases[0];
                out.tau_cases.clear();
            }
        }
    }
    if (a.sigma && b.sigma) out.sigma = *a.sigma + *b.sigma;
    out.upsilon1 = a.upsilon1 + b.upsilon1;

    const PLFunction* ua = a.exact_upsilon();
    const PLFunction* ub = b.exact_upsilon();
    const Envelope* ea = a.upsilon_envelope();
    const Envelope* eb = b.upsilon_envelope();
    if (ua && ub) {
        out.upsilon = *ua + *ub;
    } else if (ua && eb) {
        out.upsilon = Envelope{eb->lower + *ua, eb->upper + *ua, eb->valid_on};
    } else if (ub && ea) {
        out.upsilon = Envelope{ea->lower + *ub, ea->upper + *ub, ea->valid_on};
    } else if (ea && eb) {
        if (auto dom = Interval::intersect(ea->valid_on, eb->valid_on))
            out.upsilon = Envelope{ea->lower + eb->lower, ea->upper + eb->upper, *dom};
    }

    if (a.g4.hi && b.g4.hi) out.g4 = IntRange::at_most(*a.g4.hi + *b.g4.hi);
    if (a.gc.hi && b.gc.hi) {
        out.gc = IntRange::at_most(*a.gc.hi + *b.gc.hi);
        out.note("gc-sum-subadditive",
                 "concordance genus bounded additively (folklore, not from the source results)");
    }
    if (a.gamma4.hi && b.gamma4.hi) out.gamma4 = IntRange::at_most(*a.gamma4.hi + *b.gamma4.hi);
    out.top_slice = a.top_slice && b.top_slice;

    // first singularity of the sum, when one summand is singularity-free
    // strictly below the other's certified window
    if (!out.exact_upsilon()) {
        auto wa = a.first_sing_window();
        auto wb = b.first_sing_window();
        const KnotFacts* first = nullptr;
        const KnotFacts* rest = nullptr;
        if (wa && wb) {
            if (strictly_before(*wa, *wb)) {
                first = &a;
                rest = &b;
            } else if (strictly_before(*wb, *wa)) {
                first = &b;
                rest = &a;
            }
        } else if (wa && !wb && b.exact_upsilon() && b.exact_upsilon()->breakpoints().empty()) {
            first = &a;
            rest = &b;
        } else if (wb && !wa && a.exact_upsilon() && a.exact_upsilon()->breakpoints().empty()) {
            first = &b;
            rest = &a;
        }
        if (first) {
            out.first_sing = first->first_sing;
            out.note("sum-first-singularity-transfer",
                     "other summand is singularity-free through the window " +
                         fs_str(first->first_sing));
            if (auto t0 = first->first_sing_exact()) {
                // slope of the singularity-free summand below its own first
                // singularity is -tau
                std::optional<long long> rest_slope;
                if (const PLFunction* ur = rest->exact_upsilon())
                    rest_slope = ur->slope_after(*t0);
                else if (rest->tau)
                    rest_slope = -*rest->tau;
                if (first->alpha && rest_slope) {
                    out.alpha = *first->alpha + *rest_slope;
                    out.note("sum-alpha-transfer",
                             "slope after " + t0->str() + " adds to " + std::to_string(*out.alpha));
                }
            }
        }
    }
    out.note("sum", "additive invariants combined");
    tighten(out);
    return out;
}

KnotFacts rule_whitehead(const KnotFacts& k, int sign, long long twists) {
    if (sign != 1 && sign != -1) throw ArgumentError("whitehead clasp sign must be +1 or -1");
    KnotFacts out;
    append_trace(out, k.trace);
    out.g3 = IntRange::at_most(1);
    out.note("whitehead-genus", "the doubling pattern bounds a genus one surface in the torus");
    if (sign == 1 && twists == 0) {
        out.top_slice = true;
        out.note("whitehead-top-slice", "untwisted positive doubles have trivial Alexander polynomial");
    }
    if (k.tau) {
        long long tau_k = *k.tau;
        long long tau_d;
        if (sign == 1)
            tau_d = twists < 2 * tau_k ? 1 : 0;
        else
            tau_d = twists > 2 * tau_k ? -1 : 0;
        out.tau = tau_d;
        out.upsilon = upsilon_simple(tau_d);
        out.note("whitehead-upsilon",
                 std::string("Wh") + (sign > 0 ? "+" : "-") + " with k = " + std::to_string(twists) +
                     ", 2tau(K) = " + std::to_string(2 * tau_k) + ": tau = " +
                     std::to_string(tau_d) + ", profile tau*(-1+|1-t|)");
    } else {
        out.note("whitehead-upsilon", "tau of the companion is unknown; profile left undetermined");
    }
    tighten(out);
    return out;
}

KnotFacts rule_gen_whitehead(long long tau_j, long long s, const KnotFacts& k, long long twists) {
    KnotFacts out;
    append_trace(out, k.trace);
    out.g3 = IntRange::at_most(1);
    out.note("gen-whitehead-genus", "generalized doubling patterns bound genus one surfaces");
    if (twists == 0) {
        out.top_slice = true;
        out.note("gen-whitehead-top-slice", "untwisted generalized doubles are topologically slice");
    }
    if (k.tau) {
        long long tau_k = *k.tau;
        long long tau_d;
        if (s < 2 * tau_j && twists < 2 * tau_k)
            tau_d = 1;
        else if (s > 2 * tau_j && twists > 2 * tau_k)
            tau_d = -1;
        else
            tau_d = 0;
        out.tau = tau_d;
        out.upsilon = upsilon_simple(tau_d);
        out.note("gen-whitehead-upsilon", "three-way case split on (s vs 2tauJ, k vs 2tauK): tau = " +
                                              std::to_string(tau_d));
    } else {
        out.note("gen-whitehead-upsilon", "tau of the companion is unknown");
    }
    tighten(out);
    return out;
}

KnotFacts rule_pattern_sat(const KnotFacts& k, long long r, long long dtau) {
    if (r < 1) throw ArgumentError("pattern satellite needs r >= 1");
    KnotFacts out;
    append_trace(out, k.trace);
    if (k.tau) {
        out.tau = *k.tau + dtau;
        out.note("pattern-tau-shift", "tau(P(K)) = tau(K) + " + std::to_string(dtau));
    } else if (!k.tau_cases.empty()) {
        for (long long t : k.tau_cases) out.tau_cases.push_back(t + dtau);
        out.note("pattern-tau-shift", "shifted every tau case by " + std::to_string(dtau));
    }

    PLFunction rt = linear(r);
    if (const PLFunction* u = k.exact_upsilon()) {
        out.upsilon = Envelope{*u - rt, *u + rt, Interval(Rational(0), Rational(1))};
        out.note("pattern-crossing-sandwich",
                 "r = " + std::to_string(r) + " crossing changes give |Upsilon_P(K) - Upsilon_K| <= r*t on [0,1]");
    } else if (const Envelope* e = k.upsilon_envelope()) {
        if (auto dom = Interval::intersect(e->valid_on, Interval(Rational(0), Rational(1)))) {
            out.upsilon = Envelope{e->lower - rt, e->upper + rt, *dom};
            out.note("pattern-crossing-sandwich", "companion envelope widened by r*t on [0,1]");
        }
    }

    // positive slope jump at the companion's first singularity, when that
    // is certain, pins the satellite's first singularity below it
    if (dtau == r) {
        std::optional<bool> delta_positive;
        std::string why;
        if (const PLFunction* u = k.exact_upsilon()) {
            if (auto s0 = u->first_singularity()) {
                delta_positive = s0->delta() > 0;
                why = "slope jump read off the exact profile";
            }
        }
        if (!delta_positive && k.alpha && k.tau) {
            delta_positive = *k.alpha + *k.tau > 0;
            why = "delta = alpha + tau";
        }
        if (!delta_positive && k.tau && *k.tau > 0 && k.g4.exact() &&
            *k.g4.exact_value() == *k.tau) {
            delta_positive = true;
            why = "tau = g4 > 0 forces the first jump upward";
        }
        if (delta_positive && *delta_positive) {
            std::optional<Interval> win;
            if (auto t0 = k.first_sing_exact())
                win = Interval(Rational(0), *t0, false, true);
            else if (auto w = k.first_sing_window())
                win = Interval(Rational(0), w->hi, false, w->hi_closed);
            if (win) {
                out.first_sing = *win;
                out.note("pattern-first-singularity",
                         "dtau = r and positive first jump (" + why +
                             "): satellite singularity in " + win->str());
            }
        }
    }
    out.note("pattern-satellite", "r = " + std::to_string(r) + ", dtau = " + std::to_string(dtau));
    tighten(out);
    return out;
}

std::optional<long long> crosscap_lower_bound(const KnotFacts& f) {
    auto u = f.upsilon1_exact();
    if (!u || !f.sigma) return std::nullopt;
    long long d = *u - *f.sigma / 2;
    return d < 0 ? -d : d;
}

void tighten(KnotFacts& f) {
    for (int pass = 0; pass < 16; ++pass) {
        bool changed = false;
        auto set_tau = [&](long long v) {
            if (!f.tau) {
                f.tau = v;
                changed = true;
            }
        };
        auto meet = [&changed](IntRange& r, const IntRange& o) {
            IntRange m = r.meet(o);
            if (!(m == r)) {
                r = m;
                changed = true;
            }
        };

        if (const PLFunction* u = f.exact_upsilon()) {
            set_tau(-u->slope_at_zero());
            Rational at1 = u->eval(Rational(1));
            if (at1.is_integer()) meet(f.upsilon1, IntRange::at(at1.num()));
            auto s0 = u->first_singularity();
            if (std::holds_alternative<std::monostate>(f.first_sing)) {
                if (s0)
                    f.first_sing = s0->t;
                else
                    f.first_sing = NoSingularity{};
                changed = true;
            } else if (const Interval* w = std::get_if<Interval>(&f.first_sing)) {
                // an exact profile supersedes a window it agrees with
                if (s0 && w->contains(s0->t)) {
                    f.first_sing = s0->t;
                    changed = true;
                }
            }
            if (!f.alpha) {
                if (auto s0 = u->first_singularity()) {
                    f.alpha = s0->after;
                    changed = true;
                }
            }
        }
        if (!f.tau && f.tau_cases.size() == 1) {
            f.tau = f.tau_cases[0];
            f.tau_cases.clear();
            changed = true;
        }
        if (f.tau) {
            long long at = *f.tau < 0 ? -*f.tau : *f.tau;
            meet(f.g4, IntRange::at_least(at));
        } else if (!f.tau_cases.empty()) {
            long long lo = INT64_MAX;
            for (long long t : f.tau_cases) lo = std::min(lo, t < 0 ? -t : t);
            meet(f.g4, IntRange::at_least(lo));
        }
        // |tau| <= g4 <= gc <= g3: upper bounds flow down, lower bounds up
        if (f.g3.hi) meet(f.gc, IntRange::at_most(*f.g3.hi));
        if (f.gc.hi) meet(f.g4, IntRange::at_most(*f.gc.hi));
        if (f.g4.lo) meet(f.gc, IntRange::at_least(*f.g4.lo));
        if (f.gc.lo) meet(f.g3, IntRange::at_least(*f.gc.lo));

        if (f.top_slice && !f.sigma) {
            f.sigma = 0;
            changed = true;
        }
        if (f.sigma) {
            long long half = *f.sigma / 2;
            if (f.gamma4.hi)
                meet(f.upsilon1, IntRange{half - *f.gamma4.hi, half + *f.gamma4.hi});
            if (f.upsilon1.hi && *f.upsilon1.hi < half)
                meet(f.gamma4, IntRange::at_least(half - *f.upsilon1.hi));
            if (f.upsilon1.lo && *f.upsilon1.lo > half)
                meet(f.gamma4, IntRange::at_least(*f.upsilon1.lo - half));
        }
        if (!f.epsilon && f.tau && *f.tau != 0 && f.g4.exact()) {
            long long at = *f.tau < 0 ? -*f.tau : *f.tau;
            if (*f.g4.exact_value() == at) {
                f.epsilon = *f.tau > 0 ? 1 : -1;
                f.note("epsilon-default",
                       "tau attains the g4 bound, so epsilon = sgn(tau) = " +
                           std::to_string(*f.epsilon));
                changed = true;
            }
        }
        if (const Envelope* e = f.upsilon_envelope()) {
            if (e->valid_on.contains(Rational(1))) {
                long long lo = e->lower.eval(Rational(1)).ceil();
                long long hi = e->upper.eval(Rational(1)).floor();
                meet(f.upsilon1, IntRange{lo, hi});
            }
        }
        if (!changed) return;
    }
}

KnotFacts unknot_facts() {
    KnotFacts f;
    f.tau = 0;
    f.epsilon = 0;
    f.sigma = 0;
    f.upsilon = PLFunction();
    f.upsilon1 = IntRange::at(0);
    f.g3 = IntRange::at(0);
    f.g4 = IntRange::at(0);
    f.gc = IntRange::at(0);
    f.gamma4 = IntRange::at(0);
    f.first_sing = NoSingularity{};
    f.top_slice = true;
    f.note("unknot", "all invariants vanish");
    return f;
}

KnotFacts torus_facts(long long p, long long q) {
    if (p < 1) throw ArgumentError("torus knot needs p >= 1");
    if (p == 1 || q == 1 || q == -1 || q == 0) {
        KnotFacts f = unknot_facts();
        f.note("torus-unknotted", "T(p,q) with p = 1 or |q| <= 1 is the unknot");
        return f;
    }
    if (q < 0) {
        KnotFacts f = rule_mirror(torus_facts(p, -q));
        f.note("torus-mirror", "T(p,q) with q < 0 is the mirror of T(p,-q)");
        return f;
    }
    if (p > q) std::swap(p, q);
    KnotFacts f;
    f.tau = (p - 1) * (q - 1) / 2;
    f.epsilon = 1;
    f.sigma = sigma_torus(p, q);
    if (p >= 3) f.first_sing = Rational(2, p);
    if (p == 2 && q == 3) f.upsilon = upsilon_simple(1);
    f.note("torus-generator-facts",
           "T(" + std::to_string(p) + "," + std::to_string(q) + "): tau = (p-1)(q-1)/2 = " +
               std::to_string(*f.tau) + ", epsilon = 1, sigma = " + std::to_string(*f.sigma) +
               (p >= 3 ? ", first singularity at 2/p" : ""));
    tighten(f);
    return f;
}

KnotFacts merge_facts(const KnotFacts& a, const KnotFacts& b) {
    KnotFacts out = a;
    append_trace(out, b.trace);
    auto take = [](auto& dst, const auto& src, const char* field) {
        if (src && dst && *src != *dst)
            throw DeriveError(std::string("conflicting facts for ") + field);
        if (src && !dst) dst = src;
    };
    take(out.tau, b.tau, "tau");
    take(out.epsilon, b.epsilon, "epsilon");
    take(out.sigma, b.sigma, "sigma");
    take(out.alpha, b.alpha, "alpha");
    if (!b.tau_cases.empty() && out.tau_cases.empty() && !out.tau) out.tau_cases = b.tau_cases;
    out.upsilon1 = out.upsilon1.meet(b.upsilon1);
    out.g3 = out.g3.meet(b.g3);
    out.g4 = out.g4.meet(b.g4);
    out.gc = out.gc.meet(b.gc);
    out.gamma4 = out.gamma4.meet(b.gamma4);
    out.top_slice = out.top_slice || b.top_slice;

    const PLFunction* ua = a.exact_upsilon();
    const PLFunction* ub = b.exact_upsilon();
    if (ua && ub) {
        if (!(*ua == *ub)) throw DeriveError("conflicting exact profiles");
    } else if (ub) {
        // a declared exact profile must sit inside any derived envelope
        if (const Envelope* env = a.upsilon_envelope()) {
            for (const auto& t :
                 {env->valid_on.lo, env->valid_on.hi,
                  (env->valid_on.lo + env->valid_on.hi) / Rational(2)}) {
                if (ub->eval(t) < env->lower.eval(t) || ub->eval(t) > env->upper.eval(t))
                    throw DeriveError("declared exact profile escapes the derived envelope at t = " +
                                      t.str());
            }
            for (const auto& bp : ub->breakpoints())
                if (env->valid_on.contains(bp) &&
                    (ub->eval(bp) < env->lower.eval(bp) || ub->eval(bp) > env->upper.eval(bp)))
                    throw DeriveError("declared exact profile escapes the derived envelope at t = " +
                                      bp.str());
        }
        out.upsilon = *ub;
    }

    // first singularity knowledge: exact beats a window, windows intersect
    auto wa = out.first_sing_window();
    auto wb = b.first_sing_window();
    bool none_a = std::holds_alternative<NoSingularity>(out.first_sing);
    bool none_b = std::holds_alternative<NoSingularity>(b.first_sing);
    if ((none_a && wb) || (none_b && wa))
        throw DeriveError("conflicting facts: singularity declared for a singularity-free profile");
    if (none_b && !none_a) out.first_sing = NoSingularity{};
    if (wa && wb) {
        auto met = Interval::intersect(*wa, *wb);
        if (!met) throw DeriveError("conflicting first-singularity windows");
        if (b.first_sing_exact())
            out.first_sing = *b.first_sing_exact();
        else if (out.first_sing_exact())
            ;  // keep the exact value
        else
            out.first_sing = *met;
    } else if (wb) {
        if (auto t = b.first_sing_exact())
            out.first_sing = *t;
        else
            out.first_sing = *wb;
    }
    return out;
}

KnotFacts derive(const ExprPtr& e, const FactTable& table) {
    struct V {
        const FactTable& table;
        KnotFacts operator()(const Generator& g) const {
            const GeneratorFacts* rec = table.lookup(g.name);
            if (!rec) throw DeriveError("unresolved generator '" + g.name + "'");
            KnotFacts f = validate_record(*rec);
            f.note("generator-facts", "declared facts for '" + g.name + "'");
            return f;
        }
        KnotFacts operator()(const TorusKnot& t) const { return torus_facts(t.p, t.q); }
        KnotFacts operator()(const Mirror& m) const { return rule_mirror(derive(m.child, table)); }
        KnotFacts operator()(const Reverse& r) const {
            return rule_reverse(derive(r.child, table));
        }
        KnotFacts operator()(const Sum& s) const {
            return rule_sum(derive(s.lhs, table), derive(s.rhs, table));
        }
        KnotFacts operator()(const Cable& c) const {
            return derive_cable(derive(c.child, table), c.p, c.q);
        }
        KnotFacts operator()(const WhDouble& w) const {
            return rule_whitehead(derive(w.child, table), w.sign, w.twists);
        }
        KnotFacts operator()(const GenWhDouble& g) const {
            return rule_gen_whitehead(g.tau_j, g.s, derive(g.child, table), g.twists);
        }
        KnotFacts operator()(const PatternSat& p) const {
            return rule_pattern_sat(derive(p.child, table), p.positive_crossings, p.tau_shift);
        }
    };
    KnotFacts f = std::visit(V{table}, e->node);

    // literature facts declared for this exact expression
    if (!std::holds_alternative<Generator>(e->node)) {
        if (const GeneratorFacts* rec = table.lookup(print_expr(e))) {
            KnotFacts declared = validate_record(*rec);
            f = merge_facts(f, declared);
            f.note("declared-facts-merge", "merged declared record for '" + print_expr(e) + "'");
        }
    }
    tighten(f);
    auto violations = consistency_check(f);
    if (!violations.empty()) {
        std::string msg = "inconsistent facts for '" + print_expr(e) + "':";
        for (const auto& v : violations) msg += " [" + v.check + "] " + v.detail;
        throw DeriveError(msg);
    }
    return f;
}

}  // namespace ups
