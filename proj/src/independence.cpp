#include "ups/independence.hpp"

#include <algorithm>
#include <numeric>

#include "ups/cables.hpp"
#include "ups/pl_axioms.hpp"
#include "ups/rules.hpp"

namespace ups {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::independent: return "independent";
        case Verdict::summand_basis: return "summand_basis";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Rational lambda_value(const Rational& t, long long delta) {
    if (t <= Rational(0) || t >= Rational(2))
        throw CertificateError("lambda needs t in (0,2), got " + t.str());
    Rational even = t * Rational(delta);
    if (!even.is_integer() || even.num() % 2 != 0)
        throw CertificateError("invalid certificate: t*delta = " + even.str() +
                               " is not an even integer");
    long long p = t.num(), q = t.den();
    if (p % 2 != 0) return Rational(delta, 2 * q);
    return Rational(delta, q);
}

IndependenceReport check_independence(std::vector<SingularityCertificate> certs) {
    IndependenceReport rep;
    for (const auto& c : certs) rep.members.push_back(c.knot);

    // fill in lambda where the data allows
    for (auto& c : certs) {
        if (!c.lambda && c.exact() && c.delta)
            c.lambda = lambda_value(std::get<Rational>(c.location), *c.delta);
    }
    rep.certificates = certs;
    if (certs.empty()) {
        rep.trace.push_back({"independence", "no certificates supplied"});
        return rep;
    }

    std::vector<size_t> order(certs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        const Interval wa = certs[a].window(), wb = certs[b].window();
        if (wa.lo != wb.lo) return wa.lo < wb.lo;
        return wa.hi < wb.hi;
    });
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        const auto& a = certs[order[i]];
        const auto& b = certs[order[i + 1]];
        if (!strictly_before(a.window(), b.window())) {
            rep.verdict = Verdict::inconclusive;
            rep.trace.push_back({"independence",
                                 "windows of '" + a.knot + "' " + a.window().str() + " and '" +
                                     b.knot + "' " + b.window().str() +
                                     " are not strictly separated"});
            return rep;
        }
    }
    rep.verdict = Verdict::independent;
    rep.trace.push_back({"independence",
                         "strictly ordered disjoint singularity windows give a triangular "
                         "family of lambda coordinates"});

    bool all_unit = true;
    for (const auto& c : certs) {
        bool unit = c.lambda && (*c.lambda == Rational(1) || *c.lambda == Rational(-1)) &&
                    (c.exact() || c.lambda_certified);
        if (!unit) {
            all_unit = false;
            rep.trace.push_back({"summand",
                                 "no unit lambda certified for '" + c.knot +
                                     "'; summand criterion not met"});
            break;
        }
    }
    if (all_unit) {
        rep.verdict = Verdict::summand_basis;
        rep.trace.push_back({"summand", "every member has lambda in {1,-1}; the normalized "
                                        "jump homomorphism splits"});
    }
    return rep;
}

Decision decide_satellite_pair(long long tau, const Rational& t0, std::optional<long long> alpha,
                       bool alpha_below_tau, long long r, bool dtau_equals_r) {
    Decision d;
    auto fail = [&d](const std::string& hyp) {
        d.independent = false;
        d.trace.push_back({"satellite-pair", "hypothesis failed: " + hyp});
        return d;
    };
    if (tau <= 0) return fail("tau(K) > 0");
    if (t0 >= Rational(1) || t0 <= Rational(0)) return fail("first singularity t0 < 1");
    if (r == 0) return fail("r != 0");
    if (!dtau_equals_r) return fail("tau(P(K)) = tau(K) + r");

    if (alpha) {
        if (*alpha > 0 && *alpha % tau == 0)
            return fail("alpha = " + std::to_string(*alpha) + " is a positive multiple of tau");
        d.trace.push_back({"satellite-pair", "alpha = " + std::to_string(*alpha) +
                                                 " is no positive multiple of tau"});
    } else if (alpha_below_tau) {
        d.trace.push_back({"satellite-pair",
                           "|alpha| < tau (convexity), so alpha is no positive multiple of tau"});
    } else {
        return fail("alpha known exactly or bounded by |alpha| < tau");
    }

    Rational tr = t0 * Rational(r);
    if (tr.is_integer() && tr.num() % 2 == 0)
        return fail("t0*r = " + tr.str() + " is an even integer");
    if (std::gcd(r < 0 ? -r : r, tau) != 1) return fail("gcd(r, tau) = 1");
    d.independent = true;
    d.trace.push_back({"satellite-pair",
                       "all four hypotheses hold; equal-first-singularity slopes are impossible"});
    return d;
}

Decision decide_torus_mazur(long long p, long long q, long long i) {
    Decision d;
    if (p < 3 || p >= q) {
        d.trace.push_back({"torus-mazur", "needs 3 <= p < q; out of hypothesis"});
        return d;
    }
    if (std::gcd(p, q) != 1) throw ArgumentError("torus knot parameters must be coprime");
    if (i < 1) {
        d.trace.push_back({"torus-mazur", "needs i >= 1"});
        return d;
    }
    long long tau = (p - 1) * (q - 1) / 2;
    // first singularity of T(p,q) at 2/p < 1; convexity bounds the next
    // slope below tau in magnitude
    Decision inner = decide_satellite_pair(tau, Rational(2, p), std::nullopt,
                                   /*alpha_below_tau=*/true, /*r=*/i, /*dtau_equals_r=*/true);
    d.independent = inner.independent;
    d.trace.push_back({"torus-mazur",
                       "tau = " + std::to_string(tau) + ", t0 = " + Rational(2, p).str() +
                           ", r = i = " + std::to_string(i)});
    d.trace.insert(d.trace.end(), inner.trace.begin(), inner.trace.end());
    return d;
}

std::optional<SingularityCertificate> certificate_from_facts(const std::string& id,
                                                             const KnotFacts& f) {
    SingularityCertificate c;
    c.knot = id;
    if (auto t = f.first_sing_exact()) {
        c.location = *t;
        if (const PLFunction* u = f.exact_upsilon()) {
            if (auto s0 = u->first_singularity()) c.delta = s0->delta();
        } else if (f.alpha && f.tau) {
            c.delta = *f.alpha + *f.tau;  // jump from the initial slope -tau
        }
        return c;
    }
    if (auto w = f.first_sing_window()) {
        c.location = *w;
        return c;
    }
    return std::nullopt;
}

Decision decide_cable_pair(const KnotFacts& f, long long p, long long q) {
    Decision d;
    if (p < 2) {
        d.trace.push_back({"cable-pair", "needs p >= 2"});
        return d;
    }
    KnotFacts cable;  // trace sink for window rules
    bool have_window = first_sing_cable(f, p, q, cable);
    auto cable_window = cable.first_sing_window();

    auto conclude = [&](const Interval& kw, const Interval& cw, const std::string& route) {
        if (strictly_before(cw, kw)) {
            d.independent = true;
            d.trace.push_back({"cable-pair", route + ": cable window " + cw.str() +
                                                 " lies strictly below the companion's " +
                                                 kw.str()});
            return true;
        }
        return false;
    };

    if (have_window) {
        if (f.upsilon_simple_known() && f.tau && *f.tau != 0) {
            if (conclude(Interval::point(Rational(1)), *cable_window,
                         "simple-profile route (singularity of K only at 1)"))
                return d;
        }
        if (auto t0 = f.first_sing_exact()) {
            if (conclude(Interval::point(*t0), *cable_window, "exact-first-singularity route"))
                return d;
        }
        if (f.gc.hi && f.tau_nonzero()) {
            Interval kw = gc_window(*f.gc.hi);
            if (p > 2 * *f.gc.hi &&
                conclude(kw, *cable_window,
                         "concordance-genus route (p > 2gc confines all companion singularities)"))
                return d;
        }
    }

    // signature route: sigma(K_{p,q}) = sigma(T(p,q)) != 0 while K is
    // topologically slice and non-torsion
    long long ap = p < 0 ? -p : p, aq = q < 0 ? -q : q;
    if (f.top_slice && ap >= 2 && aq >= 2) {
        bool non_torsion = f.tau_nonzero() || f.upsilon1_nonzero() || (f.sigma && *f.sigma != 0);
        if (const PLFunction* u = f.exact_upsilon(); u && !u->is_zero()) non_torsion = true;
        long long st = sigma_torus(ap, q < 0 ? -aq : aq);
        if (non_torsion && st != 0) {
            d.independent = true;
            d.trace.push_back(
                {"cable-pair", "signature route: sigma(K_{p,q}) = sigma(T(p,q)) = " +
                                   std::to_string(st) +
                                   " forces the cable coefficient to vanish; K is non-torsion"});
            return d;
        }
    }
    d.trace.push_back({"cable-pair", "no route certifies the pair"});
    return d;
}

// window for K_{p,1} when p >= 2, or the companion's own window for p = 1
static std::optional<Interval> member_window(const KnotFacts& f, long long p,
                                             std::vector<TraceEntry>& trace) {
    if (p == 1) {
        if (auto w = f.first_sing_window()) return w;
        if (f.gc.hi && f.tau_nonzero()) {
            trace.push_back({"family-window",
                             "base member confined by its concordance genus window"});
            return gc_window(*f.gc.hi);
        }
        return std::nullopt;
    }
    KnotFacts sink;
    if (!first_sing_cable(f, p, 1, sink)) return std::nullopt;
    trace.insert(trace.end(), sink.trace.begin(), sink.trace.end());
    return sink.first_sing_window();
}

IndependenceReport family_power_cables(const KnotFacts& f, const std::string& base_name,
                                       long long base, long long count) {
    IndependenceReport rep;
    if (base < 2 || count < 1) {
        rep.trace.push_back({"power-cables", "needs base >= 2 and count >= 1"});
        return rep;
    }
    std::vector<SingularityCertificate> certs;
    long long p = 1;
    for (long long i = 0; i < count; ++i) {
        std::string id =
            i == 0 ? base_name : "cable(" + base_name + "," + std::to_string(p) + ",1)";
        std::vector<TraceEntry> tr;
        auto w = member_window(f, p, tr);
        rep.trace.insert(rep.trace.end(), tr.begin(), tr.end());
        if (!w) {
            rep.members.push_back(id);
            rep.trace.push_back({"power-cables", "no certified window for member " + id});
            return rep;
        }
        SingularityCertificate c;
        c.knot = id;
        if (w->is_point()) {
            c.location = w->lo;
            if (const PLFunction* u = f.exact_upsilon(); u && i == 0) {
                if (auto s0 = u->first_singularity()) c.delta = s0->delta();
            }
        } else {
            c.location = *w;
        }
        certs.push_back(std::move(c));
        if (i + 1 < count) {
            if (p > (1LL << 62) / base) throw OverflowError("cable parameter overflow");
            p *= base;
        }
    }
    IndependenceReport checked = check_independence(std::move(certs));
    checked.trace.insert(checked.trace.begin(), rep.trace.begin(), rep.trace.end());
    return checked;
}

IteratedCablesResult family_iterated_cables(const KnotFacts& f, const std::string& base_name,
                                            long long count,
                                            const std::vector<long long>& forced_p) {
    IteratedCablesResult res;
    IndependenceReport& rep = res.report;
    std::vector<SingularityCertificate> certs;

    KnotFacts cur = f;
    std::string id = base_name;
    std::optional<Interval> w = cur.first_sing_window();
    if (!w) {
        rep.trace.push_back({"iterated-cables", "base knot has no certified first singularity"});
        return res;
    }
    if (!cur.tau_nonzero()) {
        rep.trace.push_back({"iterated-cables", "needs tau(K) != 0 (certified in every case)"});
        return res;
    }
    {
        SingularityCertificate c;
        c.knot = id;
        if (w->is_point())
            c.location = w->lo;
        else
            c.location = *w;
        certs.push_back(c);
    }

    for (long long depth = 1; depth <= count; ++depth) {
        if (w->lo.is_zero()) {
            rep.trace.push_back({"iterated-cables",
                                 "window " + w->str() + " has lower end 0; the greedy step "
                                 "cannot certify a deeper cable"});
            IndependenceReport checked = check_independence(certs);
            rep.members = checked.members;
            rep.certificates = checked.certificates;
            rep.trace.insert(rep.trace.end(), checked.trace.begin(), checked.trace.end());
            rep.verdict = Verdict::inconclusive;
            return res;
        }
        // smallest p with 2/p strictly below the certified lower end
        long long p = (Rational(2) / w->lo).floor() + 1;
        if (!forced_p.empty()) {
            if (static_cast<size_t>(depth - 1) < forced_p.size()) {
                long long forced = forced_p[depth - 1];
                if (Rational(2, forced) >= w->lo)
                    throw ArgumentError("forced p = " + std::to_string(forced) +
                                        " does not clear the window " + w->str());
                p = forced;
            }
        }
        res.ps.push_back(p);
        rep.trace.push_back({"iterated-cables",
                             "depth " + std::to_string(depth) + ": chose p = " + std::to_string(p) +
                                 " with 2/p < " + w->lo.str()});
        KnotFacts next = derive_cable(cur, p, 1);
        id = "cable(" + id + "," + std::to_string(p) + ",1)";
        auto wn = next.first_sing_window();
        if (!wn || !next.tau_nonzero()) {
            rep.trace.push_back({"iterated-cables", "no certified window for " + id});
            rep.verdict = Verdict::inconclusive;
            return res;
        }
        SingularityCertificate c;
        c.knot = id;
        if (wn->is_point())
            c.location = wn->lo;
        else
            c.location = *wn;
        certs.push_back(c);
        cur = std::move(next);
        w = wn;
    }
    IndependenceReport checked = check_independence(std::move(certs));
    checked.trace.insert(checked.trace.begin(), rep.trace.begin(), rep.trace.end());
    res.report = std::move(checked);
    return res;
}

SingularityCertificate certify_summand_window_cable(const KnotFacts& f, long long p,
                                                    const std::string& id) {
    if (p < 1 || p > (1LL << 22))
        throw ArgumentError("cable parameter out of range for the exhaustive window argument");
    if (!f.tau || *f.tau != 1 || !f.g4.exact() || *f.g4.exact_value() != 1 || !f.gc.exact() ||
        *f.gc.exact_value() != 1 || !f.upsilon_simple_known())
        throw ArgumentError(
            "summand window needs a simple-profile knot with tau = g4 = gc = 1");
    // first singularity in [1/p, 2/(p+1)]; gc of the cable is exactly p, so
    // the jump is bounded by 2p and the window forces t = 2/(p+l), jump
    // exactly p+l, for some l in [1, p]
    SingularityCertificate c;
    c.knot = id;
    if (p == 1)
        c.location = Rational(1);
    else
        c.location = Interval(Rational(1, p), Rational(2, p + 1));
    std::optional<Rational> common;
    for (long long l = 1; l <= p; ++l) {
        Rational t(2, p + l);
        Rational lam = lambda_value(t, p + l);
        if (!(lam == Rational(1) || lam == Rational(-1)))
            throw CertificateError("window case l = " + std::to_string(l) +
                                   " gives non-unit lambda " + lam.str());
        if (common && !(*common == lam))
            throw CertificateError("window cases disagree on lambda");
        common = lam;
    }
    c.lambda = common;
    c.lambda_certified = true;
    if (p == 1) c.delta = 2;
    return c;
}

SingularityCertificate certify_summand_window(const KnotFacts& f, long long i,
                                              const std::string& id) {
    if (i < 0 || i > 22) throw ArgumentError("power index out of range");
    return certify_summand_window_cable(f, 1LL << i, id);
}

JnResult jn_family(const KnotFacts& k, long long n, long long p, int q_sign,
                   std::optional<Rational> declared_first_sing) {
    if (n < 1) throw ArgumentError("jn_family needs n >= 1");
    if (q_sign != 1 && q_sign != -1) throw ArgumentError("q must be +1 or -1");
    JnResult res;
    IndependenceReport& rep = res.report;
    auto fail = [&](const std::string& why) -> JnResult& {
        rep.trace.push_back({"jn-family", "hypothesis failed: " + why});
        return res;
    };
    if (!k.upsilon_simple_known() || !k.tau || *k.tau <= 0)
        return fail("simple profile with tau > 0");
    if (!k.top_slice) return fail("K topologically slice");
    if (!k.g4.exact() || *k.g4.exact_value() != *k.tau) return fail("g4(K) = tau(K)");

    // J_n = 2nK # -K_{2n,1}, assembled from the actual rules
    KnotFacts twonk = k;
    for (long long i = 1; i < 2 * n; ++i) twonk = rule_sum(twonk, k);
    KnotFacts cable = derive_cable(k, 2 * n, 1);
    KnotFacts jn = rule_sum(twonk, rule_mirror(cable));
    jn.note("jn-construction", "J_n = 2nK # -K_{2n,1} with n = " + std::to_string(n));
    if (declared_first_sing) {
        KnotFacts declared;
        declared.first_sing = *declared_first_sing;
        jn = merge_facts(jn, declared);
        jn.note("jn-declared-singularity",
                "declared first singularity at " + declared_first_sing->str());
    }
    tighten(jn);
    res.jn = jn;

    if (!jn.tau || *jn.tau != 0) return fail("tau(J_n) = 0");
    if (!jn.upsilon1_nonzero()) return fail("upsilon(J_n) != 0");

    auto jw = jn.first_sing_window();
    if (!jw) return fail("certified first singularity window for J_n");
    SingularityCertificate cj;
    cj.knot = "J_" + std::to_string(n);
    if (jw->is_point())
        cj.location = jw->lo;
    else
        cj.location = *jw;

    KnotFacts jn_cable = derive_cable(jn, p, q_sign);
    auto cw = jn_cable.first_sing_window();
    if (!cw) return fail("certified window for the (p," + std::to_string(q_sign) + ") cable");
    SingularityCertificate cc;
    cc.knot = "(J_" + std::to_string(n) + ")_{" + std::to_string(p) + "," +
              std::to_string(q_sign) + "}";
    cc.location = *cw;

    rep = check_independence({cj, cc});
    rep.trace.push_back({"jn-family",
                         "upsilon(J_n) in " + jn.upsilon1.str() + ", tau(J_n) = 0, windows " +
                             jw->str() + " and " + cw->str()});
    return res;
}

}  // namespace ups
