#include "ups/cables.hpp"

#include <algorithm>
#include <numeric>

#include "ups/rules.hpp"

namespace ups {

static void require_coprime(long long p, long long q) {
    if (p < 1) throw ArgumentError("cable parameter p must be >= 1");
    if (std::gcd(p, q < 0 ? -q : q) != 1)
        throw ArgumentError("cable parameters (" + std::to_string(p) + "," + std::to_string(q) +
                            ") are not coprime");
}

std::vector<long long> tau_cable(long long tau, std::optional<int> epsilon, long long p,
                                 long long q) {
    require_coprime(p, q);
    if (p == 1) return {tau};
    long long torus_plus = (q - 1) % 2 == 0 ? checked_mul(p - 1, (q - 1) / 2)
                                            : checked_mul((p - 1) / 2, q - 1);
    long long torus_minus = (q + 1) % 2 == 0 ? checked_mul(p - 1, (q + 1) / 2)
                                             : checked_mul((p - 1) / 2, q + 1);
    long long plus = checked_add(checked_mul(p, tau), torus_plus);    // epsilon = 1
    long long minus = checked_add(checked_mul(p, tau), torus_minus);  // epsilon = -1
    if (epsilon) {
        if (*epsilon == 1) return {plus};
        if (*epsilon == -1) return {minus};
        if (tau != 0)
            throw ArgumentError("epsilon = 0 forces tau = 0, got tau = " + std::to_string(tau));
        // tau(K_{p,q}) = tau(T_{p,q})
        return {q > 0 ? torus_plus : torus_minus};
    }
    std::vector<long long> vals{plus, minus};
    // with tau = 0 the epsilon = 0 value coincides with one of the two
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

long long sigma_torus(long long p, long long q) {
    if (p < 2) throw ArgumentError("sigma_torus needs p >= 2");
    require_coprime(p, q);
    if (q < 0) return -sigma_torus(p, -q);
    if (q <= 1) return 0;  // unknot
    if (p > 100000000 / q)
        throw ArgumentError("torus parameters too large for the exact signature count");
    long long pos = 0, neg = 0;
    // a = i/p + j/q compared against 1/2 and 3/2 via 2(iq + jp) vs pq, 3pq
    for (long long i = 1; i < p; ++i) {
        for (long long j = 1; j < q; ++j) {
            long long twice = 2 * (i * q + j * p);
            if (twice > p * q && twice < 3 * p * q)
                ++neg;
            else
                ++pos;
        }
    }
    return pos - neg;
}

std::optional<long long> sigma_cable(std::optional<long long> sigma_k, bool top_slice, long long p,
                                     long long q) {
    require_coprime(p, q);
    if (p == 1) return sigma_k ? sigma_k : (top_slice ? std::optional<long long>(0) : std::nullopt);
    long long torus = sigma_torus(p, q);
    if (p % 2 == 0) return torus;  // omega^p = 1 kills the companion term
    if (top_slice) return torus;
    if (sigma_k) return *sigma_k + torus;
    return std::nullopt;
}

Envelope chen_envelope(const PLFunction& ups_k, long long p, long long q) {
    require_coprime(p, q);
    if (p < 2) throw ArgumentError("chen_envelope needs p >= 2");
    // reparametrized profile t -> Upsilon_K(pt), total on [0,2] by extending
    // the last slope past the validity window
    std::vector<Rational> breaks;
    for (const auto& b : ups_k.breakpoints()) breaks.push_back(b / Rational(p));
    auto shifted = [&](long long c) {
        std::vector<long long> slopes;
        for (long long s : ups_k.slopes()) slopes.push_back(p * s - c);
        return PLFunction::from_segments(ups_k.anchor(), breaks, slopes);
    };
    Envelope env;
    env.lower = shifted((p - 1) * (q + 1) / 2);
    env.upper = shifted((p - 1) * (q - 1) / 2);
    env.valid_on = Interval(Rational(0), Rational(2, p));
    return env;
}

void apply_cable_genus_bounds(const KnotFacts& k, long long p, long long q, KnotFacts& out) {
    if (q != 1) return;
    if (k.g4.hi) {
        out.g4 = out.g4.meet(IntRange::at_most(checked_mul(p, *k.g4.hi)));
        out.note("cable-four-genus-bound",
                 "g4(K_{p,1}) <= p*g4(K) via p banded parallel copies: <= " +
                     std::to_string(checked_mul(p, *k.g4.hi)));
    }
    if (k.gc.hi) {
        out.gc = out.gc.meet(IntRange::at_most(checked_mul(p, *k.gc.hi)));
        out.note("cable-concordance-genus-bound",
                 "gc(K_{p,1}) <= p*gc(K) = " + std::to_string(checked_mul(p, *k.gc.hi)));
    }
    if (p % 2 == 0) {
        out.gamma4 = out.gamma4.meet(IntRange::at_most(p / 2));
        out.note("cable-crosscap-bound",
                 "gamma4(K_{2n,1}) <= n = " + std::to_string(p / 2) +
                     " via the non-orientable band sum on the cabling torus");
    }
    if (k.tau && *k.tau > 0 && k.g4.exact() && *k.g4.exact_value() == *k.tau) {
        out.g4 = out.g4.meet(IntRange::at(checked_mul(p, *k.tau)));
        out.note("cable-four-genus-equality",
                 "tau(K) = g4(K) > 0 and q = 1 force g4 = tau = " + std::to_string(checked_mul(p, *k.tau)));
    }
    if (k.tau && *k.tau > 0 && k.gc.exact() && *k.gc.exact_value() == *k.tau) {
        out.gc = out.gc.meet(IntRange::at(checked_mul(p, *k.tau)));
        out.note("cable-concordance-genus-equality",
                 "tau(K) = gc(K) > 0 and q = 1 force gc = tau = " + std::to_string(checked_mul(p, *k.tau)));
    }
}

bool first_sing_cable(const KnotFacts& k, long long p, long long q, KnotFacts& out) {
    require_coprime(p, q);
    if (p < 2) throw ArgumentError("first_sing_cable needs p >= 2");
    std::optional<Interval> window;
    auto contribute = [&](const Interval& w, const std::string& rule, const std::string& detail) {
        if (!window) {
            window = w;
        } else {
            auto meet = Interval::intersect(*window, w);
            if (!meet)
                throw DeriveError("contradictory first-singularity windows: " + window->str() +
                                  " vs " + w.str());
            window = *meet;
        }
        out.note(rule, detail + " -> " + w.str());
    };

    bool tau_nz = k.tau_nonzero();
    if (tau_nz)
        contribute(Interval(Rational(0), Rational(2, p), false, true), "cable-sing-window",
                   "tau(K) != 0 puts the first cable singularity in (0, 2/p]");

    if (k.tau && *k.tau != 0) {
        long long at = *k.tau < 0 ? -*k.tau : *k.tau;
        Rational denom = Rational(2) * Rational(p) * Rational(at) - Rational(p - 1);
        Rational hi = Rational(2 * at) / denom;
        Interval better(Rational(0), hi, false, true);
        if (k.upsilon_simple_known()) {
            contribute(better, "cable-sing-window-simple",
                       "Upsilon-simple companion, tau != 0");
        } else if (auto w = k.first_sing_window()) {
            Rational hyp_lo = (Rational(2) * Rational(p) * Rational(at - 1) + Rational(2)) / denom;
            Interval hypothesis(hyp_lo, Rational(1), false, true);
            if (w->subset_of(hypothesis))
                contribute(better, "cable-sing-window-late-companion",
                           "first singularity of K inside " + hypothesis.str());
        }
    }

    // q = 1 with g4 = tau > 0: the cable profile is forced linear of slope
    // -p*tau out to s/p, where (0,s) is the companion's singularity-free zone
    if (q == 1 && k.tau && *k.tau > 0 && k.g4.exact() && *k.g4.exact_value() == *k.tau) {
        Rational s = k.sing_free_radius();
        if (s > Rational(1)) s = Rational(1);
        if (s > Rational(0)) {
            contribute(Interval(s / Rational(p), Rational(2, p)), "cable-sing-free-transfer",
                       "g4 = tau > 0, q = 1: no cable singularity in (0, " +
                           (s / Rational(p)).str() + ")");
        }
    }

    if (k.tau && *k.tau == 0 && k.upsilon1_nonzero())
        contribute(Interval(Rational(0), Rational(1, p), false, false), "cable-sing-window-small",
                   "tau(K) = 0 with upsilon(K) != 0 puts the first cable singularity in (0, 1/p)");

    if (!window) {
        out.note("cable-sing-window", "no applicable first-singularity rule");
        return false;
    }
    out.first_sing = *window;
    return true;
}

KnotFacts derive_cable(const KnotFacts& k, long long p, long long q) {
    require_coprime(p, q);
    if (p == 1) {
        KnotFacts out = k;
        out.note("cable-identity", "(1,q) cables are the knot itself");
        return out;
    }
    KnotFacts out;
    if (k.tau) {
        auto vals = tau_cable(*k.tau, k.epsilon, p, q);
        if (vals.size() == 1) {
            out.tau = vals[0];
            out.note("cable-tau", "tau(K_{p,q}) = " + std::to_string(vals[0]) +
                                      (k.epsilon ? " (epsilon = " + std::to_string(*k.epsilon) + ")"
                                                 : " (all epsilon cases agree)"));
        } else {
            out.tau_cases = vals;
            std::string list;
            for (long long v : vals) list += (list.empty() ? "" : ", ") + std::to_string(v);
            out.note("cable-tau-cases", "epsilon unknown; tau(K_{p,q}) in {" + list + "}");
        }
    } else if (!k.tau_cases.empty()) {
        std::vector<long long> all;
        for (long long t : k.tau_cases)
            for (long long v : tau_cable(t, k.epsilon, p, q)) all.push_back(v);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        if (all.size() == 1)
            out.tau = all[0];
        else
            out.tau_cases = all;
        out.note("cable-tau-cases", "companion tau known only as a case set");
    }

    if (auto s = sigma_cable(k.sigma, k.top_slice, p, q)) {
        out.sigma = *s;
        out.note("cable-signature",
                 "sigma(K_{p,q}) = sigma_{omega^p}(K) + sigma(T(p,q)) = " + std::to_string(*s) +
                     (p % 2 == 0 ? " (even p: companion term vanishes)" : ""));
    }

    apply_cable_genus_bounds(k, p, q, out);

    if (const PLFunction* f = k.exact_upsilon()) {
        out.upsilon = chen_envelope(*f, p, q);
        out.note("cable-chen-envelope",
                 "Upsilon_K(pt) sandwich of width (p-1)t on [0, " + Rational(2, p).str() + "]");
    }

    first_sing_cable(k, p, q, out);

    if (k.top_slice && (q == 1 || q == -1)) {
        out.top_slice = true;
        out.note("cable-top-slice",
                 "(p,+-1) cables of topologically slice knots are topologically slice");
    }

    tighten(out);
    return out;
}

}  // namespace ups
