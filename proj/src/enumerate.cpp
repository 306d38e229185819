#include "ups/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "ups/pl_axioms.hpp"

namespace ups {

namespace {

// half profile on [0,1]: slopes between consecutive chosen breakpoints
struct Half {
    std::vector<Rational> breaks;  // in (0,1), increasing
    std::vector<long long> slopes; // breaks.size() + 1 entries
};

// close the half profile symmetrically: slope after 1 mirrors to -s, and
// interior breakpoints reflect to 2 - t
PLFunction close_symmetric(const Half& h) {
    std::vector<Rational> breaks = h.breaks;
    std::vector<long long> slopes = h.slopes;
    long long s_end = slopes.back();
    if (s_end != 0) {
        breaks.push_back(Rational(1));
        slopes.push_back(-s_end);
    }
    for (auto it = h.breaks.rbegin(); it != h.breaks.rend(); ++it)
        breaks.push_back(Rational(2) - *it);
    for (size_t i = h.slopes.size(); i-- > 1;) slopes.push_back(-h.slopes[i - 1]);
    return PLFunction::from_segments(Rational(0), std::move(breaks), std::move(slopes));
}

bool profile_less(const PLFunction& a, const PLFunction& b) {
    long long ta = -a.slope_at_zero(), tb = -b.slope_at_zero();
    if (ta != tb) return ta < tb;
    if (a.breakpoints() != b.breakpoints()) return a.breakpoints() < b.breakpoints();
    return a.slopes() < b.slopes();
}

void sort_profiles(std::vector<PLFunction>& v) {
    std::sort(v.begin(), v.end(), profile_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool even_jump_at(const Rational& t, long long delta) {
    Rational v = t * Rational(delta);
    return v.is_integer() && v.num() % 2 == 0;
}

}  // namespace

std::vector<PLFunction> enumerate_profiles(long long gc, std::optional<long long> tau) {
    if (gc < 1) throw ArgumentError("enumerate_profiles needs gc >= 1");
    if (tau && (*tau > gc || -*tau > gc))
        throw ArgumentError("|tau| cannot exceed gc");

    // admissible interior locations: t = 2k/d for a jump of size d <= 2gc,
    // collected over all sizes; all lie in [1/gc, 1) automatically
    std::vector<Rational> grid;
    for (long long d = 2; d <= 2 * gc; ++d)
        for (long long k = 1; 2 * k < d; ++k) grid.push_back(Rational(2 * k, d));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<PLFunction> out;
    std::vector<long long> taus;
    if (tau)
        taus.push_back(*tau);
    else
        for (long long t = -gc; t <= gc; ++t) taus.push_back(t);

    for (long long t0 : taus) {
        Half h;
        h.slopes = {-t0};
        // depth-first over (grid position, slope changes)
        auto rec = [&](auto&& self, size_t from) -> void {
            out.push_back(close_symmetric(h));
            for (size_t g = from; g < grid.size(); ++g) {
                long long s = h.slopes.back();
                for (long long next = -gc; next <= gc; ++next) {
                    if (next == s || !even_jump_at(grid[g], next - s)) continue;
                    h.breaks.push_back(grid[g]);
                    h.slopes.push_back(next);
                    self(self, g + 1);
                    h.breaks.pop_back();
                    h.slopes.pop_back();
                }
            }
        };
        rec(rec, 0);
    }
    sort_profiles(out);
    return out;
}

std::vector<PLFunction> oracle_enumerate(long long gc, long long denominator_bound) {
    if (gc < 1) throw ArgumentError("oracle_enumerate needs gc >= 1");
    if (denominator_bound < 2 * gc)
        throw ArgumentError("denominator bound must be at least 2gc");

    std::vector<Rational> grid;
    for (long long b = 1; b <= denominator_bound; ++b)
        for (long long a = 1; a < b; ++a)
            if (std::gcd(a, b) == 1) grid.push_back(Rational(a, b));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<PLFunction> out;
    for (long long t0 = -gc; t0 <= gc; ++t0) {
        Half h;
        h.slopes = {-t0};
        auto rec = [&](auto&& self, size_t from) -> void {
            PLFunction f = close_symmetric(h);
            CandidateClaims claims;
            claims.tau = t0;
            claims.gc = gc;
            if (validate_candidate(f, claims).passed()) out.push_back(f);
            for (size_t g = from; g < grid.size(); ++g) {
                long long s = h.slopes.back();
                for (long long next = -gc; next <= gc; ++next) {
                    // pruning by the jump parity cannot drop survivors: any
                    // profile with an inadmissible jump fails the filter
                    if (next == s || !even_jump_at(grid[g], next - s)) continue;
                    h.breaks.push_back(grid[g]);
                    h.slopes.push_back(next);
                    self(self, g + 1);
                    h.breaks.pop_back();
                    h.slopes.pop_back();
                }
            }
        };
        rec(rec, 0);
    }
    sort_profiles(out);
    return out;
}

}  // namespace ups
