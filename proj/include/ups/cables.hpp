#pragma once

#include <optional>
#include <vector>

#include "ups/knot_facts.hpp"

namespace ups {

// tau of the (p,q) cable. One value when epsilon pins the case, otherwise
// the set of all applicable values (sorted, deduplicated); callers must
// then succeed under every value. epsilon = 0 requires tau = 0.
std::vector<long long> tau_cable(long long tau, std::optional<int> epsilon, long long p,
                                 long long q);

// Signature of the (p,q) torus knot at omega = -1, by counting the pairs
// (i,j) in [1,p-1]x[1,q-1] with i/p + j/q inside/outside (1/2, 3/2).
// Cross-validated against a Seifert-matrix signature oracle in the tests.
long long sigma_torus(long long p, long long q);

// sigma(K_{p,q}) at omega = -1: for even p the companion term is taken at
// omega^p = 1 and vanishes; for odd p it needs sigma(K) (0 when K is
// topologically slice). Unknown when neither is available.
std::optional<long long> sigma_cable(std::optional<long long> sigma_k, bool top_slice,
                                     long long p, long long q);

// Upsilon_K(pt) - (p-1)(q+-1)/2 * t sandwich, valid on [0, 2/p]. Needs the
// companion's exact profile and p >= 2.
Envelope chen_envelope(const PLFunction& ups_k, long long p, long long q);

// Appends the (p,1)-cable genus bounds and equalities to `out`.
void apply_cable_genus_bounds(const KnotFacts& k, long long p, long long q, KnotFacts& out);

// Tightest window for the first singularity of the cable's Upsilon among
// all applicable rules; records each contributor in `out.trace`. Returns
// false when no rule fires.
bool first_sing_cable(const KnotFacts& k, long long p, long long q, KnotFacts& out);

// Full (p,q)-cable derivation composite used by derive() and the family
// generators. p = 1 is the identity.
KnotFacts derive_cable(const KnotFacts& k, long long p, long long q);

}  // namespace ups
