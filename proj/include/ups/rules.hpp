#pragma once

#include "ups/expr.hpp"
#include "ups/facts.hpp"
#include "ups/knot_facts.hpp"

namespace ups {

KnotFacts rule_mirror(const KnotFacts& f);
KnotFacts rule_reverse(const KnotFacts& f);
KnotFacts rule_sum(const KnotFacts& a, const KnotFacts& b);
KnotFacts rule_whitehead(const KnotFacts& k, int sign, long long twists);
KnotFacts rule_gen_whitehead(long long tau_j, long long s, const KnotFacts& k, long long twists);
KnotFacts rule_pattern_sat(const KnotFacts& k, long long r, long long dtau);

// |upsilon(K) - sigma(K)/2| when both are exactly known
std::optional<long long> crosscap_lower_bound(const KnotFacts& f);

// Constraint propagation to a fixpoint: range chains, epsilon defaulting,
// facts read off an exact profile, the crosscap triangle. Fills unknowns
// only; contradictions surface in consistency_check.
void tighten(KnotFacts& f);

// Built-in facts for T(p,q); normalizes orientation/order and handles the
// unknotted cases.
KnotFacts torus_facts(long long p, long long q);

// Built-in unknot record (also preloaded under the name "U").
KnotFacts unknot_facts();

// Forward propagation over the expression tree against an immutable fact
// table. Declared facts for a subexpression's canonical print are merged
// in. Throws DeriveError on unresolved generators or inconsistent facts.
KnotFacts derive(const ExprPtr& e, const FactTable& table);

// Field-wise merge of independently obtained facts about the same knot;
// throws DeriveError on conflicts (and checks declared exact profiles
// against derived envelopes).
KnotFacts merge_facts(const KnotFacts& a, const KnotFacts& b);

}  // namespace ups
