#include "doctest.h"
#include "ups/json_io.hpp"
#include "ups/pl_axioms.hpp"
#include "ups/rules.hpp"

using namespace ups;

static Rational R(long long n, long long d = 1) { return Rational(n, d); }

static FactTable base_table() {
    json rec = json::parse(R"js({
      "name": "RHT", "tau": 1, "epsilon": 1, "sigma": -2, "g3": 1, "g4": 1, "gc": 1,
      "upsilon": {"anchor": "0/1", "pairs": [["0/1", -1], ["1/1", 1]]}
    })js");
    return load_facts(json{{"generators", json::array({rec})}});
}

static KnotFacts derive_str(const std::string& s, const FactTable& t) {
    return derive(parse_expr(s), t);
}

TEST_CASE("torus generator facts") {
    FactTable t;
    KnotFacts f = derive_str("T(2,3)", t);
    CHECK(*f.tau == 1);
    CHECK(*f.epsilon == 1);
    CHECK(*f.sigma == -2);
    CHECK(f.upsilon_simple_known());
    CHECK(*f.upsilon1.exact_value() == -1);
    CHECK(*f.first_sing_exact() == R(1));

    KnotFacts g = derive_str("T(3,4)", t);
    CHECK(*g.tau == 3);
    CHECK(*g.sigma == -6);
    CHECK(*g.first_sing_exact() == R(2, 3));
    CHECK(!g.exact_upsilon());

    // T(q,p), T(p,-q) and T(1,q) normalize
    CHECK(*derive_str("T(4,3)", t).tau == 3);
    CHECK(*derive_str("T(3,-4)", t).tau == -3);
    CHECK(*derive_str("T(3,-4)", t).sigma == 6);
    CHECK(*derive_str("T(1,5)", t).tau == 0);
    CHECK(derive_str("T(1,5)", t).top_slice);
}

TEST_CASE("mirror negates the odd invariants and fixes the genus bounds") {
    FactTable t = base_table();
    KnotFacts f = derive_str("-RHT", t);
    CHECK(*f.tau == -1);
    CHECK(*f.epsilon == -1);
    CHECK(*f.sigma == 2);
    CHECK(*f.upsilon1.exact_value() == 1);
    CHECK(*f.g4.exact_value() == 1);
    CHECK(*f.exact_upsilon() == upsilon_simple(-1));

    KnotFacts ff = rule_mirror(rule_mirror(derive_str("RHT", t)));
    KnotFacts orig = derive_str("RHT", t);
    CHECK(ff.tau == orig.tau);
    CHECK(ff.sigma == orig.sigma);
    CHECK(*ff.exact_upsilon() == *orig.exact_upsilon());
}

TEST_CASE("reverse changes nothing") {
    FactTable t = base_table();
    KnotFacts f = derive_str("rev(RHT)", t);
    KnotFacts g = derive_str("RHT", t);
    CHECK(f.tau == g.tau);
    CHECK(f.sigma == g.sigma);
    CHECK(*f.exact_upsilon() == *g.exact_upsilon());
}

TEST_CASE("connected sums add") {
    FactTable t = base_table();
    KnotFacts f = derive_str("RHT # RHT # RHT", t);
    CHECK(*f.tau == 3);
    CHECK(*f.sigma == -6);
    CHECK(*f.exact_upsilon() == upsilon_simple(3));
    CHECK(*f.g4.hi == 3);

    KnotFacts z = derive_str("RHT # -RHT", t);
    CHECK(*z.tau == 0);
    CHECK(z.exact_upsilon()->is_zero());
    CHECK(std::holds_alternative<NoSingularity>(z.first_sing));

    KnotFacts u = derive_str("RHT # U", t);
    CHECK(*u.tau == 1);
    CHECK(*u.exact_upsilon() == upsilon_simple(1));
}

TEST_CASE("whitehead doubles follow the clasp/twist case split") {
    FactTable t = base_table();
    KnotFacts plus0 = derive_str("wh+(RHT)", t);
    CHECK(*plus0.tau == 1);
    CHECK(*plus0.exact_upsilon() == upsilon_simple(1));
    CHECK(plus0.top_slice);
    CHECK(*plus0.sigma == 0);
    CHECK(*plus0.g4.exact_value() == 1);
    CHECK(*plus0.gc.exact_value() == 1);
    CHECK(*plus0.epsilon == 1);  // tau attains the g4 bound

    CHECK(derive_str("wh+(RHT, k=4)", t).exact_upsilon()->is_zero());
    CHECK(*derive_str("wh+(RHT, k=1)", t).tau == 1);
    CHECK(*derive_str("wh+(RHT, k=2)", t).tau == 0);
    CHECK(derive_str("wh-(RHT)", t).exact_upsilon()->is_zero());
    CHECK(*derive_str("wh-(RHT, k=3)", t).tau == -1);
    CHECK(*derive_str("wh-(RHT, k=3)", t).exact_upsilon() == upsilon_simple(-1));
    CHECK(!derive_str("wh-(RHT)", t).top_slice);

    // twist knots: doubles of the unknot
    CHECK(derive_str("wh+(U)", t).exact_upsilon()->is_zero());
    CHECK(*derive_str("wh+(U, k=-1)", t).tau == 1);
    CHECK(derive_str("wh-(U)", t).exact_upsilon()->is_zero());
    CHECK(*derive_str("wh-(U, k=1)", t).tau == -1);
}

TEST_CASE("generalized whitehead doubles cover the three cases") {
    FactTable t = base_table();
    // s < 2 tauJ and k < 2 tauK
    KnotFacts a = derive_str("gwh(RHT, s=0, k=0, tauJ=1)", t);
    CHECK(*a.exact_upsilon() == upsilon_simple(1));
    CHECK(a.top_slice);
    // s = 2 tauJ exactly: zero
    KnotFacts b = derive_str("gwh(RHT, s=2, k=0, tauJ=1)", t);
    CHECK(b.exact_upsilon()->is_zero());
    // s > 2 tauJ and k > 2 tauK
    KnotFacts c = derive_str("gwh(RHT, s=3, k=3, tauJ=1)", t);
    CHECK(*c.exact_upsilon() == upsilon_simple(-1));
    CHECK(*c.g3.hi == 1);
}

TEST_CASE("pattern satellites shift tau and sandwich the profile") {
    FactTable t = base_table();
    KnotFacts f = derive_str("mazur(RHT)", t);
    CHECK(*f.tau == 2);
    const Envelope* env = f.upsilon_envelope();
    REQUIRE(env);
    CHECK(env->lower.eval(R(1, 2)) == R(-1));  // -1/2 - 1/2
    CHECK(env->upper.eval(R(1, 2)) == R(0));
    CHECK(env->valid_on == Interval(R(0), R(1)));
    // the companion profile sits inside its own sandwich
    CHECK(env->lower.eval(R(1, 2)) <= R(-1, 2));
    CHECK(env->upper.eval(R(1, 2)) >= R(-1, 2));
    // positive first jump at 1 pins the satellite singularity in (0,1]
    auto w = f.first_sing_window();
    REQUIRE(w);
    CHECK(w->hi == R(1));
    CHECK(!w->lo_closed);

    KnotFacts g = derive_str("sat(RHT, r=3, dtau=3)", t);
    CHECK(*g.tau == 4);
    const Envelope* env3 = g.upsilon_envelope();
    REQUIRE(env3);
    // width 2*r*t at each t
    CHECK(env3->upper.eval(R(1, 2)) - env3->lower.eval(R(1, 2)) == R(3));

    CHECK(*derive_str("mazur(mazur(mazur(RHT)))", t).tau == 4);
}

TEST_CASE("crosscap bound from upsilon and sigma") {
    FactTable t = base_table();
    KnotFacts f = derive_str("wh+(RHT) # wh+(RHT) # wh+(RHT)", t);
    CHECK(*f.tau == 3);
    CHECK(*f.upsilon1.exact_value() == -3);
    CHECK(*f.sigma == 0);
    CHECK(*f.gamma4.lo == 3);
    CHECK(*crosscap_lower_bound(f) == 3);

    KnotFacts m;
    m.upsilon1 = IntRange::at(-3);
    m.sigma = -2;
    CHECK(*crosscap_lower_bound(m) == 2);
    m.sigma = 0;
    CHECK(crosscap_lower_bound(KnotFacts{}) == std::nullopt);
}

TEST_CASE("consistency violations are reported, never repaired") {
    KnotFacts f;
    f.upsilon = upsilon_simple(1);
    f.tau = 2;  // contradicts the initial slope
    auto v = consistency_check(f);
    bool found = false;
    for (const auto& viol : v) found = found || viol.check == "axiom-slope-at-zero";
    CHECK(found);

    KnotFacts g;
    g.upsilon = Envelope{upsilon_simple(-1), upsilon_simple(1), Interval(R(0), R(1))};
    // lower(1) = 1 > upper(1) = -1
    bool env_bad = false;
    for (const auto& viol : consistency_check(g)) env_bad |= viol.check == "envelope-order";
    CHECK(env_bad);

    KnotFacts h;
    h.tau = 3;
    h.g4 = IntRange::at_most(2);
    bool tau_bad = false;
    for (const auto& viol : consistency_check(h)) tau_bad |= viol.check == "tau-vs-g4";
    CHECK(tau_bad);
}

TEST_CASE("derive rejects unresolved generators and inconsistent declarations") {
    FactTable t = base_table();
    CHECK_THROWS_AS(derive_str("NoSuchKnot", t), DeriveError);

    // expression-level declaration conflicting with the derived value
    json rec = json::parse(R"js({"name": "wh+(RHT)", "tau": 0})js");
    json rht = json::parse(R"js({
      "name": "RHT", "tau": 1, "epsilon": 1, "sigma": -2, "g3": 1, "g4": 1, "gc": 1,
      "upsilon": {"anchor": "0/1", "pairs": [["0/1", -1], ["1/1", 1]]}
    })js");
    FactTable t2 = load_facts(json{{"generators", json::array({rht, rec})}});
    CHECK_THROWS_AS(derive_str("wh+(RHT)", t2), DeriveError);
}

TEST_CASE("declared expression facts merge into the derivation") {
    json rht = json::parse(R"js({
      "name": "RHT", "tau": 1, "epsilon": 1, "sigma": -2, "g3": 1, "g4": 1, "gc": 1,
      "upsilon": {"anchor": "0/1", "pairs": [["0/1", -1], ["1/1", 1]]}
    })js");
    json cable_fact = json::parse(R"js({
      "name": "cable(RHT,2,3)", "first_singularity": "1/3", "alpha": -2
    })js");
    FactTable t = load_facts(json{{"generators", json::array({rht, cable_fact})}});
    KnotFacts f = derive(parse_expr("cable(RHT, 2, 3)"), t);
    CHECK(*f.tau == 3);  // 2*1 + (1)(2)/2 * ... epsilon = 1: 2+1
    CHECK(*f.first_sing_exact() == R(1, 3));
    CHECK(*f.alpha == -2);
}

TEST_CASE("monotonicity: a larger table never loses conclusions") {
    json rht = json::parse(R"js({
      "name": "RHT", "tau": 1, "epsilon": 1, "sigma": -2, "g3": 1, "g4": 1, "gc": 1,
      "upsilon": {"anchor": "0/1", "pairs": [["0/1", -1], ["1/1", 1]]}
    })js");
    FactTable small = load_facts(json{{"generators", json::array({rht})}});
    json extra = json::parse(R"js({"name": "cable(wh+(RHT),2,1)", "first_singularity": "2/3"})js");
    FactTable big = load_facts(json{{"generators", json::array({rht, extra})}});

    for (const char* e : {"wh+(RHT)", "cable(wh+(RHT),2,1)", "mazur(RHT)"}) {
        KnotFacts a = derive_str(e, small);
        KnotFacts b = derive_str(e, big);
        if (a.tau) CHECK(*b.tau == *a.tau);
        if (a.sigma) CHECK(*b.sigma == *a.sigma);
        if (a.g4.hi) CHECK(*b.g4.hi <= *a.g4.hi);
        if (a.first_sing_window()) {
            REQUIRE(b.first_sing_window());
            CHECK(b.first_sing_window()->subset_of(*a.first_sing_window()));
        }
    }
}

TEST_CASE("every expression over a small grammar grid derives consistently") {
    FactTable t = base_table();
    std::vector<std::string> atoms{"U", "RHT", "-RHT", "T(2,3)", "T(3,4)", "T(2,-5)"};
    std::vector<std::string> exprs = atoms;
    for (const auto& a : atoms) {
        exprs.push_back("wh+(" + a + ")");
        exprs.push_back("wh-(" + a + ", k=3)");
        exprs.push_back("mazur(" + a + ")");
        exprs.push_back("rev(" + a + ")");
        exprs.push_back("gwh(" + a + ", s=1, k=-2, tauJ=1)");
        for (const char* pq : {"2,1", "3,1", "2,3", "3,-2", "5,2"})
            exprs.push_back("cable(" + a + "," + pq + ")");
    }
    size_t base_count = exprs.size();
    for (size_t i = 0; i < base_count; i += 7)
        for (size_t j = 0; j < base_count; j += 11)
            exprs.push_back(exprs[i] + " # -(" + exprs[j] + ")");
    for (const auto& e : exprs) {
        CAPTURE(e);
        KnotFacts f = derive(parse_expr(e), t);  // throws on any inconsistency
        CHECK(consistency_check(f).empty());
        // a derived exact profile always passes validation with its facts
        if (const PLFunction* u = f.exact_upsilon()) {
            CandidateClaims c;
            c.tau = f.tau;
            c.g4 = f.g4.hi;
            c.gc = f.gc.hi;
            CHECK(validate_candidate(*u, c).passed());
        }
    }
}

TEST_CASE("cable envelopes bound the value at 1 when they reach it") {
    FactTable t = base_table();
    KnotFacts c21 = derive(parse_expr("cable(RHT,2,1)"), t);
    CHECK(c21.upsilon1 == IntRange{-1, 0});
    // p >= 3 envelopes stop before 1, so no bound appears from them
    KnotFacts c31 = derive(parse_expr("cable(RHT,3,1)"), t);
    CHECK(*c31.tau == 3);
}

TEST_CASE("sum transfer pins the first singularity from the early summand") {
    // cable part with a declared early singularity plus a torus knot whose
    // own first singularity comes later
    json d = json::parse(R"js({"name": "D", "tau": 1, "epsilon": 1, "g4": 1})js");
    json cd = json::parse(
        R"js({"name": "cable(D,2,7)", "first_singularity": "2/7", "alpha": -2})js");
    FactTable t = load_facts(json{{"generators", json::array({d, cd})}});
    KnotFacts f = derive_str("cable(D,2,7) # -T(3,7)", t);
    // tau: cable 2*1 + 3 = 5, minus tau(T(3,7)) = -6 -> -1
    CHECK(*f.tau == -1);
    REQUIRE(f.first_sing_exact());
    CHECK(*f.first_sing_exact() == R(2, 7));
    // alpha: -2 + (-tau(-T(3,7))) = -2 + 6 = 4
    REQUIRE(f.alpha);
    CHECK(*f.alpha == 4);
}
