// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] = repository root (for data files), argv[2] = CLI binary path.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "seifert_oracle.hpp"
#include "ups/cables.hpp"
#include "ups/enumerate.hpp"
#include "ups/independence.hpp"
#include "ups/json_io.hpp"
#include "ups/pl_axioms.hpp"
#include "ups/rules.hpp"

using namespace ups;

namespace {

int g_failures = 0;
std::string g_root, g_cli;

void criterion(int n, const std::string& label, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", n, label.c_str(),
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!ok) ++g_failures;
}

Rational R(long long n, long long d = 1) { return Rational(n, d); }

FactTable rht_table() {
    return load_facts_file(g_root + "/data/base_facts.json");
}

KnotFacts derive_str(const std::string& s, const FactTable& t) {
    return derive(parse_expr(s), t);
}

bool run_cli(const std::string& args, int expect_exit, const std::string& expect_output,
             std::string& detail) {
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        detail = "cannot run CLI";
        return false;
    }
    std::string output;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != expect_exit) {
        detail = "exit " + std::to_string(code) + " wanted " + std::to_string(expect_exit) +
                 "; output: " + output.substr(0, 200);
        return false;
    }
    if (!expect_output.empty() && output.find(expect_output) == std::string::npos) {
        detail = "output missing '" + expect_output + "': " + output.substr(0, 200);
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: ups_acceptance <repo-root> <cli-binary>\n";
        return 2;
    }
    g_root = argv[1];
    g_cli = argv[2];

    criterion(1, "profile enumeration counts with oracle agreement", [](std::string& d) {
        auto g1 = enumerate_profiles(1);
        if (g1.size() != 3 || !(g1[0] == upsilon_simple(-1)) || !g1[1].is_zero() ||
            !(g1[2] == upsilon_simple(1))) {
            d = "gc=1 gave " + std::to_string(g1.size()) + " profiles";
            return false;
        }
        auto g2 = enumerate_profiles(2);
        std::map<long long, int> strata;
        for (const auto& f : g2) strata[-f.slope_at_zero()]++;
        if (g2.size() != 13 || strata[0] != 1 || strata[1] != 2 || strata[-1] != 2 ||
            strata[2] != 4 || strata[-2] != 4) {
            d = "gc=2 strata off: total " + std::to_string(g2.size());
            return false;
        }
        if (!(oracle_enumerate(2, 8) == g2) || !(oracle_enumerate(1, 4) == g1)) {
            d = "brute-force oracle disagrees";
            return false;
        }
        return true;
    });

    criterion(2, "whitehead double table over tau in [-3,3], k in [-6,6]", [](std::string& d) {
        FactTable t;  // only the built-in unknot
        for (long long tau = -3; tau <= 3; ++tau) {
            KnotFacts companion;
            companion.tau = tau;
            for (long long k = -6; k <= 6; ++k) {
                KnotFacts plus = rule_whitehead(companion, 1, k);
                long long want_plus = k < 2 * tau ? 1 : 0;
                if (!plus.tau || *plus.tau != want_plus ||
                    !(*plus.exact_upsilon() == upsilon_simple(want_plus))) {
                    d = "wh+ tau=" + std::to_string(tau) + " k=" + std::to_string(k);
                    return false;
                }
                KnotFacts minus = rule_whitehead(companion, -1, k);
                long long want_minus = k > 2 * tau ? -1 : 0;
                if (!minus.tau || *minus.tau != want_minus ||
                    !(*minus.exact_upsilon() == upsilon_simple(want_minus))) {
                    d = "wh- tau=" + std::to_string(tau) + " k=" + std::to_string(k);
                    return false;
                }
            }
        }
        // twist knots: doubles of the unknot through the full engine
        for (long long k = -6; k <= 6; ++k) {
            KnotFacts tw = derive_str("wh+(U, k=" + std::to_string(k) + ")", t);
            if (!(*tw.exact_upsilon() == upsilon_simple(k < 0 ? 1 : 0))) {
                d = "twist knot k=" + std::to_string(k);
                return false;
            }
            KnotFacts tm = derive_str("wh-(U, k=" + std::to_string(k) + ")", t);
            if (!(*tm.exact_upsilon() == upsilon_simple(k > 0 ? -1 : 0))) {
                d = "negative twist knot k=" + std::to_string(k);
                return false;
            }
        }
        return true;
    });

    criterion(3, "tau of the cabled doubles and their mazur satellites", [](std::string& d) {
        // base facts: the double D with tau = 1, epsilon = 1, plus declared
        // first singularities of the cables from the literature
        json gens = json::array();
        gens.push_back(json{{"name", "D"}, {"tau", 1}, {"epsilon", 1}});
        for (long long n = 0; n <= 10; ++n) {
            long long p = n + 2, q = 2 * n + 3;
            json rec;
            rec["name"] = "cable(D," + std::to_string(p) + "," + std::to_string(q) + ")";
            rec["first_singularity"] = Rational(2, 2 * n + 3).str();
            rec["alpha"] = -(n * n + n);
            gens.push_back(rec);
        }
        FactTable t = load_facts(json{{"generators", gens}});
        for (long long n = 0; n <= 10; ++n) {
            long long p = n + 2, q = 2 * n + 3;
            std::string kn = "cable(D," + std::to_string(p) + "," + std::to_string(q) + ") # -T(" +
                             std::to_string(p) + "," + std::to_string(q) + ")";
            KnotFacts f = derive_str(kn, t);
            if (!f.tau || *f.tau != n + 2) {
                d = "tau(K_" + std::to_string(n) + ") = " +
                    (f.tau ? std::to_string(*f.tau) : "?");
                return false;
            }
            if (!f.first_sing_exact() || !(*f.first_sing_exact() == R(2, 2 * n + 3)) ||
                !f.alpha || *f.alpha != n + 1) {
                d = "singularity data of K_" + std::to_string(n);
                return false;
            }
            std::string expr = kn;
            for (long long r = 1; r <= 3; ++r) {
                expr = "mazur(" + expr + ")";
                KnotFacts m = derive_str(expr, t);
                if (!m.tau || *m.tau != n + 2 + r) {
                    d = "tau(M^" + std::to_string(r) + "(K_" + std::to_string(n) + "))";
                    return false;
                }
            }
        }
        return true;
    });

    criterion(4, "power-of-two cable family with the stated windows", [](std::string& d) {
        FactTable t = rht_table();
        KnotFacts wh = derive_str("wh+(RHT)", t);
        IndependenceReport rep = family_power_cables(wh, "wh+(RHT)", 2, 10);
        if (rep.verdict != Verdict::independent) {
            d = "verdict ";
            d += verdict_name(rep.verdict);
            return false;
        }
        if (rep.certificates.size() != 10) {
            d = "family size " + std::to_string(rep.certificates.size());
            return false;
        }
        for (long long i = 0; i < 10; ++i) {
            Interval w = rep.certificates[static_cast<size_t>(i)].window();
            if (!(w.lo == R(1, 1LL << i)) || !(w.hi == R(2, (1LL << i) + 1))) {
                d = "window " + std::to_string(i) + " is " + w.str();
                return false;
            }
        }
        return true;
    });

    criterion(5, "summand windows: unit lambda everywhere and the CLI verdict",
              [](std::string& d) {
                  FactTable t = rht_table();
                  KnotFacts wh = derive_str("wh+(RHT)", t);
                  std::vector<SingularityCertificate> certs;
                  for (long long i = 0; i <= 10; ++i) {
                      SingularityCertificate c =
                          certify_summand_window(wh, i, "member" + std::to_string(i));
                      if (!c.lambda || !(*c.lambda == R(1) || *c.lambda == R(-1)) ||
                          !c.lambda_certified) {
                          d = "lambda at i = " + std::to_string(i);
                          return false;
                      }
                      certs.push_back(c);
                  }
                  if (check_independence(certs).verdict != Verdict::summand_basis) {
                      d = "library verdict not summand_basis";
                      return false;
                  }
                  return run_cli("--facts " + g_root + "/data/base_facts.json certify-summand " +
                                     g_root + "/data/families/wh_power_cables.json",
                                 0, "summand_basis", d);
              });

    criterion(6, "crosscap growth of connected sums of positive doubles", [](std::string& d) {
        FactTable t = rht_table();
        std::string expr;
        for (long long k = 1; k <= 10; ++k) {
            expr += (k == 1 ? "" : " # ");
            expr += "wh+(RHT)";
            KnotFacts f = derive_str(expr, t);
            if (!f.gamma4.lo || *f.gamma4.lo != k) {
                d = "gamma4 lower bound at k = " + std::to_string(k) + " is " +
                    (f.gamma4.lo ? std::to_string(*f.gamma4.lo) : "?");
                return false;
            }
            if (!f.upsilon1.exact_value() || *f.upsilon1.exact_value() != -k || !f.sigma ||
                *f.sigma != 0) {
                d = "upsilon/sigma at k = " + std::to_string(k);
                return false;
            }
        }
        return true;
    });

    criterion(7, "torus knots vs iterated mazur satellites", [](std::string& d) {
        for (long long i : {1, 2, 4, 5, 7, 8, 10}) {
            if (!decide_torus_mazur(3, 4, i).independent) {
                d = "expected independent at i = " + std::to_string(i);
                return false;
            }
        }
        for (long long i : {3, 6, 9}) {
            if (decide_torus_mazur(3, 4, i).independent) {
                d = "expected inconclusive at i = " + std::to_string(i);
                return false;
            }
        }
        // gcd failure: tau(T(3,5)) = 4 kills i = 4 and i = 8
        if (decide_torus_mazur(3, 5, 4).independent ||
            decide_torus_mazur(3, 5, 8).independent || !decide_torus_mazur(3, 5, 1).independent) {
            d = "gcd hypothesis misfired for T(3,5)";
            return false;
        }
        return true;
    });

    criterion(8, "jn pairs: declared and derived singularity routes", [](std::string& d) {
        FactTable t = rht_table();
        KnotFacts wh = derive_str("wh+(RHT)", t);
        for (long long p = 2; p <= 6; ++p) {
            JnResult res = jn_family(wh, 1, p, 1, R(2, 3));
            if (res.report.verdict != Verdict::independent) {
                d = "n=1 p=" + std::to_string(p);
                return false;
            }
            if (!res.jn.tau || *res.jn.tau != 0 || !res.jn.upsilon1.hi ||
                *res.jn.upsilon1.hi > -1) {
                d = "J_1 facts at p=" + std::to_string(p);
                return false;
            }
        }
        for (long long p : {5, 6}) {
            JnResult res = jn_family(wh, 2, p, 1, std::nullopt);
            if (res.report.verdict != Verdict::independent) {
                d = "n=2 p=" + std::to_string(p);
                return false;
            }
            if (!res.jn.upsilon1.hi || *res.jn.upsilon1.hi > -2) {
                d = "upsilon(J_2) bound";
                return false;
            }
        }
        return true;
    });

    criterion(9, "property suites: algebra, axioms, sandwich, rank, signatures",
              [](std::string& d) {
                  // exact PL algebra laws, ten thousand random cases
                  std::mt19937_64 rng(7);
                  auto pick = [&rng](long long lo, long long hi) {
                      return std::uniform_int_distribution<long long>(lo, hi)(rng);
                  };
                  auto random_pl = [&]() {
                      std::vector<Rational> breaks;
                      size_t nb = static_cast<size_t>(pick(0, 4));
                      while (breaks.size() < nb) {
                          Rational t(pick(1, 23), 12);
                          bool dup = false;
                          for (const auto& b : breaks) dup = dup || b == t;
                          if (!dup) breaks.push_back(t);
                      }
                      std::sort(breaks.begin(), breaks.end());
                      std::vector<long long> slopes;
                      for (size_t i = 0; i <= breaks.size(); ++i) slopes.push_back(pick(-5, 5));
                      return PLFunction::from_segments(Rational(pick(-2, 2)), breaks, slopes);
                  };
                  for (int n = 0; n < 10000; ++n) {
                      PLFunction a = random_pl(), b = random_pl();
                      Rational t(pick(0, 24), 12);
                      if (!((a + b).eval(t) == a.eval(t) + b.eval(t)) ||
                          !((-a).eval(t) == -a.eval(t)) || !(a.scaled(3) == a + a + a) ||
                          !(a.reflected().reflected() == a)) {
                          d = "algebra law failed at case " + std::to_string(n);
                          return false;
                      }
                  }
                  // axiom fuzz: every admissible gc=2 profile accepts, mutants fail
                  for (const auto& f : enumerate_profiles(2)) {
                      CandidateClaims c;
                      c.tau = -f.slope_at_zero();
                      c.gc = 2;
                      if (!validate_candidate(f, c).passed()) {
                          d = "admissible profile rejected";
                          return false;
                      }
                      PLFunction shifted =
                          PLFunction::from_segments(R(1, 2), f.breakpoints(), f.slopes());
                      if (validate_candidate(shifted).passed()) {
                          d = "anchored mutant accepted";
                          return false;
                      }
                  }
                  // chen sandwich on declared exact cable facts: the (2,3)
                  // and (2,-3) cables of the unknot are the two trefoils
                  FactTable t23 = load_facts(json::parse(R"js({"generators": [
                      {"name": "cable(U,2,3)", "tau": 1,
                       "upsilon": {"anchor":"0/1","pairs":[["0/1",-1],["1/1",1]]}},
                      {"name": "cable(U,2,-3)", "tau": -1,
                       "upsilon": {"anchor":"0/1","pairs":[["0/1",1],["1/1",-1]]}}]})js"));
                  for (const char* expr : {"cable(U,2,3)", "cable(U,2,-3)"}) {
                      KnotFacts f = derive_str(expr, t23);  // merge checks containment
                      if (!f.exact_upsilon()) {
                          d = "declared cable profile lost";
                          return false;
                      }
                  }
                  // lambda-matrix rank on random triangular families
                  for (int trial = 0; trial < 20; ++trial) {
                      size_t size = static_cast<size_t>(pick(2, 8));
                      std::vector<long long> ds;
                      long long dd = 2;
                      while (ds.size() < size) {
                          dd += pick(1, 3);
                          ds.push_back(dd);
                      }
                      auto block = [](long long dj) {
                          return PLFunction::from_segments(
                              R(0), {R(2, dj), R(1), R(2) - R(2, dj)}, {0, dj, -dj, 0});
                      };
                      std::vector<PLFunction> members(size);
                      for (size_t i = 0; i < size; ++i) {
                          members[i] = block(ds[i]);
                          for (size_t j = 0; j < i; ++j)
                              members[i] = members[i] + block(ds[j]).scaled(pick(-2, 2));
                      }
                      std::vector<std::vector<Rational>> m(size,
                                                           std::vector<Rational>(size, R(0)));
                      for (size_t i = 0; i < size; ++i)
                          for (size_t j = 0; j < size; ++j)
                              for (const auto& s : members[i].singularities())
                                  if (s.t == R(2, ds[j]))
                                      m[i][j] = lambda_value(s.t, s.delta());
                      size_t rank = 0;
                      for (size_t col = 0; col < size; ++col) {
                          size_t piv = rank;
                          while (piv < size && m[piv][col].is_zero()) ++piv;
                          if (piv == size) continue;
                          std::swap(m[piv], m[rank]);
                          for (size_t r = 0; r < size; ++r) {
                              if (r == rank || m[r][col].is_zero()) continue;
                              Rational factor = m[r][col] / m[rank][col];
                              for (size_t c2 = 0; c2 < size; ++c2)
                                  m[r][c2] -= factor * m[rank][c2];
                          }
                          ++rank;
                      }
                      if (rank != size) {
                          d = "rank " + std::to_string(rank) + " of " + std::to_string(size);
                          return false;
                      }
                  }
                  // torus signatures against the Seifert oracle, pq <= 60
                  for (long long p = 2; p <= 8; ++p) {
                      for (long long q = p + 1; p * q <= 60; ++q) {
                          if (std::gcd(p, q) != 1) continue;
                          if (sigma_torus(p, q) != oracle::torus_signature(p, q)) {
                              d = "sigma mismatch at (" + std::to_string(p) + "," +
                                  std::to_string(q) + ")";
                              return false;
                          }
                      }
                  }
                  return true;
              });

    // the CLI examples from the interface contract
    criterion(10, "command-line wrappers and exit codes", [](std::string& d) {
        std::string facts = "--facts " + g_root + "/data/base_facts.json ";
        if (!run_cli(facts + "derive \"wh+(RHT)\"", 0, "-1+|1-t|", d)) return false;
        if (!run_cli(facts + "derive \"cable(wh+(RHT),2,1)\"", 0, "[1/2, 2/3]", d)) return false;
        if (!run_cli(facts + "derive \"T(2,3) # -T(2,3)\"", 0, "upsilon: 0", d)) return false;
        if (!run_cli("enumerate --gc 2", 0, "13 admissible profiles", d)) return false;
        if (!run_cli(facts + "indep " + g_root + "/data/families/wh_power_cables.json", 0,
                     "independent", d))
            return false;
        if (!run_cli(facts + "derive \"cable(K0, 4, 2)\"", 1, "not coprime", d)) return false;
        // inconclusive exits with 2
        if (!run_cli(facts + "indep --power \"T(2,3)\" --base 2 --depth 3", 2, "inconclusive",
                     d))
            return false;
        // deterministic output: identical runs byte-identical
        std::string a_out, b_out;
        {
            FILE* p1 = popen((g_cli + " " + facts + "derive \"mazur(RHT)\" --json").c_str(), "r");
            char buf[4096];
            while (size_t got = fread(buf, 1, sizeof buf, p1)) a_out.append(buf, got);
            pclose(p1);
            FILE* p2 = popen((g_cli + " " + facts + "derive \"mazur(RHT)\" --json").c_str(), "r");
            while (size_t got = fread(buf, 1, sizeof buf, p2)) b_out.append(buf, got);
            pclose(p2);
        }
        if (a_out.empty() || a_out != b_out) {
            d = "json output not deterministic";
            return false;
        }
        return true;
    });

    std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
