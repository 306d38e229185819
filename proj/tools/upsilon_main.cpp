#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ups/cables.hpp"
#include "ups/enumerate.hpp"
#include "ups/expr.hpp"
#include "ups/independence.hpp"
#include "ups/json_io.hpp"
#include "ups/pl_axioms.hpp"
#include "ups/rules.hpp"

using namespace ups;

namespace {

// exit codes: 0 positive verdict, 2 inconclusive / not validated, 1 error
constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

FactTable load_table(const std::string& facts_path) {
    if (!facts_path.empty()) return load_facts_file(facts_path);
    if (const char* env = std::getenv("UPSILON_FACTS")) return load_facts_file(env);
    return FactTable();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("document", "cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

std::string fs_display(const KnotFacts& f) {
    if (std::holds_alternative<NoSingularity>(f.first_sing)) return "none";
    if (auto t = f.first_sing_exact()) return t->str();
    if (auto w = f.first_sing_window()) return w->str();
    return "unknown";
}

void print_trace(const std::vector<TraceEntry>& trace) {
    for (const auto& t : trace) std::cout << "  [" << t.rule << "] " << t.detail << "\n";
}

void print_facts_text(const std::string& expr, const KnotFacts& f) {
    std::cout << "knot: " << expr << "\n";
    if (f.tau) std::cout << "tau: " << *f.tau << "\n";
    if (!f.tau_cases.empty()) {
        std::cout << "tau: one of {";
        for (size_t i = 0; i < f.tau_cases.size(); ++i)
            std::cout << (i ? ", " : "") << f.tau_cases[i];
        std::cout << "}\n";
    }
    if (f.epsilon) std::cout << "epsilon: " << *f.epsilon << "\n";
    if (f.sigma) std::cout << "sigma: " << *f.sigma << "\n";
    if (const PLFunction* u = f.exact_upsilon()) std::cout << "upsilon: " << u->str() << "\n";
    if (const Envelope* e = f.upsilon_envelope())
        std::cout << "upsilon: envelope on " << e->valid_on.str() << ", lower "
                  << e->lower.str() << ", upper " << e->upper.str() << "\n";
    if (f.upsilon1.known()) std::cout << "upsilon(1): " << f.upsilon1.str() << "\n";
    for (const auto& [name, r] :
         {std::pair{"g3", &f.g3}, {"g4", &f.g4}, {"gc", &f.gc}, {"gamma4", &f.gamma4}})
        if (r->known()) std::cout << name << ": " << r->str() << "\n";
    std::cout << "first singularity: " << fs_display(f) << "\n";
    if (f.alpha) std::cout << "alpha: " << *f.alpha << "\n";
    if (f.top_slice) std::cout << "topologically slice: yes\n";
    std::cout << "trace:\n";
    print_trace(f.trace);
}

int cmd_derive(const std::string& expr_text, const std::string& facts_path, bool as_json) {
    FactTable table = load_table(facts_path);
    ExprPtr e = parse_expr(expr_text);
    KnotFacts f = derive(e, table);
    if (as_json) {
        json j = knot_facts_to_json(f);
        j["expression"] = print_expr(e);
        std::cout << j.dump(2) << "\n";
    } else {
        print_facts_text(print_expr(e), f);
    }
    return kOk;
}

int report_exit(const IndependenceReport& rep, bool as_json) {
    if (as_json) {
        std::cout << report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
        for (const auto& c : rep.certificates) {
            std::cout << "  " << c.knot << ": t in "
                      << (c.exact() ? std::get<Rational>(c.location).str() : c.window().str());
            if (c.delta) std::cout << ", delta " << *c.delta;
            if (c.lambda) std::cout << ", lambda " << c.lambda->str();
            std::cout << "\n";
        }
        print_trace(rep.trace);
    }
    return rep.verdict == Verdict::inconclusive ? kInconclusive : kOk;
}

IndependenceReport family_from_file(const std::string& path, const std::string& facts_path) {
    json doc = read_json_file(path);
    if (!doc.contains("members"))
        throw IngestError("document", "family document needs a \"members\" list");
    FactTable table = load_table(facts_path);

    std::map<std::string, SingularityCertificate> declared;
    if (doc.contains("certificates"))
        for (const json& cj : doc.at("certificates")) {
            SingularityCertificate c = certificate_from_json(cj);
            declared[c.knot] = c;
        }

    std::vector<SingularityCertificate> certs;
    std::vector<std::string> missing;
    for (const json& mj : doc.at("members")) {
        std::string text = mj.get<std::string>();
        ExprPtr e = parse_expr(text);
        std::string id = print_expr(e);
        auto it = declared.find(id);
        if (it == declared.end()) it = declared.find(text);
        if (it != declared.end()) {
            // a declared certificate must stay compatible with whatever
            // window the engine can derive for the same member; members
            // the engine cannot resolve are taken on the declaration alone
            try {
                KnotFacts f = derive(e, table);
                if (auto w = f.first_sing_window()) {
                    Interval dw = it->second.window();
                    if (strictly_before(dw, *w) || strictly_before(*w, dw))
                        throw IngestError("certificate",
                                          "declared certificate for '" + id + "' at " + dw.str() +
                                              " contradicts the derived window " + w->str());
                }
            } catch (const DeriveError&) {
            }
            certs.push_back(it->second);
            continue;
        }
        KnotFacts f = derive(e, table);
        if (auto c = certificate_from_facts(id, f))
            certs.push_back(*c);
        else
            missing.push_back(id);
    }
    IndependenceReport rep = check_independence(std::move(certs));
    for (const auto& id : missing) {
        rep.members.push_back(id);
        rep.verdict = Verdict::inconclusive;
        rep.trace.push_back({"family", "no singularity certificate derivable for '" + id + "'"});
    }
    return rep;
}

int cmd_indep(const std::string& family_path, const std::string& power_expr,
              const std::string& iterated_expr, long long base, long long depth,
              const std::vector<long long>& forced_p, const std::string& facts_path,
              bool as_json) {
    if (!family_path.empty()) return report_exit(family_from_file(family_path, facts_path), as_json);
    FactTable table = load_table(facts_path);
    if (!power_expr.empty()) {
        ExprPtr e = parse_expr(power_expr);
        KnotFacts f = derive(e, table);
        return report_exit(family_power_cables(f, print_expr(e), base, depth), as_json);
    }
    if (!iterated_expr.empty()) {
        ExprPtr e = parse_expr(iterated_expr);
        KnotFacts f = derive(e, table);
        IteratedCablesResult res = family_iterated_cables(f, print_expr(e), depth, forced_p);
        if (!as_json && !res.ps.empty()) {
            std::cout << "chosen p:";
            for (long long p : res.ps) std::cout << " " << p;
            std::cout << "\n";
        }
        return report_exit(res.report, as_json);
    }
    std::cerr << "indep needs a family file, --power, or --iterated\n";
    return kError;
}

int cmd_certify_summand(const std::string& family_path, const std::string& facts_path,
                        bool as_json) {
    json doc = read_json_file(family_path);
    if (!doc.contains("members"))
        throw IngestError("document", "family document needs a \"members\" list");
    FactTable table = load_table(facts_path);

    // members must be a common companion and its (p,1) cables
    std::optional<std::string> base_id;
    std::vector<std::pair<std::string, long long>> members;  // (id, p)
    for (const json& mj : doc.at("members")) {
        ExprPtr e = parse_expr(mj.get<std::string>());
        std::string id = print_expr(e);
        long long p = 1;
        std::string child_id = id;
        if (const Cable* c = std::get_if<Cable>(&e->node)) {
            if (c->q == 1) {
                p = c->p;
                child_id = print_expr(c->child);
            }
        }
        if (!base_id)
            base_id = child_id;
        else if (*base_id != child_id)
            throw ArgumentError("summand members must share one companion: '" + *base_id +
                                "' vs '" + child_id + "'");
        members.emplace_back(id, p);
    }
    if (!base_id) throw ArgumentError("empty family");
    KnotFacts base = derive(parse_expr(*base_id), table);
    std::vector<SingularityCertificate> certs;
    for (const auto& [id, p] : members)
        certs.push_back(certify_summand_window_cable(base, p, id));
    return report_exit(check_independence(std::move(certs)), as_json);
}

int cmd_enumerate(long long gc, std::optional<long long> tau, bool as_json) {
    auto profiles = enumerate_profiles(gc, tau);
    if (as_json) {
        json arr = json::array();
        for (const auto& f : profiles) {
            json j = pl_to_json(f);
            j["display"] = f.str();
            j["tau"] = -f.slope_at_zero();
            arr.push_back(j);
        }
        std::cout << json{{"gc", gc}, {"count", profiles.size()}, {"profiles", arr}}.dump(2)
                  << "\n";
    } else {
        std::cout << profiles.size() << " admissible profiles for gc = " << gc << "\n";
        for (const auto& f : profiles)
            std::cout << "  tau=" << -f.slope_at_zero() << ": " << f.str() << "\n";
    }
    return kOk;
}

int cmd_validate(const std::string& path, bool as_json) {
    json doc = read_json_file(path);
    PLFunction f = pl_from_json(doc.contains("upsilon") ? doc.at("upsilon") : doc);
    CandidateClaims claims;
    if (doc.contains("tau")) claims.tau = doc.at("tau").get<long long>();
    if (doc.contains("g4")) claims.g4 = doc.at("g4").get<long long>();
    if (doc.contains("gc")) claims.gc = doc.at("gc").get<long long>();
    ValidationReport rep = validate_candidate(f, claims);
    if (as_json) {
        json checks = json::array();
        for (const auto& c : rep.checks)
            checks.push_back({{"axiom", axiom_name(c.axiom)},
                              {"applicable", c.applicable},
                              {"passed", c.passed},
                              {"detail", c.detail}});
        std::cout << json{{"passed", rep.passed()}, {"checks", checks}}.dump(2) << "\n";
    } else {
        for (const auto& c : rep.checks)
            std::cout << (c.passed ? "pass" : "FAIL") << "  " << axiom_name(c.axiom)
                      << (c.applicable ? "" : " (not applicable)")
                      << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        std::cout << (rep.passed() ? "validated" : "not a valid profile") << "\n";
    }
    return rep.passed() ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for knot concordance invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string facts_path;
    bool as_json = false;
    app.add_option("--facts", facts_path, "facts file (default: $UPSILON_FACTS)");
    app.add_flag("--json", as_json, "machine-readable output");

    auto* derive_cmd = app.add_subcommand("derive", "derive invariants for an expression");
    std::string expr_text;
    derive_cmd->add_option("expr", expr_text, "knot expression")->required();

    auto* indep_cmd = app.add_subcommand("indep", "check linear independence of a family");
    std::string family_path, power_expr, iterated_expr;
    long long base = 2, depth = 5;
    std::vector<long long> forced_p;
    indep_cmd->add_option("family", family_path, "family document (members + certificates)");
    indep_cmd->add_option("--power", power_expr, "expression for a {K_{base^i,1}} family");
    indep_cmd->add_option("--iterated", iterated_expr, "expression for an iterated-cable family");
    indep_cmd->add_option("--base", base, "base for --power (default 2)");
    indep_cmd->add_option("--depth", depth, "family size / iteration depth (default 5)");
    indep_cmd->add_option("--force-p", forced_p, "override the greedy cable parameters");

    auto* summand_cmd =
        app.add_subcommand("certify-summand", "certify a family as a free summand basis");
    std::string summand_path;
    summand_cmd->add_option("family", summand_path, "family document")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "list admissible profiles for a genus");
    long long gc = 1;
    long long tau_opt = 0;
    bool tau_set = false;
    enum_cmd->add_option("--gc", gc, "concordance genus")->required();
    auto* tau_flagged = enum_cmd->add_option("--tau", tau_opt, "restrict to one tau");

    auto* validate_cmd = app.add_subcommand("validate", "check a profile against the axioms");
    std::string pl_path;
    validate_cmd->add_option("file", pl_path, "profile document")->required();

    try {
        app.parse(argc, argv);
        tau_set = tau_flagged->count() > 0;
        if (derive_cmd->parsed()) return cmd_derive(expr_text, facts_path, as_json);
        if (indep_cmd->parsed())
            return cmd_indep(family_path, power_expr, iterated_expr, base, depth, forced_p,
                             facts_path, as_json);
        if (summand_cmd->parsed()) return cmd_certify_summand(summand_path, facts_path, as_json);
        if (enum_cmd->parsed())
            return cmd_enumerate(gc, tau_set ? std::optional<long long>(tau_opt) : std::nullopt,
                                 as_json);
        if (validate_cmd->parsed()) return cmd_validate(pl_path, as_json);
        return kError;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "parse error at offset " << e.offset << " (expected " << e.expected
                  << "): " << e.what() << "\n";
        return kError;
    } catch (const IngestError& e) {
        std::cerr << "ingestion error [" << e.axiom << "]: " << e.what() << "\n";
        return kError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
