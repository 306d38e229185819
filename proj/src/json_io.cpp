#include "ups/json_io.hpp"

#include <fstream>

namespace ups {

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw IngestError("rational", "expected \"num/den\" string, got " + j.dump());
}

json first_sing_to_json(const FirstSing& fs) {
    if (std::holds_alternative<NoSingularity>(fs)) return json("none");
    if (const Rational* t = std::get_if<Rational>(&fs)) return json(t->str());
    if (const Interval* w = std::get_if<Interval>(&fs)) return interval_to_json(*w);
    return json();  // unknown -> null
}

FirstSing first_sing_from_json(const json& j) {
    if (j.is_null()) return std::monostate{};
    if (j.is_string() && j.get<std::string>() == "none") return NoSingularity{};
    if (j.is_object()) return interval_from_json(j);
    return rational_from_json(j);
}

}  // namespace

json pl_to_json(const PLFunction& f) {
    json pairs = json::array();
    pairs.push_back({Rational(0).str(), f.slopes()[0]});
    for (size_t i = 0; i < f.breakpoints().size(); ++i)
        pairs.push_back({f.breakpoints()[i].str(), f.slopes()[i + 1]});
    return json{{"anchor", f.anchor().str()}, {"pairs", pairs}};
}

PLFunction pl_from_json(const json& j) {
    if (!j.is_object() || !j.contains("anchor") || !j.contains("pairs"))
        throw IngestError("pl-function", "expected {anchor, pairs}, got " + j.dump());
    Rational anchor = rational_from_json(j.at("anchor"));
    std::vector<Rational> breaks;
    std::vector<long long> slopes;
    const json& pairs = j.at("pairs");
    if (!pairs.is_array() || pairs.empty())
        throw IngestError("pl-function", "pairs must be a non-empty array");
    for (size_t i = 0; i < pairs.size(); ++i) {
        const json& p = pairs[i];
        if (!p.is_array() || p.size() != 2)
            throw IngestError("pl-function", "each pair is [t, slope]");
        Rational t = rational_from_json(p[0]);
        if (i == 0) {
            if (!t.is_zero()) throw IngestError("pl-function", "first pair must start at 0");
        } else {
            breaks.push_back(t);
        }
        slopes.push_back(p[1].get<long long>());
    }
    return PLFunction::from_segments(anchor, std::move(breaks), std::move(slopes));
}

json interval_to_json(const Interval& w) {
    return json{{"lo", w.lo.str()},
                {"hi", w.hi.str()},
                {"lo_closed", w.lo_closed},
                {"hi_closed", w.hi_closed}};
}

Interval interval_from_json(const json& j) {
    return Interval(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")),
                    j.value("lo_closed", true), j.value("hi_closed", true));
}

json range_to_json(const IntRange& r) {
    json j = json::object();
    if (r.lo) j["min"] = *r.lo;
    if (r.hi) j["max"] = *r.hi;
    return j;
}

IntRange range_from_json(const json& j) {
    IntRange r;
    if (j.is_number_integer()) {
        r = IntRange::at(j.get<long long>());
        return r;
    }
    if (!j.is_object()) throw IngestError("range", "expected integer or {min,max}");
    if (j.contains("min")) r.lo = j.at("min").get<long long>();
    if (j.contains("max")) r.hi = j.at("max").get<long long>();
    return r;
}

json record_to_json(const GeneratorFacts& rec) {
    json j = json::object();
    j["name"] = rec.name;
    if (rec.tau) j["tau"] = *rec.tau;
    if (rec.epsilon) j["epsilon"] = *rec.epsilon;
    if (rec.sigma) j["sigma"] = *rec.sigma;
    if (rec.g3.known()) j["g3"] = range_to_json(rec.g3);
    if (rec.g4.known()) j["g4"] = range_to_json(rec.g4);
    if (rec.gc.known()) j["gc"] = range_to_json(rec.gc);
    if (rec.gamma4.known()) j["gamma4"] = range_to_json(rec.gamma4);
    if (rec.top_slice) j["top_slice"] = true;
    if (rec.upsilon) j["upsilon"] = pl_to_json(*rec.upsilon);
    if (!std::holds_alternative<std::monostate>(rec.first_sing))
        j["first_singularity"] = first_sing_to_json(rec.first_sing);
    if (rec.alpha) j["alpha"] = *rec.alpha;
    return j;
}

GeneratorFacts record_from_json(const json& j) {
    if (!j.is_object()) throw IngestError("record", "generator record must be an object");
    GeneratorFacts rec;
    rec.name = j.value("name", "");
    if (j.contains("tau")) rec.tau = j.at("tau").get<long long>();
    if (j.contains("epsilon")) rec.epsilon = j.at("epsilon").get<int>();
    if (j.contains("sigma")) rec.sigma = j.at("sigma").get<long long>();
    if (j.contains("g3")) rec.g3 = range_from_json(j.at("g3"));
    if (j.contains("g4")) rec.g4 = range_from_json(j.at("g4"));
    if (j.contains("gc")) rec.gc = range_from_json(j.at("gc"));
    if (j.contains("gamma4")) rec.gamma4 = range_from_json(j.at("gamma4"));
    rec.top_slice = j.value("top_slice", false);
    if (j.contains("upsilon")) rec.upsilon = pl_from_json(j.at("upsilon"));
    if (j.contains("first_singularity"))
        rec.first_sing = first_sing_from_json(j.at("first_singularity"));
    if (j.contains("alpha")) rec.alpha = j.at("alpha").get<long long>();
    return rec;
}

FactTable load_facts(const json& doc) {
    if (!doc.is_object() || !doc.contains("generators"))
        throw IngestError("document", "facts document needs a top-level \"generators\" list");
    FactTable table;
    for (const json& j : doc.at("generators")) table.add(record_from_json(j));
    return table;
}

FactTable load_facts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IngestError("document", "cannot open facts file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw IngestError("document", "malformed JSON in '" + path + "': " + e.what());
    }
    return load_facts(doc);
}

json save_facts(const FactTable& table) {
    json gens = json::array();
    for (const auto& [name, rec] : table.entries()) gens.push_back(record_to_json(rec));
    return json{{"generators", gens}};
}

json knot_facts_to_json(const KnotFacts& f) {
    json j = json::object();
    if (f.tau) j["tau"] = *f.tau;
    if (!f.tau_cases.empty()) j["tau_cases"] = f.tau_cases;
    if (f.epsilon) j["epsilon"] = *f.epsilon;
    if (f.sigma) j["sigma"] = *f.sigma;
    if (const PLFunction* u = f.exact_upsilon()) {
        j["upsilon"] = {{"kind", "exact"}, {"fn", pl_to_json(*u)}, {"display", u->str()}};
    } else if (const Envelope* e = f.upsilon_envelope()) {
        j["upsilon"] = {{"kind", "envelope"},
                        {"lower", pl_to_json(e->lower)},
                        {"upper", pl_to_json(e->upper)},
                        {"valid_on", interval_to_json(e->valid_on)}};
    }
    if (f.upsilon1.known()) j["upsilon1"] = range_to_json(f.upsilon1);
    if (f.g3.known()) j["g3"] = range_to_json(f.g3);
    if (f.g4.known()) j["g4"] = range_to_json(f.g4);
    if (f.gc.known()) j["gc"] = range_to_json(f.gc);
    if (f.gamma4.known()) j["gamma4"] = range_to_json(f.gamma4);
    if (!std::holds_alternative<std::monostate>(f.first_sing))
        j["first_singularity"] = first_sing_to_json(f.first_sing);
    if (f.alpha) j["alpha"] = *f.alpha;
    if (f.top_slice) j["top_slice"] = true;
    json trace = json::array();
    for (const auto& t : f.trace) trace.push_back({{"rule", t.rule}, {"detail", t.detail}});
    j["trace"] = trace;
    return j;
}

json certificate_to_json(const SingularityCertificate& c) {
    json j = json::object();
    j["knot"] = c.knot;
    if (const Rational* t = std::get_if<Rational>(&c.location))
        j["t"] = t->str();
    else
        j["t"] = interval_to_json(std::get<Interval>(c.location));
    if (c.delta) j["delta"] = *c.delta;
    if (c.lambda) j["lambda"] = c.lambda->str();
    if (c.lambda_certified) j["lambda_certified"] = true;
    return j;
}

SingularityCertificate certificate_from_json(const json& j) {
    SingularityCertificate c;
    c.knot = j.value("knot", "");
    if (c.knot.empty()) throw IngestError("certificate", "certificate needs a knot id");
    if (!j.contains("t")) throw IngestError("certificate", "certificate needs a location t");
    if (j.at("t").is_object())
        c.location = interval_from_json(j.at("t"));
    else
        c.location = rational_from_json(j.at("t"));
    if (j.contains("delta")) c.delta = j.at("delta").get<long long>();
    if (j.contains("lambda")) c.lambda = rational_from_json(j.at("lambda"));
    c.lambda_certified = j.value("lambda_certified", false);
    return c;
}

json report_to_json(const IndependenceReport& rep) {
    json certs = json::array();
    for (const auto& c : rep.certificates) certs.push_back(certificate_to_json(c));
    json trace = json::array();
    for (const auto& t : rep.trace) trace.push_back({{"rule", t.rule}, {"detail", t.detail}});
    return json{{"members", rep.members},
                {"certificates", certs},
                {"verdict", verdict_name(rep.verdict)},
                {"trace", trace}};
}

}  // namespace ups
