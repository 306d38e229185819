#pragma once

#include <string>

#include "json.hpp"
#include "ups/facts.hpp"
#include "ups/independence.hpp"
#include "ups/knot_facts.hpp"

namespace ups {

using json = nlohmann::json;

// PL functions serialize as the anchor plus [t, slope-after-t] pairs with
// every rational rendered "num/den"; round-trips are exact.
json pl_to_json(const PLFunction& f);
PLFunction pl_from_json(const json& j);

json interval_to_json(const Interval& w);
Interval interval_from_json(const json& j);

json range_to_json(const IntRange& r);
IntRange range_from_json(const json& j);

json record_to_json(const GeneratorFacts& rec);
GeneratorFacts record_from_json(const json& j);

// facts document: {"generators": [record, ...]}
FactTable load_facts(const json& doc);
FactTable load_facts_file(const std::string& path);
json save_facts(const FactTable& table);

json knot_facts_to_json(const KnotFacts& f);
json report_to_json(const IndependenceReport& rep);

json certificate_to_json(const SingularityCertificate& c);
SingularityCertificate certificate_from_json(const json& j);

}  // namespace ups
