#pragma once

#include <map>
#include <set>
#include <optional>
#include <string>

#include "ups/knot_facts.hpp"

namespace ups {

// A declared invariant record, as read from a facts document. Names may be
// generator names or canonical expression strings (for facts the
// literature supplies about composite knots).
struct GeneratorFacts {
    std::string name;
    std::optional<long long> tau;
    std::optional<int> epsilon;
    std::optional<long long> sigma;  // at omega = -1; even
    IntRange g3, g4, gc, gamma4;
    bool top_slice = false;
    std::optional<PLFunction> upsilon;
    FirstSing first_sing;  // monostate = undeclared
    std::optional<long long> alpha;
};

// Validates one record against the structural invariants; throws
// IngestError naming the violated axiom. Returns the KnotFacts form.
KnotFacts validate_record(const GeneratorFacts& rec);

class FactTable {
public:
    // starts with the built-in unknot "U"
    FactTable();

    // throws IngestError if the record is invalid or the name is taken;
    // built-in defaults may be redeclared
    void add(const GeneratorFacts& rec);

    const GeneratorFacts* lookup(const std::string& name) const {
        auto it = entries_.find(name);
        return it == entries_.end() ? nullptr : &it->second;
    }
    const std::map<std::string, GeneratorFacts>& entries() const { return entries_; }

private:
    std::map<std::string, GeneratorFacts> entries_;
    std::set<std::string> builtin_;
};

}  // namespace ups
