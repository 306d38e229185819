#pragma once

#include <memory>
#include <string>
#include <variant>

namespace ups {

struct KnotExpr;
using ExprPtr = std::shared_ptr<const KnotExpr>;

struct Generator {
    std::string name;
};
struct TorusKnot {
    long long p, q;  // gcd(p,|q|) = 1, p >= 1
};
struct Mirror {
    ExprPtr child;
};
struct Reverse {
    ExprPtr child;
};
struct Sum {
    ExprPtr lhs, rhs;
};
struct Cable {
    ExprPtr child;
    long long p, q;  // gcd(p,|q|) = 1, p >= 1; p = 1 is the identity
};
struct WhDouble {
    ExprPtr child;
    int sign;         // +1 or -1 clasp
    long long twists;  // k, 0 = untwisted
};
struct GenWhDouble {
    ExprPtr child;      // companion K
    long long s;        // twists on the J side
    long long twists;   // k, twists on the K side
    long long tau_j;    // the invariant of J; J enters only through it
};
// Pattern that becomes trivial after changing `positive_crossings` positive
// crossings, with declared tau shift. mazur(K) parses as r=1, dtau=1.
struct PatternSat {
    ExprPtr child;
    long long positive_crossings;  // r >= 1
    long long tau_shift;           // dtau
    bool mazur_sugar = false;
};

struct KnotExpr {
    std::variant<Generator, TorusKnot, Mirror, Reverse, Sum, Cable, WhDouble, GenWhDouble,
                 PatternSat>
        node;
};

template <typename T, typename... Args>
ExprPtr make_expr(Args&&... args) {
    return std::make_shared<const KnotExpr>(KnotExpr{T{std::forward<Args>(args)...}});
}

// Whitespace-insensitive recursive-descent parse. Throws ParseError with a
// byte offset and the expected-token set, or ArgumentError for semantic
// violations (non-coprime cable, p < 1).
ExprPtr parse_expr(const std::string& text);

// Canonical rendering; parse(print(e)) reproduces e.
std::string print_expr(const ExprPtr& e);

}  // namespace ups
