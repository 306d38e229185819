#include "ups/expr.hpp"

#include <cctype>
#include <numeric>

#include "ups/common.hpp"

namespace ups {

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c))
            throw ParseError(pos, std::string(1, c),
                             "expected '" + std::string(1, c) + "' at offset " +
                                 std::to_string(pos));
    }
    void expect_keyword(const std::string& kw) {
        skip_ws();
        if (text.compare(pos, kw.size(), kw) != 0)
            throw ParseError(pos, kw, "expected '" + kw + "' at offset " + std::to_string(pos));
        pos += kw.size();
    }

    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError(start, "integer", "expected integer at offset " +
                                                                  std::to_string(start));
        return std::stoll(text.substr(start, pos - start));
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                    text[pos] == '_'))
            throw ParseError(start, "name", "expected name at offset " + std::to_string(start));
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    // '#' is left-associative connected sum
    ExprPtr expr() {
        ExprPtr lhs = term();
        while (try_consume('#')) {
            ExprPtr rhs = term();
            lhs = make_expr<Sum>(lhs, rhs);
        }
        return lhs;
    }

    ExprPtr term() {
        skip_ws();
        if (try_consume('-')) return make_expr<Mirror>(term());
        if (try_consume('(')) {
            ExprPtr c = expr();
            expect(')');
            return c;
        }
        size_t start = pos;
        std::string name = ident();
        skip_ws();

        if (name == "rev" && peek() == '(') {
            expect('(');
            ExprPtr c = expr();
            expect(')');
            return make_expr<Reverse>(c);
        }
        if (name == "cable" && peek() == '(') {
            expect('(');
            ExprPtr c = expr();
            expect(',');
            long long p = integer();
            expect(',');
            long long q = integer();
            expect(')');
            check_cable_params(p, q, start);
            return make_expr<Cable>(c, p, q);
        }
        if (name == "wh" && (peek() == '+' || peek() == '-')) {
            int sign = try_consume('+') ? 1 : (expect('-'), -1);
            expect('(');
            ExprPtr c = expr();
            long long k = 0;
            if (try_consume(',')) {
                expect_keyword("k");
                expect('=');
                k = integer();
            }
            expect(')');
            return make_expr<WhDouble>(c, sign, k);
        }
        if (name == "gwh" && peek() == '(') {
            expect('(');
            ExprPtr c = expr();
            expect(',');
            expect_keyword("s");
            expect('=');
            long long s = integer();
            expect(',');
            expect_keyword("k");
            expect('=');
            long long k = integer();
            expect(',');
            expect_keyword("tauJ");
            expect('=');
            long long tj = integer();
            expect(')');
            return make_expr<GenWhDouble>(c, s, k, tj);
        }
        if (name == "sat" && peek() == '(') {
            expect('(');
            ExprPtr c = expr();
            expect(',');
            expect_keyword("r");
            expect('=');
            long long r = integer();
            expect(',');
            expect_keyword("dtau");
            expect('=');
            long long dtau = integer();
            expect(')');
            if (r < 1)
                throw ArgumentError("sat requires r >= 1, got " + std::to_string(r));
            return make_expr<PatternSat>(c, r, dtau, false);
        }
        if (name == "mazur" && peek() == '(') {
            expect('(');
            ExprPtr c = expr();
            expect(')');
            return make_expr<PatternSat>(c, 1, 1, true);
        }
        if (name == "T" && peek() == '(') {
            expect('(');
            long long p = integer();
            expect(',');
            long long q = integer();
            expect(')');
            check_cable_params(p, q, start);
            return make_expr<TorusKnot>(p, q);
        }
        return make_expr<Generator>(name);
    }

    static void check_cable_params(long long p, long long q, size_t at) {
        if (p < 1)
            throw ArgumentError("p must be >= 1, got " + std::to_string(p) + " (offset " +
                                std::to_string(at) + ")");
        long long g = std::gcd(p, q < 0 ? -q : q);
        if (g != 1)
            throw ArgumentError("parameters (" + std::to_string(p) + "," + std::to_string(q) +
                                ") are not coprime (gcd " + std::to_string(g) + ")");
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expr();
    if (!p.at_end())
        throw ParseError(p.pos, "end of input",
                         "trailing input at offset " + std::to_string(p.pos));
    return e;
}

std::string print_expr(const ExprPtr& e) {
    struct V {
        std::string operator()(const Generator& g) const { return g.name; }
        std::string operator()(const TorusKnot& t) const {
            return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
        }
        std::string operator()(const Mirror& m) const {
            if (std::holds_alternative<Sum>(m.child->node))
                return "-(" + print_expr(m.child) + ")";
            return "-" + print_expr(m.child);
        }
        std::string operator()(const Reverse& r) const { return "rev(" + print_expr(r.child) + ")"; }
        std::string operator()(const Sum& s) const {
            return print_expr(s.lhs) + " # " + print_expr(s.rhs);
        }
        std::string operator()(const Cable& c) const {
            return "cable(" + print_expr(c.child) + "," + std::to_string(c.p) + "," +
                   std::to_string(c.q) + ")";
        }
        std::string operator()(const WhDouble& w) const {
            std::string s = std::string("wh") + (w.sign > 0 ? "+" : "-") + "(" +
                            print_expr(w.child);
            if (w.twists != 0) s += ", k=" + std::to_string(w.twists);
            return s + ")";
        }
        std::string operator()(const GenWhDouble& g) const {
            return "gwh(" + print_expr(g.child) + ", s=" + std::to_string(g.s) +
                   ", k=" + std::to_string(g.twists) + ", tauJ=" + std::to_string(g.tau_j) + ")";
        }
        std::string operator()(const PatternSat& p) const {
            if (p.mazur_sugar) return "mazur(" + print_expr(p.child) + ")";
            return "sat(" + print_expr(p.child) + ", r=" + std::to_string(p.positive_crossings) +
                   ", dtau=" + std::to_string(p.tau_shift) + ")";
        }
    };
    return std::visit(V{}, e->node);
}

}  // namespace ups
