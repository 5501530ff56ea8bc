#include "poisson/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace poisson {

namespace {

struct Cursor {
    const std::string& src;
    size_t pos = 0;
    size_t line = 1, col = 1;

    bool at_end() const { return pos >= src.size(); }
    char peek() const { return at_end() ? '\0' : src[pos]; }
    void advance() {
        if (at_end()) return;
        if (src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

Integer parse_nat(Cursor& cur) {
    cur.skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.fail("expected a number");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        digits += cur.peek();
        cur.advance();
    }
    return Integer(digits, 10);  // base fixed: no octal surprise from leading zeros
}

std::string parse_ident(Cursor& cur) {
    cur.skip_ws();
    if (!ident_start(cur.peek())) cur.fail("expected an identifier");
    std::string name;
    while (ident_char(cur.peek())) {
        name += cur.peek();
        cur.advance();
    }
    return name;
}

Polynomial parse_poly(Cursor& cur, const Ring& ring);

Polynomial parse_base(Cursor& cur, const Ring& ring) {
    cur.skip_ws();
    char c = cur.peek();
    if (c == '(') {
        cur.advance();
        Polynomial inner = parse_poly(cur, ring);
        cur.skip_ws();
        if (cur.peek() != ')') cur.fail("expected ')'");
        cur.advance();
        return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
        bool negative = false;
        if (c == '-') {
            negative = true;
            cur.advance();
            cur.skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
                cur.fail("expected digits after '-'");
        }
        Integer num = parse_nat(cur);
        Integer den = 1;
        if (cur.peek() == '/') {
            cur.advance();
            den = parse_nat(cur);
            if (den == 0) cur.fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        if (negative) r = -r;
        return Polynomial::constant(ring, r);
    }
    if (ident_start(c)) {
        size_t l = cur.line, p = cur.col;
        std::string name = parse_ident(cur);
        auto idx = ring->index_of(name);
        if (!idx) throw ParseError("unknown variable '" + name + "'", l, p);
        return Polynomial::variable(ring, *idx);
    }
    cur.fail("expected a rational, a variable, or '('");
}

Polynomial parse_factor(Cursor& cur, const Ring& ring) {
    Polynomial base = parse_base(cur, ring);
    cur.skip_ws();
    if (cur.peek() == '^') {
        cur.advance();
        Integer e = parse_nat(cur);
        if (e > 64) cur.fail("exponent too large");
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
}

Polynomial parse_term(Cursor& cur, const Ring& ring) {
    Polynomial acc = parse_factor(cur, ring);
    while (true) {
        cur.skip_ws();
        if (cur.peek() != '*') break;
        cur.advance();
        acc = acc * parse_factor(cur, ring);
    }
    return acc;
}

Polynomial parse_poly(Cursor& cur, const Ring& ring) {
    cur.skip_ws();
    bool negate_first = false;
    if (cur.peek() == '+' || cur.peek() == '-') {
        negate_first = cur.peek() == '-';
        cur.advance();
    }
    Polynomial acc = parse_term(cur, ring);
    if (negate_first) acc = -acc;
    while (true) {
        cur.skip_ws();
        char op = cur.peek();
        if (op != '+' && op != '-') break;
        cur.advance();
        Polynomial t = parse_term(cur, ring);
        if (op == '+')
            acc += t;
        else
            acc -= t;
    }
    return acc;
}

}  // namespace

Polynomial parse_polynomial(const std::string& src, const Ring& ring) {
    Cursor cur{src};
    Polynomial p = parse_poly(cur, ring);
    cur.skip_ws();
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return p;
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Splits on top-level commas (not inside parentheses).
std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

Polynomial parse_line_poly(const std::string& text, const Ring& ring, size_t file_line) {
    try {
        return parse_polynomial(text, ring);
    } catch (const ParseError& e) {
        throw ParseError(std::string("in polynomial '") + strip(text) + "': " + e.what(),
                         file_line, 1);
    }
}

}  // namespace

AlgebraFile parse_algebra(const std::string& text, bool skip_jacobi) {
    Ring ring;
    std::vector<std::tuple<size_t, size_t, Polynomial>> brackets;
    std::vector<std::pair<size_t, size_t>> seen_pairs;
    std::vector<Polynomial> relations;
    std::optional<Polynomial> potential;
    std::vector<std::pair<std::string, std::vector<Polynomial>>> derivations;

    std::istringstream in(text);
    std::string raw;
    size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;

        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = strip(line.substr(key.size()));

        if (key == "ring") {
            if (ring) throw ParseError("duplicate ring declaration", lineno, 1);
            if (rest.size() < 4 || rest.substr(0, 2) != "Q[" || rest.back() != ']')
                throw ParseError("ring declaration must look like 'ring Q[x,y]'", lineno, 1);
            std::vector<std::string> names;
            for (const auto& part : split_commas(rest.substr(2, rest.size() - 3))) {
                std::string n = strip(part);
                if (n.empty() || !ident_start(n[0]))
                    throw ParseError("bad variable name '" + n + "'", lineno, 1);
                for (char c : n)
                    if (!ident_char(c))
                        throw ParseError("bad variable name '" + n + "'", lineno, 1);
                names.push_back(n);
            }
            ring = make_ring(names);
            continue;
        }
        if (!ring) throw ParseError("the ring declaration must come first", lineno, 1);

        if (key == "bracket") {
            // bracket {a,b} = <poly>
            size_t open = rest.find('{'), close = rest.find('}');
            size_t eq = rest.find('=', close == std::string::npos ? 0 : close);
            if (open == std::string::npos || close == std::string::npos || eq == std::string::npos)
                throw ParseError("bracket line must look like 'bracket {x,y} = <poly>'", lineno, 1);
            auto pair = split_commas(rest.substr(open + 1, close - open - 1));
            if (pair.size() != 2)
                throw ParseError("bracket needs exactly two generators", lineno, 1);
            auto ia = ring->index_of(strip(pair[0]));
            auto ib = ring->index_of(strip(pair[1]));
            if (!ia || !ib)
                throw ParseError("bracket pair references an undeclared variable", lineno, 1);
            if (*ia == *ib) throw ParseError("bracket pair must use two distinct variables", lineno, 1);
            size_t lo = std::min(*ia, *ib), hi = std::max(*ia, *ib);
            for (auto& [a, b] : seen_pairs)
                if (a == lo && b == hi)
                    throw ParseError("duplicate bracket pair", lineno, 1);
            seen_pairs.emplace_back(lo, hi);
            brackets.emplace_back(*ia, *ib,
                                  parse_line_poly(rest.substr(eq + 1), ring, lineno));
            continue;
        }
        if (key == "relation") {
            relations.push_back(parse_line_poly(rest, ring, lineno));
            continue;
        }
        if (key == "potential") {
            if (potential) throw ParseError("duplicate potential line", lineno, 1);
            potential = parse_line_poly(rest, ring, lineno);
            continue;
        }
        if (key == "derivation") {
            // derivation name: x -> <poly>, y -> <poly>
            size_t colon = rest.find(':');
            if (colon == std::string::npos)
                throw ParseError("derivation line needs 'name:'", lineno, 1);
            std::string name = strip(rest.substr(0, colon));
            if (name.empty()) throw ParseError("derivation needs a name", lineno, 1);
            for (const auto& [n, imgs] : derivations)
                if (n == name) throw ParseError("duplicate derivation '" + name + "'", lineno, 1);
            std::vector<Polynomial> images(ring->size(), Polynomial::zero(ring));
            std::vector<bool> set(ring->size(), false);
            for (const auto& part : split_commas(rest.substr(colon + 1))) {
                size_t arrow = part.find("->");
                if (arrow == std::string::npos)
                    throw ParseError("derivation image must look like 'x -> <poly>'", lineno, 1);
                auto idx = ring->index_of(strip(part.substr(0, arrow)));
                if (!idx)
                    throw ParseError("derivation image for an undeclared variable", lineno, 1);
                if (set[*idx])
                    throw ParseError("duplicate derivation image", lineno, 1);
                set[*idx] = true;
                images[*idx] = parse_line_poly(part.substr(arrow + 2), ring, lineno);
            }
            derivations.emplace_back(name, std::move(images));
            continue;
        }
        throw ParseError("unknown key '" + key + "'", lineno, 1);
    }

    if (!ring) throw Error("algebra file: missing ring declaration");
    if (potential && !brackets.empty())
        throw Error("algebra file: 'potential' and 'bracket' lines are mutually exclusive");

    PoissonStructure base = potential ? from_potential(*potential) : from_table(ring, brackets);
    if (!skip_jacobi && !base.jacobi_verified()) {
        auto fail = jacobi_check(base);
        throw JacobiError(*fail, "algebra file: Jacobi identity fails on (" +
                                     ring->name(fail->i) + ", " + ring->name(fail->j) + ", " +
                                     ring->name(fail->k) + ") with jacobiator " +
                                     fail->jacobiator.str());
    }

    AlgebraFile out{relations.empty() ? base : quotient(base, make_poisson_ideal(base, relations)),
                    {}};
    for (auto& [name, images] : derivations)
        out.derivations.emplace(name, Derivation::make(ring, std::move(images)));
    return out;
}

SkewMatrix parse_skew_matrix(const std::string& text) {
    std::istringstream in(text);
    long n = -1;
    if (!(in >> n) || n < 0) throw Error("matrix file: first token must be the dimension");
    std::vector<Rational> upper;
    std::string tok;
    while (in >> tok) {
        // -?digits(/digits)?
        size_t i = 0;
        if (i < tok.size() && tok[i] == '-') ++i;
        size_t digits = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i, ++digits;
        if (digits == 0) throw Error("matrix file: bad rational '" + tok + "'");
        if (i < tok.size()) {
            if (tok[i] != '/') throw Error("matrix file: bad rational '" + tok + "'");
            ++i;
            size_t den_digits = 0;
            while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
                ++i, ++den_digits;
            if (den_digits == 0 || i != tok.size())
                throw Error("matrix file: bad rational '" + tok + "'");
        }
        Rational r(tok, 10);
        if (r.get_den() == 0) throw Error("matrix file: zero denominator in '" + tok + "'");
        r.canonicalize();
        upper.push_back(r);
    }
    size_t expected = static_cast<size_t>(n) * (n - 1) / 2;
    if (n == 0) expected = 0;
    if (upper.size() != expected)
        throw Error("matrix file: expected " + std::to_string(expected) +
                    " upper-triangle entries, got " + std::to_string(upper.size()));
    return SkewMatrix::from_upper(static_cast<size_t>(n), std::move(upper));
}

}  // namespace poisson
