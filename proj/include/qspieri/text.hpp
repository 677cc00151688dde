#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "qspieri/composition.hpp"
#include "qspieri/ideal.hpp"
#include "qspieri/nc.hpp"
#include "qspieri/qsym.hpp"
#include "qspieri/symfunc.hpp"

namespace qspieri {

// Textual grammar for algebra elements:
//   element := "0" | term (" + " term | " - " term)*
//   term    := rational "*" name "(" parts? ")"
//   parts   := int ("," int)*
// with rational "p" or "p/q".  Rendering always writes coefficients in
// lowest terms and keys in the map order (length-lexicographic), so output
// is canonical; the parser accepts the same grammar back.

namespace detail {

template <class K>
std::string render_terms(const Lin<K>& coeffs, const std::string& name,
                         const std::vector<int>& (*key_parts)(const K&)) {
    if (coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : coeffs) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        out += a.str();
        out += "*" + name + "(";
        const std::vector<int>& parts = key_parts(key);
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        out += ")";
        first = false;
    }
    return out;
}

inline const std::vector<int>& composition_parts(const Composition& c) { return c.parts(); }
inline const std::vector<int>& partition_parts(const Partition& p) { return p.parts(); }

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("unexpected end of element text");
        return s[pos];
    }

    void expect(char c) {
        if (peek() != c)
            throw std::invalid_argument(std::string("expected '") + c + "' in element text");
        ++pos;
    }

    std::string number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected a number in element text");
        return s.substr(start, pos - start);
    }

    Rational rational() {
        std::string num = number();
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            std::string den = number();
            return parse_rational(num + "/" + den);
        }
        return parse_rational(num);
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected a basis name in element text");
        return s.substr(start, pos - start);
    }

    std::vector<int> parts() {
        expect('(');
        std::vector<int> out;
        if (peek() == ')') {
            ++pos;
            return out;
        }
        while (true) {
            out.push_back(std::stoi(number()));
            char c = peek();
            if (c == ',') {
                ++pos;
                continue;
            }
            expect(')');
            break;
        }
        return out;
    }
};

struct ParsedTerm {
    Rational coeff;
    std::string name;
    std::vector<int> parts;
};

inline std::vector<ParsedTerm> parse_terms(const std::string& text) {
    Parser p(text);
    std::vector<ParsedTerm> out;
    if (p.eof()) throw std::invalid_argument("empty element text");
    if (p.peek() == '0') {
        ++p.pos;
        if (!p.eof()) throw std::invalid_argument("junk after zero element");
        return out;
    }
    int sign = 1;
    while (true) {
        Rational c = p.rational();
        p.expect('*');
        ParsedTerm t;
        t.coeff = sign * c;
        t.name = p.ident();
        t.parts = p.parts();
        out.push_back(std::move(t));
        if (p.eof()) break;
        char op = p.peek();
        if (op != '+' && op != '-') throw std::invalid_argument("expected '+' or '-'");
        ++p.pos;
        sign = op == '-' ? -1 : 1;
    }
    return out;
}

}  // namespace detail

inline std::string render(const QSymElem& x) {
    return detail::render_terms(x.coeffs, x.basis == QBasis::M ? "M" : "F",
                                detail::composition_parts);
}

inline std::string render(const NCElem& x) {
    return detail::render_terms(x.coeffs, x.basis == NBasis::S ? "S" : "R",
                                detail::composition_parts);
}

inline std::string render(const SymExpansion& x) {
    return detail::render_terms(x.coeffs, x.basis == SymBasis::m ? "m" : "s",
                                detail::partition_parts);
}

inline std::string render_theta(const Lin<Composition>& coeffs) {
    return detail::render_terms(coeffs, "theta", detail::composition_parts);
}

// Parses "M"/"F" elements; "theta" terms are expanded into the M basis.
inline QSymElem parse_qsym(const std::string& text) {
    std::vector<detail::ParsedTerm> terms = detail::parse_terms(text);
    QSymElem out = qsym_zero();
    for (const auto& t : terms) {
        if (t.name == "M")
            out = qsym_add(out, monomial(Composition(t.parts), t.coeff));
        else if (t.name == "F")
            out = qsym_add(out, to_monomial(fundamental(Composition(t.parts), t.coeff)));
        else if (t.name == "theta")
            out = qsym_add(out, qsym_scale(theta(Composition(t.parts)), t.coeff));
        else
            throw std::invalid_argument("unknown quasi-symmetric basis: " + t.name);
    }
    return out;
}

inline NCElem parse_nc(const std::string& text) {
    std::vector<detail::ParsedTerm> terms = detail::parse_terms(text);
    NCElem out = nc_zero();
    for (const auto& t : terms) {
        if (t.name == "S")
            out = nc_add(out, complete(Composition(t.parts), t.coeff));
        else if (t.name == "R")
            out = nc_add(out, to_complete(ribbon(Composition(t.parts), t.coeff)));
        else
            throw std::invalid_argument("unknown noncommutative basis: " + t.name);
    }
    return out;
}

inline SymExpansion parse_sym(const std::string& text) {
    std::vector<detail::ParsedTerm> terms = detail::parse_terms(text);
    SymExpansion out;
    bool saw_s = false, saw_m = false;
    Lin<Partition> acc;
    for (const auto& t : terms) {
        if (t.name == "m")
            saw_m = true;
        else if (t.name == "s")
            saw_s = true;
        else
            throw std::invalid_argument("unknown symmetric basis: " + t.name);
        add_term(acc, Partition(t.parts), t.coeff);
    }
    if (saw_m && saw_s) throw std::invalid_argument("mixed symmetric bases");
    out.basis = saw_s ? SymBasis::s : SymBasis::m;
    out.coeffs = std::move(acc);
    return out;
}

}  // namespace qspieri
