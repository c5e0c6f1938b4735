#include "jumploci/laurent.hpp"

#include <sstream>

namespace jumploci {

std::string default_var_name(char letter, int i) { return std::string(1, letter) + std::to_string(i + 1); }

std::vector<std::string> default_var_names(char letter, int n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(default_var_name(letter, i));
    return v;
}

std::string poly_to_string(const LaurentPoly& f, const std::vector<std::string>& names) {
    if (f.is_zero_poly()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending order: leading term first.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit_coeff = (a == 1);
        if (!unit_coeff || m.is_one()) out << a.get_str();
        bool printed = !unit_coeff || m.is_one();
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed) out << "*";
            out << names[i];
            if (m.e[i] != 1) out << "^" << m.e[i];
            printed = true;
        }
    }
    return out.str();
}

std::string poly_to_string(const LaurentPoly& f, char letter) {
    return poly_to_string(f, default_var_names(letter, f.nvars()));
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int nvars;
    char letter;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::int64_t integer() {
        skip();
        bool neg = eat('-');
        if (!neg) eat('+');
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer in polynomial at offset " + std::to_string(pos));
        std::int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    LaurentPoly atom() {
        skip();
        if (eat('(')) {
            LaurentPoly r = expr();
            if (!eat(')')) throw ParseError("missing ')' in polynomial");
            return r;
        }
        char c = peek();
        if (c == letter || (std::isalpha(static_cast<unsigned char>(c)) && pos + 1 < s.size())) {
            if (c != letter) throw ParseError(std::string("unexpected variable letter '") + c + "'");
            ++pos;
            std::int64_t idx = integer();
            if (idx < 1 || idx > nvars) throw ParseError("variable index out of range");
            return LaurentPoly::variable(nvars, static_cast<int>(idx - 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t num = integer();
            if (eat('/')) {
                std::int64_t den = integer();
                return LaurentPoly(nvars, rational_of(num, den));
            }
            return LaurentPoly(nvars, rational_of(num));
        }
        throw ParseError("unexpected character in polynomial at offset " + std::to_string(pos));
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        if (eat('^')) {
            skip();
            std::int64_t e;
            if (eat('(')) {
                e = integer();
                if (!eat(')')) throw ParseError("missing ')' after exponent");
            } else {
                e = integer();
            }
            if (e >= 0) return base.pow(e);
            // Negative exponents only on single monomials.
            if (base.support_size() != 1) throw ParseError("negative power of a non-monomial");
            auto& [m, c] = *base.terms().begin();
            if (!(c == Rational(1) || c == Rational(-1)))
                throw ParseError("negative power of a non-unit coefficient");
            Monomial mm(m);
            for (auto& x : mm.e) x *= e;
            Rational cc = (c == Rational(-1) && (e % 2 != 0)) ? Rational(-1) : Rational(1);
            return LaurentPoly(mm, cc);
        }
        return base;
    }

    LaurentPoly factor_chain() {
        LaurentPoly r = power();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                r = r * power();
            } else if (c == '(' || c == letter) {
                r = r * power();  // implicit product
            } else {
                return r;
            }
        }
    }

    LaurentPoly expr() {
        skip();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly r = factor_chain();
        if (neg) r = -r;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                r = r + factor_chain();
            } else if (c == '-') {
                ++pos;
                r = r - factor_chain();
            } else {
                return r;
            }
        }
    }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int nvars, char letter) {
    Parser p{text, 0, nvars, letter};
    LaurentPoly r = p.expr();
    p.skip();
    if (p.pos != text.size()) throw ParseError("trailing characters in polynomial: '" + text + "'");
    return r;
}

}  // namespace jumploci
