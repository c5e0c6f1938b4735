#pragma once

#include <gmpxx.h>

#include <string>

#include "jumploci/errors.hpp"

namespace jumploci {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rational_of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "num" or "num/den" form, matching the serialization contract.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

// gcd on rationals: gcd(a/b, c/d) = gcd(ad, cb)/(bd), non-negative.
// This is what makes polynomial content integer-exact on integer inputs.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (is_zero(a)) return abs(b);
    if (is_zero(b)) return abs(a);
    Integer n = gcd(Integer(a.get_num() * b.get_den()), Integer(b.get_num() * a.get_den()));
    Rational r(n, a.get_den() * b.get_den());
    r.canonicalize();
    return abs(r);
}

}  // namespace jumploci
