#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/errors.hpp"
#include "jumploci/monomial.hpp"
#include "jumploci/rational.hpp"

namespace jumploci {

inline Rational field_inverse(const Rational& x) {
    if (is_zero(x)) throw ValidationError("division by zero during evaluation");
    return Rational(1) / x;
}

template <class F>
F field_pow_pos(F x, std::int64_t e) {
    F r(1);
    while (e) {
        if (e & 1) r = r * x;
        x = x * x;
        e >>= 1;
    }
    return r;
}

template <class F>
F field_pow(const F& x, std::int64_t e) {
    if (e < 0) return field_pow_pos(field_inverse(x), -e);
    return field_pow_pos(x, e);
}

// Sparse multivariate Laurent polynomial over a coefficient ring C.
// Invariant: no zero coefficients are stored; the term map is ordered by the
// global monomial order, so iteration (and hence serialization) is canonical.
// Immutable in spirit: every operation returns a fresh value.
template <class C>
class BasePoly {
  public:
    using Terms = std::map<Monomial, C, MonomialLess>;

    BasePoly() : nv_(0) {}
    explicit BasePoly(int nvars) : nv_(nvars) {}
    BasePoly(int nvars, const C& c) : nv_(nvars) {
        if (!is_zero(c)) terms_[Monomial(nvars)] = c;
    }
    BasePoly(const Monomial& m, const C& c) : nv_(m.nvars()) {
        if (!is_zero(c)) terms_[m] = c;
    }

    static BasePoly variable(int nvars, int i, std::int64_t exp = 1) {
        Monomial m(nvars);
        m.e[i] = exp;
        return BasePoly(m, C(1));
    }
    static BasePoly constant(int nvars, const C& c) { return BasePoly(nvars, c); }

    int nvars() const { return nv_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    C constant_term() const {
        auto it = terms_.find(Monomial(nv_));
        return it == terms_.end() ? C(0) : it->second;
    }

    // Leading term under the global order (largest monomial).
    const std::pair<const Monomial, C>& leading() const {
        if (terms_.empty()) throw InternalError("leading() of zero polynomial");
        return *terms_.rbegin();
    }

    bool is_laurent() const {
        for (auto& [m, c] : terms_)
            for (auto x : m.e)
                if (x < 0) return true;
        return false;
    }

    std::int64_t total_degree() const {  // of honest polynomials
        std::int64_t d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }
    std::int64_t low_degree() const {
        if (terms_.empty()) throw InternalError("low_degree() of zero polynomial");
        std::int64_t d = terms_.begin()->first.total_degree();
        for (auto& [m, c] : terms_) d = std::min(d, m.total_degree());
        return d;
    }
    std::int64_t degree_in(int i) const {
        if (terms_.empty()) return 0;
        std::int64_t d = terms_.begin()->first.e[i];
        for (auto& [m, c] : terms_) d = std::max(d, m.e[i]);
        return d;
    }
    std::int64_t low_degree_in(int i) const {
        if (terms_.empty()) return 0;
        std::int64_t d = terms_.begin()->first.e[i];
        for (auto& [m, c] : terms_) d = std::min(d, m.e[i]);
        return d;
    }
    bool depends_on(int i) const {
        for (auto& [m, c] : terms_)
            if (m.e[i] != 0) return true;
        return false;
    }

    void add_term(const Monomial& m, const C& c) {
        if (m.nvars() != nv_) throw InternalError("add_term: monomial/ambient mismatch");
        if (is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    BasePoly operator+(const BasePoly& o) const {
        check_compatible(o);
        BasePoly r(*this);
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    BasePoly operator-() const {
        BasePoly r(nv_);
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    BasePoly operator-(const BasePoly& o) const { return *this + (-o); }

    BasePoly operator*(const BasePoly& o) const {
        check_compatible(o);
        BasePoly r(nv_);
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    BasePoly operator*(const C& c) const {
        BasePoly r(nv_);
        if (is_zero(c)) return r;
        for (auto& [m, k] : terms_) r.terms_[m] = k * c;
        return r;
    }
    BasePoly mul_monomial(const Monomial& m, const C& c) const {
        BasePoly r(nv_);
        if (is_zero(c)) return r;
        for (auto& [mm, k] : terms_) r.terms_[mm * m] = k * c;
        return r;
    }

    BasePoly pow(std::int64_t k) const {
        if (k < 0) throw InternalError("pow with negative exponent");
        BasePoly r(nv_, C(1)), b(*this);
        while (k) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const BasePoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }

    // Exact evaluation; `embed` maps coefficients into F. F must be a field
    // when negative exponents occur (its field_inverse throws on 0).
    template <class F, class Embed>
    F evaluate(const std::vector<F>& pt, Embed embed) const {
        F acc(0);
        for (auto& [m, c] : terms_) {
            F t = embed(c);
            for (int i = 0; i < nv_; ++i)
                if (m.e[i] != 0) t = t * field_pow(pt[i], m.e[i]);
            acc = acc + t;
        }
        return acc;
    }

    Rational evaluate_rational(const std::vector<Rational>& pt) const
        requires std::is_same_v<C, Rational>
    {
        return evaluate(pt, [](const Rational& c) { return c; });
    }

    // Substitute a value for one variable (must be invertible if negative
    // exponents occur); the variable no longer occurs in the result.
    BasePoly substitute_value(int i, const C& v) const {
        BasePoly r(nv_);
        for (auto& [m, c] : terms_) {
            Monomial mm(m);
            std::int64_t e = mm.e[i];
            mm.e[i] = 0;
            r.add_term(mm, e == 0 ? c : C(c * field_pow(v, e)));
        }
        return r;
    }

  private:
    void check_compatible(const BasePoly& o) const {
        if (nv_ != o.nv_) throw InternalError("mixed ambient variable counts");
    }

    int nv_;
    Terms terms_;
};

using LaurentPoly = BasePoly<Rational>;

// ---- textual form -------------------------------------------------------

std::string default_var_name(char letter, int i);
std::vector<std::string> default_var_names(char letter, int n);
std::string poly_to_string(const LaurentPoly& f, const std::vector<std::string>& names);
std::string poly_to_string(const LaurentPoly& f, char letter = 't');

// Small expression parser for fixtures and tests: +, -, *, ^ (integer
// exponents, possibly negative), parentheses, rational literals, and
// variables named <letter><index> with index 1-based ("t1", "x3").
LaurentPoly parse_poly(const std::string& text, int nvars, char letter = 't');

}  // namespace jumploci
