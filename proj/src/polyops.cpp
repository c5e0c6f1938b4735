#include "jumploci/polyops.hpp"

#include <algorithm>

namespace jumploci {

UnitNormalForm unit_normalize(const LaurentPoly& f) {
    if (f.is_zero_poly()) return {f};
    int n = f.nvars();
    Monomial shift(n);
    for (int i = 0; i < n; ++i) shift.e[i] = -f.low_degree_in(i);
    LaurentPoly g = f.mul_monomial(shift, Rational(1));
    if (sgn(g.leading().second) < 0) g = -g;
    return {g};
}

bool equal_up_to_units(const LaurentPoly& f, const LaurentPoly& g) {
    return unit_normalize(f) == unit_normalize(g);
}

LaurentPoly clear_to_poly(const LaurentPoly& f) {
    if (f.is_zero_poly()) return f;
    int n = f.nvars();
    Monomial shift(n);
    for (int i = 0; i < n; ++i) shift.e[i] = -f.low_degree_in(i);
    return f.mul_monomial(shift, Rational(1));
}

void require_polynomial(const LaurentPoly& f, const char* where) {
    if (f.is_laurent())
        throw ValidationError(std::string(where) + ": expected an honest polynomial (no negative exponents)");
}

LaurentPoly shift_to_origin(const LaurentPoly& f) {
    require_polynomial(f, "shift_to_origin");
    int n = f.nvars();
    LaurentPoly cur = f;
    for (int i = 0; i < n; ++i) {
        if (!cur.depends_on(i)) continue;
        // Horner in (x_i + 1): collect coefficients by the exponent of x_i.
        std::int64_t deg = cur.degree_in(i);
        std::vector<LaurentPoly> coeff(static_cast<std::size_t>(deg) + 1, LaurentPoly(n));
        for (auto& [m, c] : cur.terms()) {
            Monomial mm(m);
            std::int64_t k = mm.e[i];
            mm.e[i] = 0;
            coeff[static_cast<std::size_t>(k)].add_term(mm, c);
        }
        LaurentPoly xi1 = LaurentPoly::variable(n, i) + LaurentPoly(n, Rational(1));
        LaurentPoly acc = coeff[static_cast<std::size_t>(deg)];
        for (std::int64_t k = deg - 1; k >= 0; --k) acc = acc * xi1 + coeff[static_cast<std::size_t>(k)];
        cur = acc;
    }
    return cur;
}

LaurentPoly initial_form(const LaurentPoly& g) {
    if (g.is_zero_poly()) throw ValidationError("initial_form: zero input rejected");
    require_polynomial(g, "initial_form");
    std::int64_t d = g.low_degree();
    LaurentPoly r(g.nvars());
    for (auto& [m, c] : g.terms())
        if (m.total_degree() == d) r.add_term(m, c);
    return r;
}

bool is_homogeneous(const LaurentPoly& g) {
    if (g.is_zero_poly()) return true;
    std::int64_t d = g.terms().begin()->first.total_degree();
    for (auto& [m, c] : g.terms())
        if (m.total_degree() != d) return false;
    return true;
}

std::optional<LaurentPoly> div_exact(const LaurentPoly& f, const LaurentPoly& g) {
    require_polynomial(f, "div_exact");
    require_polynomial(g, "div_exact");
    if (g.is_zero_poly()) return std::nullopt;
    int n = f.nvars();
    LaurentPoly q(n), r(f);
    const auto& [gm, gc] = g.leading();
    while (!r.is_zero_poly()) {
        const auto& [rm, rc] = r.leading();
        Monomial t = rm / gm;
        for (auto e : t.e)
            if (e < 0) return std::nullopt;
        Rational c = rc / gc;
        q.add_term(t, c);
        r = r - g.mul_monomial(t, c);
    }
    return q;
}

std::optional<LaurentPoly> div_exact_laurent(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero_poly()) return std::nullopt;
    if (f.is_zero_poly()) return LaurentPoly(f.nvars());
    return div_exact(clear_to_poly(f), clear_to_poly(g));
}

bool divides(const LaurentPoly& g, const LaurentPoly& f) {
    return div_exact_laurent(f, g).has_value();
}

Rational rational_content(const LaurentPoly& f) {
    Rational c(0);
    for (auto& [m, k] : f.terms()) c = rational_gcd(c, k);
    return c;
}

namespace {

// Dense view of f as a univariate polynomial in variable v with multivariate
// polynomial coefficients (still in the full ambient, with v scrubbed out).
std::vector<LaurentPoly> collect_in(const LaurentPoly& f, int v) {
    std::vector<LaurentPoly> coeff(static_cast<std::size_t>(f.degree_in(v)) + 1, LaurentPoly(f.nvars()));
    for (auto& [m, c] : f.terms()) {
        Monomial mm(m);
        std::int64_t k = mm.e[v];
        mm.e[v] = 0;
        coeff[static_cast<std::size_t>(k)].add_term(mm, c);
    }
    return coeff;
}

LaurentPoly assemble_in(const std::vector<LaurentPoly>& coeff, int v, int n) {
    LaurentPoly r(n);
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        Monomial vk(n);
        vk.e[v] = static_cast<std::int64_t>(k);
        for (auto& [m, c] : coeff[k].terms()) r.add_term(m * vk, c);
    }
    return r;
}

void trim(std::vector<LaurentPoly>& a) {
    while (!a.empty() && a.back().is_zero_poly()) a.pop_back();
}

LaurentPoly gcd_poly(const LaurentPoly& f, const LaurentPoly& g);

LaurentPoly content_of_coeffs(const std::vector<LaurentPoly>& coeff, int n) {
    LaurentPoly c(n);
    for (auto& p : coeff) {
        if (p.is_zero_poly()) continue;
        c = c.is_zero_poly() ? p : gcd_poly(c, p);
        if (c.is_constant()) break;
    }
    return c;
}

std::vector<LaurentPoly> divide_coeffs(const std::vector<LaurentPoly>& coeff, const LaurentPoly& d) {
    std::vector<LaurentPoly> out;
    out.reserve(coeff.size());
    for (auto& p : coeff) {
        if (p.is_zero_poly()) {
            out.push_back(p);
            continue;
        }
        auto q = div_exact(p, d);
        if (!q) throw InternalError("content division failed");
        out.push_back(*q);
    }
    return out;
}

// Pseudo-remainder of dense univariate A by B (poly coefficients); the
// implied lc(B)^e normalization is irrelevant because callers re-primitivize.
std::vector<LaurentPoly> pseudo_rem(std::vector<LaurentPoly> A, const std::vector<LaurentPoly>& B) {
    const LaurentPoly& lc = B.back();
    while (A.size() >= B.size()) {
        LaurentPoly top = A.back();
        std::size_t k = A.size() - B.size();
        for (auto& a : A) a = a * lc;
        for (std::size_t i = 0; i < B.size(); ++i)
            A[k + i] = A[k + i] - B[i] * top;
        trim(A);
        if (A.empty()) break;
    }
    return A;
}

// Primitive-PRS gcd of nonzero honest polynomials, with rational content
// handled so that integer inputs stay integer-exact.
LaurentPoly gcd_poly(const LaurentPoly& f, const LaurentPoly& g) {
    int n = f.nvars();
    Rational cf = rational_content(f), cg = rational_content(g);
    LaurentPoly pf = f * (Rational(1) / cf), pg = g * (Rational(1) / cg);
    Rational c = rational_gcd(cf, cg);

    int v = -1;
    for (int i = n - 1; i >= 0; --i)
        if (pf.depends_on(i) || pg.depends_on(i)) {
            v = i;
            break;
        }
    if (v < 0) return LaurentPoly(n, c);  // both constants

    if (!pf.depends_on(v) || !pg.depends_on(v)) {
        // One side is constant in v: gcd divides it, so gcd of it with the
        // v-content of the other side.
        const LaurentPoly& cst = pf.depends_on(v) ? pg : pf;
        const LaurentPoly& var = pf.depends_on(v) ? pf : pg;
        LaurentPoly cont = content_of_coeffs(collect_in(var, v), n);
        return gcd_poly(cst, cont) * c;
    }

    auto A = collect_in(pf, v), B = collect_in(pg, v);
    LaurentPoly contA = content_of_coeffs(A, n), contB = content_of_coeffs(B, n);
    LaurentPoly d = gcd_poly(contA, contB);
    A = divide_coeffs(A, contA);
    B = divide_coeffs(B, contB);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        auto R = pseudo_rem(A, B);
        A = std::move(B);
        if (!R.empty()) {
            LaurentPoly contR = content_of_coeffs(R, n);
            R = divide_coeffs(R, contR);
        }
        B = std::move(R);
    }
    LaurentPoly result = assemble_in(A, v, n) * d * c;
    return result;
}

}  // namespace

LaurentPoly gcd_multi(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero_poly()) return unit_normalize(g).rep;
    if (g.is_zero_poly()) return unit_normalize(f).rep;
    return unit_normalize(gcd_poly(clear_to_poly(f), clear_to_poly(g))).rep;
}

LaurentPoly gcd_many(const std::vector<LaurentPoly>& fs) {
    if (fs.empty()) return LaurentPoly(0);
    LaurentPoly acc(fs.front().nvars());
    for (auto& f : fs) {
        acc = gcd_multi(acc, f);
        if (!acc.is_zero_poly() && acc.is_constant() && acc.constant_term() == Rational(1)) break;
    }
    return acc;
}

LaurentPoly derivative(const LaurentPoly& f, int i) {
    LaurentPoly r(f.nvars());
    for (auto& [m, c] : f.terms()) {
        if (m.e[i] == 0) continue;
        Monomial mm(m);
        Rational k(static_cast<long>(mm.e[i]));
        mm.e[i] -= 1;
        r.add_term(mm, c * k);
    }
    return r;
}

LaurentPoly squarefree_part(const LaurentPoly& f) {
    if (f.is_zero_poly()) return f;
    LaurentPoly p = clear_to_poly(f);
    if (p.is_constant()) return LaurentPoly(f.nvars(), Rational(1));
    LaurentPoly g = p;
    for (int i = 0; i < f.nvars(); ++i) {
        if (!p.depends_on(i)) continue;
        g = gcd_multi(g, derivative(p, i));
        if (g.is_constant()) break;
    }
    auto q = div_exact(p, g.is_constant() ? LaurentPoly(f.nvars(), g.constant_term()) : g);
    if (!q) throw InternalError("squarefree_part: gcd does not divide");
    return unit_normalize(*q).rep;
}

std::vector<std::pair<LaurentPoly, int>> squarefree_decomposition(const LaurentPoly& f) {
    std::vector<std::pair<LaurentPoly, int>> out;
    if (f.is_zero_poly()) return out;
    LaurentPoly p = clear_to_poly(f);
    if (p.is_constant()) return out;
    int n = p.nvars();
    LaurentPoly g = p;
    for (int i = 0; i < n; ++i)
        if (p.depends_on(i)) g = gcd_multi(g, derivative(p, i));
    LaurentPoly w = *div_exact(p, g);  // product of the distinct primes
    int mult = 1;
    while (!unit_normalize(w).rep.is_constant()) {
        LaurentPoly y = gcd_multi(w, g);
        LaurentPoly fac = *div_exact(clear_to_poly(w), y);
        fac = unit_normalize(fac).rep;
        if (!fac.is_constant()) out.emplace_back(fac, mult);
        auto g2 = div_exact(clear_to_poly(g), y);
        if (!g2) throw InternalError("squarefree_decomposition: division failed");
        g = *g2;
        w = y;
        ++mult;
    }
    return out;
}

LaurentPoly substitute_linear(const LaurentPoly& f, const std::vector<std::vector<Rational>>& M) {
    require_polynomial(f, "substitute_linear");
    int n = f.nvars();
    int d = n == 0 ? 0 : static_cast<int>(M.empty() ? 0 : M[0].size());
    std::vector<LaurentPoly> forms;
    forms.reserve(n);
    for (int i = 0; i < n; ++i) {
        LaurentPoly li(d);
        for (int j = 0; j < d; ++j) li.add_term([&] {
            Monomial m(d);
            m.e[j] = 1;
            return m;
        }(), M[i][j]);
        forms.push_back(li);
    }
    LaurentPoly r(d);
    for (auto& [m, c] : f.terms()) {
        LaurentPoly t(d, c);
        for (int i = 0; i < n; ++i)
            if (m.e[i] != 0) t = t * forms[i].pow(m.e[i]);
        r = r + t;
    }
    return r;
}

LaurentPoly substitute_monomial_map(const LaurentPoly& f, int new_nvars,
                                    const std::vector<std::vector<std::int64_t>>& image) {
    LaurentPoly r(new_nvars);
    for (auto& [m, c] : f.terms()) {
        Monomial mm(new_nvars);
        for (int i = 0; i < f.nvars(); ++i)
            if (m.e[i] != 0)
                for (int j = 0; j < new_nvars; ++j) mm.e[j] += m.e[i] * image[i][j];
        r.add_term(mm, c);
    }
    return r;
}

LaurentPoly reduce_by_set(const LaurentPoly& f, const std::vector<LaurentPoly>& gens) {
    std::vector<LaurentPoly> gs;
    for (auto& g : gens)
        if (!g.is_zero_poly()) gs.push_back(clear_to_poly(g));
    LaurentPoly rem(f.nvars());
    LaurentPoly r = clear_to_poly(f);
    while (!r.is_zero_poly()) {
        const auto& [rm, rc] = r.leading();
        bool reduced = false;
        for (auto& g : gs) {
            const auto& [gm, gc] = g.leading();
            Monomial t = rm / gm;
            if (std::any_of(t.e.begin(), t.e.end(), [](std::int64_t e) { return e < 0; })) continue;
            r = r - g.mul_monomial(t, rc / gc);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(rm, rc);
            LaurentPoly rest(r.nvars());
            for (auto& [m, c] : r.terms())
                if (!(m == rm)) rest.add_term(m, c);
            r = rest;
        }
    }
    return rem;
}

}  // namespace jumploci
