#pragma once

#include <optional>

#include "jumploci/laurent.hpp"

namespace jumploci {

// Canonical representative of the unit orbit of a Laurent polynomial: units
// are +/- monomials, so two polynomials are associate iff their normal forms
// are identical. Zero gets the distinguished zero form.
struct UnitNormalForm {
    LaurentPoly rep;
    bool operator==(const UnitNormalForm& o) const = default;
};

UnitNormalForm unit_normalize(const LaurentPoly& f);
bool equal_up_to_units(const LaurentPoly& f, const LaurentPoly& g);

// Clear a Laurent polynomial to an honest polynomial by the minimal monomial
// (an associate with every occurring variable having minimal exponent 0).
LaurentPoly clear_to_poly(const LaurentPoly& f);

// f must have all exponents >= 0 for the x-variable operations below.
void require_polynomial(const LaurentPoly& f, const char* where);

// f(x_1+1, ..., x_n+1), expanded exactly. A ring homomorphism.
LaurentPoly shift_to_origin(const LaurentPoly& f);

// Homogeneous part of lowest total degree. Rejects zero.
LaurentPoly initial_form(const LaurentPoly& g);

bool is_homogeneous(const LaurentPoly& g);

// Exact division f / g in the polynomial ring; nullopt if not exact.
// Both inputs must be honest polynomials.
std::optional<LaurentPoly> div_exact(const LaurentPoly& f, const LaurentPoly& g);

// Division in the Laurent ring, where monomials are units: both sides are
// cleared first, so the quotient is meaningful up to units.
std::optional<LaurentPoly> div_exact_laurent(const LaurentPoly& f, const LaurentPoly& g);

// divides(g, f): g | f in the Laurent ring.
bool divides(const LaurentPoly& g, const LaurentPoly& f);

// GCD in Z[x_1..x_n] semantics: the rational content is gcd'd as a rational,
// so integer inputs stay integer-exact (gcd(2t, 4) = 2). Unique up to units;
// the result is unit-normalized. gcd(0, 0) = 0.
LaurentPoly gcd_multi(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly gcd_many(const std::vector<LaurentPoly>& fs);

Rational rational_content(const LaurentPoly& f);

LaurentPoly derivative(const LaurentPoly& f, int i);

// Product of the distinct irreducible factors (char 0), up to units.
LaurentPoly squarefree_part(const LaurentPoly& f);

// Squarefree decomposition f ~ prod factors[i].first ^ factors[i].second.
std::vector<std::pair<LaurentPoly, int>> squarefree_decomposition(const LaurentPoly& f);

// Substitute x_i := sum_j M[i][j] u_j (rational matrix n x d); result lives
// in d variables. Input must be an honest polynomial.
LaurentPoly substitute_linear(const LaurentPoly& f, const std::vector<std::vector<Rational>>& M);

// Map variables: result_var = image[i] gives, for each old variable i, its
// exponent row in the new ambient (a monomial map t_i -> prod u_j^{image[i][j]}).
LaurentPoly substitute_monomial_map(const LaurentPoly& f, int new_nvars,
                                    const std::vector<std::vector<std::int64_t>>& image);

// One-sided reduction of f by a generating set under the global order; reaching
// zero certifies ideal membership (no Groebner completion, so a nonzero
// remainder certifies nothing).
LaurentPoly reduce_by_set(const LaurentPoly& f, const std::vector<LaurentPoly>& gens);

}  // namespace jumploci
