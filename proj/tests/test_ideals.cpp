#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jumploci/modp.hpp"
#include "jumploci/polymatrix.hpp"
#include "jumploci/tangent_cone.hpp"

using namespace jumploci;

namespace {

std::mt19937 rng(987654);

PolyMatrix random_skew(int n, int nvars) {
    std::uniform_int_distribution<int> coeffd(-2, 2);
    std::uniform_int_distribution<int> vard(0, nvars - 1);
    PolyMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            LaurentPoly f(nvars);
            f.add_term(Monomial([&] {
                           Monomial mm(nvars);
                           mm.e[vard(rng)] = 1;
                           return mm.e;
                       }()),
                       rational_of(coeffd(rng)));
            m.at(i, j) = f;
            m.at(j, i) = -f;
        }
    return m;
}

LinearSubspace subspace_from(const std::vector<std::vector<long>>& rows, int n) {
    QMatrix eqs;
    for (auto& r : rows) {
        QRow row;
        for (long v : r) row.push_back(rational_of(v));
        eqs.push_back(std::move(row));
    }
    return LinearSubspace::from_equations(n, std::move(eqs));
}

}  // namespace

TEST_CASE("minors of the all-ones n=3 link matrix") {
    // Rows i in [2], columns j in [3]; entries l_ij x_i - delta_ij sum_k l_ik x_k.
    PolyMatrix m(2, 3, 3);
    m.at(0, 0) = parse_poly("-(x2+x3)", 3, 'x');
    m.at(0, 1) = parse_poly("x1", 3, 'x');
    m.at(0, 2) = parse_poly("x1", 3, 'x');
    m.at(1, 0) = parse_poly("x2", 3, 'x');
    m.at(1, 1) = parse_poly("-(x1+x3)", 3, 'x');
    m.at(1, 2) = parse_poly("x2", 3, 'x');
    Ideal i2 = minors_ideal(m, 2);
    REQUIRE(i2.gens.size() == 3);
    LaurentPoly plane = parse_poly("x1+x2+x3", 3, 'x');
    for (auto& g : i2.gens) {
        auto q = div_exact(clear_to_poly(g), plane);
        REQUIRE(q.has_value());
        CHECK(q->support_size() == 1);  // a single-variable multiple of the plane
    }
}

TEST_CASE("minors edge cases") {
    PolyMatrix d(2, 2, 2);
    d.at(0, 0) = parse_poly("t1-1", 2);
    d.at(1, 1) = parse_poly("t2-1", 2);
    Ideal i1 = minors_ideal(d, 1);
    CHECK(i1.gens.size() == 2);
    Ideal i2 = minors_ideal(d, 2);
    REQUIRE(i2.gens.size() == 1);
    CHECK(i2.gens[0] == parse_poly("(t1-1)(t2-1)", 2));
    CHECK(minors_ideal(d, 0).is_unit_ideal());
    CHECK_THROWS_AS(minors_ideal(d, 3), ValidationError);
}

TEST_CASE("pfaffian basics and pf^2 = det") {
    PolyMatrix m(2, 2, 1);
    m.at(0, 1) = parse_poly("t1", 1);
    m.at(1, 0) = -m.at(0, 1);
    CHECK(pfaffian(m) == parse_poly("t1", 1));

    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> sized(1, 4);
        int n = 2 * sized(rng);
        PolyMatrix s = random_skew(n, 3);
        CHECK(pfaffian(s) * pfaffian(s) == determinant(s));
    }
}

TEST_CASE("pfaffian rejects bad input") {
    PolyMatrix m(2, 2, 1);
    m.at(0, 1) = parse_poly("t1", 1);
    CHECK_THROWS_AS(pfaffian(m), ValidationError);  // not skew
    PolyMatrix odd(3, 3, 1);
    CHECK_THROWS_AS(pfaffian_ideal(odd, 1), ValidationError);  // odd order
}

TEST_CASE("fitting ideals: 1x1, ascending chain, padding") {
    PolyMatrix m(1, 1, 1);
    m.at(0, 0) = parse_poly("t1-1", 1);
    CHECK(fitting_ideal(m, 1, 0).gens == std::vector<LaurentPoly>{parse_poly("t1-1", 1)});
    CHECK(fitting_ideal(m, 1, 1).is_unit_ideal());

    // Ascending chain via sample-point membership: each E_k generator set's
    // zero locus contains the next one's.
    PolyMatrix big(3, 3, 2);
    big.at(0, 0) = parse_poly("t1-1", 2);
    big.at(1, 1) = parse_poly("t2-1", 2);
    big.at(2, 2) = parse_poly("t1t2-1", 2);
    big.at(0, 1) = parse_poly("2", 2);
    // Ascending ideals have descending zero loci: V(E_{k+1}) ⊆ V(E_k).
    for (int k = 0; k + 1 <= 3; ++k) {
        auto ek = VarietyDescription::hypersurface(Ambient::torus, 2, fitting_ideal(big, 3, k));
        auto ek1 = VarietyDescription::hypersurface(Ambient::torus, 2, fitting_ideal(big, 3, k + 1));
        auto rep = variety_contained_mod_p(ek1, ek, {5, 7});
        CHECK(rep.outcome == OracleOutcome::equal);
    }
}

TEST_CASE("order_of_module and the free-rank shift") {
    // Torsion block T = diag(f, g) extended by r zero rows (free rank r).
    PolyMatrix t(2, 2, 2);
    t.at(0, 0) = parse_poly("t1-1", 2);
    t.at(1, 1) = parse_poly("t2+1", 2);
    CHECK(equal_up_to_units(order_of_module(t, 2, 0), parse_poly("(t1-1)(t2+1)", 2)));

    for (int r = 1; r <= 2; ++r) {
        PolyMatrix padded(2 + r, 2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) padded.at(i, j) = t.at(i, j);
        for (int k = 0; k < r; ++k) CHECK(order_of_module(padded, 2 + r, k).is_zero_poly());
        for (int k = r; k <= 2 + r; ++k)
            CHECK(equal_up_to_units(order_of_module(padded, 2 + r, k), order_of_module(t, 2, k - r)));
    }
}

TEST_CASE("fitting ideal is invariant under row operations and zero columns") {
    PolyMatrix m(2, 2, 2);
    m.at(0, 0) = parse_poly("t1-1", 2);
    m.at(0, 1) = parse_poly("t2-1", 2);
    m.at(1, 1) = parse_poly("t1t2-1", 2);

    PolyMatrix m2(2, 3, 2);  // add a zero column and a row operation
    for (int j = 0; j < 2; ++j) {
        m2.at(0, j) = m.at(0, j);
        m2.at(1, j) = m.at(1, j) + m.at(0, j);
    }
    for (int k = 0; k <= 2; ++k) {
        auto a = VarietyDescription::hypersurface(Ambient::torus, 2, fitting_ideal(m, 2, k));
        auto b = VarietyDescription::hypersurface(Ambient::torus, 2, fitting_ideal(m2, 2, k));
        CHECK(varieties_equal_mod_p(a, b, {5, 7}).outcome == OracleOutcome::equal);
    }
}

TEST_CASE("exponential tangent cone: coordinate axes for (t1-1)(t2-1)") {
    auto v = exponential_tangent_cone(parse_poly("(t1-1)(t2-1)", 2), false);
    auto expect = VarietyDescription::of_subspaces(
        2, {subspace_from({{1, 0}}, 2), subspace_from({{0, 1}}, 2)});
    auto eq = equal_as_subspace_unions(v, expect);
    REQUIRE(eq.has_value());
    CHECK(*eq);
}

TEST_CASE("exponential tangent cone: three lines for the 6^3_1 polynomial") {
    LaurentPoly f = parse_poly("t1t2+t1t3+t2t3-t1-t2-t3", 3);
    auto v = exponential_tangent_cone(f, true);
    auto expect = VarietyDescription::of_subspaces(3, {
                                                          subspace_from({{1, 0, 0}, {0, 1, 1}}, 3),
                                                          subspace_from({{0, 1, 0}, {1, 0, 1}}, 3),
                                                          subspace_from({{0, 0, 1}, {1, 1, 0}}, 3),
                                                      });
    auto eq = equal_as_subspace_unions(v, expect);
    REQUIRE(eq.has_value());
    CHECK(*eq);
}

TEST_CASE("exponential tangent cone: subtorus tangent space") {
    auto v = exponential_tangent_cone(parse_poly("t1t2-1", 2), false);
    auto expect = VarietyDescription::of_subspaces(2, {subspace_from({{1, 1}}, 2)});
    auto eq = equal_as_subspace_unions(v, expect);
    REQUIRE(eq.has_value());
    CHECK(*eq);
}

TEST_CASE("exponential tangent cone distributes over products") {
    LaurentPoly f = parse_poly("t1-1", 2), g = parse_poly("t1t2-1", 2);
    auto both = exponential_tangent_cone(f * g, false);
    auto fa = exponential_tangent_cone(f, false);
    auto ga = exponential_tangent_cone(g, false);
    VarietyDescription uni = fa;
    for (auto& c : ga.components) uni.add(c);
    uni.simplify();
    auto eq = equal_as_subspace_unions(both, uni);
    REQUIRE(eq.has_value());
    CHECK(*eq);
}

TEST_CASE("support cap is an explicit error") {
    LaurentPoly f(1);
    for (std::int64_t k = 0; k <= 12; ++k)
        f.add_term(Monomial(std::vector<std::int64_t>{k}), rational_of(k % 2 ? 1 : -1));
    CHECK_THROWS_AS(exponential_tangent_cone(f, false, 12), BudgetError);
}

TEST_CASE("tangent cone of a hypersurface") {
    // Vanishing at 1: the initial form of the shift.
    auto tc = tangent_cone_hypersurface(parse_poly("(t1+t2)(t1t2+1)-4t1t2", 2), true);
    REQUIRE(tc.components.size() == 1);
    auto* h = std::get_if<CompHypersurface>(&tc.components[0]);
    REQUIRE(h != nullptr);
    CHECK(h->ideal.gens[0] == parse_poly("x1^2+x2^2", 2, 'x'));

    // Not vanishing at 1 with the identity adjoined: the origin.
    auto pt = tangent_cone_hypersurface(parse_poly("t1+t2", 2), true);
    REQUIRE(pt.components.size() == 1);
    CHECK(std::holds_alternative<CompIdentity>(pt.components[0]));

    auto none = tangent_cone_hypersurface(parse_poly("t1+t2", 2), false);
    CHECK(none.is_empty_description());

    CHECK_THROWS_AS(tangent_cone_hypersurface(LaurentPoly(2), true), ValidationError);
}

TEST_CASE("subspace_in_variety") {
    LaurentPoly g = parse_poly("x3(x1+x2+x3)", 3, 'x');
    VarietyDescription v = VarietyDescription::hypersurface(Ambient::affine, 3, Ideal(3, {g}));
    CHECK(subspace_in_variety(subspace_from({{1, 1, 1}}, 3), v));
    CHECK(!subspace_in_variety(subspace_from({{0, 0, 1}},
                                             3),
                               VarietyDescription::hypersurface(
                                   Ambient::affine, 3, Ideal(3, {parse_poly("x1+x2+x3", 3, 'x')}))));
}

TEST_CASE("every tau subspace lies in the tangent cone") {
    std::vector<LaurentPoly> polys{
        parse_poly("(t1-1)(t2-1)", 2),
        parse_poly("t1t2+t1t3+t2t3-t1-t2-t3", 3),
        parse_poly("(t1+t2)(t1t2+1)-4t1t2", 2),
        parse_poly("(t1-1)(t2-1)(t3-1)(t1t2t3-1)", 3),
    };
    for (auto& f : polys) {
        auto tau = exponential_tangent_cone(f, true, 16);
        auto tc = tangent_cone_hypersurface(f, true);
        for (auto& c : tau.components) {
            if (auto* l = std::get_if<CompLinear>(&c)) CHECK(subspace_in_variety(l->space, tc));
            if (std::holds_alternative<CompIdentity>(c))
                CHECK(subspace_in_variety(LinearSubspace::origin(f.nvars()), tc));
        }
    }
}

TEST_CASE("mod-p oracle separates different varieties and matches equal ones") {
    auto a = VarietyDescription::hypersurface(Ambient::affine, 2,
                                              Ideal(2, {parse_poly("x1^2+x2^2", 2, 'x')}));
    auto full = VarietyDescription::full(Ambient::affine, 2);
    auto rep = varieties_equal_mod_p(a, full, {5});
    CHECK(rep.outcome == OracleOutcome::differ);
    CHECK(!rep.witness.empty());

    auto b = VarietyDescription::hypersurface(Ambient::affine, 2,
                                              Ideal(2, {parse_poly("2x1^2+2x2^2", 2, 'x')}));
    CHECK(varieties_equal_mod_p(a, b, {5, 7, 11}).outcome == OracleOutcome::equal);

    VarietyDescription budget = VarietyDescription::full(Ambient::affine, 8);
    CHECK_THROWS_AS(varieties_equal_mod_p(budget, budget, {11}, 1000), BudgetError);
}
