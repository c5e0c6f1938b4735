#pragma once

#include <cstdint>

#include "jumploci/polyops.hpp"

namespace jumploci {

// Rectangular matrix of (Laurent) polynomials in a shared ambient.
struct PolyMatrix {
    int rows = 0, cols = 0, nvars = 0;
    std::vector<std::vector<LaurentPoly>> entry;

    PolyMatrix() = default;
    PolyMatrix(int r, int c, int nv)
        : rows(r), cols(c), nvars(nv), entry(r, std::vector<LaurentPoly>(c, LaurentPoly(nv))) {}

    const LaurentPoly& at(int r, int c) const { return entry[r][c]; }
    LaurentPoly& at(int r, int c) { return entry[r][c]; }

    PolyMatrix submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const;
    PolyMatrix delete_row_col(int r, int c) const;
    PolyMatrix transpose() const;
    bool is_skew_symmetric() const;

    template <class F, class Embed>
    std::vector<std::vector<F>> evaluate(const std::vector<F>& pt, Embed embed) const {
        std::vector<std::vector<F>> m(rows, std::vector<F>(cols, F(0)));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m[i][j] = entry[i][j].evaluate(pt, embed);
        return m;
    }
};

// Ideal = finite generating set; zero generators pruned, empty = zero ideal.
struct Ideal {
    int nvars = 0;
    std::vector<LaurentPoly> gens;

    Ideal() = default;
    explicit Ideal(int nv) : nvars(nv) {}
    Ideal(int nv, std::vector<LaurentPoly> g);

    bool is_zero_ideal() const { return gens.empty(); }
    bool is_unit_ideal() const;
    static Ideal unit(int nv) { return Ideal(nv, {LaurentPoly(nv, Rational(1))}); }
};

LaurentPoly determinant(const PolyMatrix& m);

// All size x size minors, deterministic row/column-lexicographic generator
// order, computed by cofactor expansion with memoization on column subsets.
// size 0 yields the unit ideal; size beyond the dimensions yields zero.
Ideal minors_ideal(const PolyMatrix& m, int size);

// Pfaffian of a skew-symmetric matrix of even dimension.
LaurentPoly pfaffian(const PolyMatrix& m);

// Ideal of Pfaffians of all principal 2r x 2r submatrices.
Ideal pfaffian_ideal(const PolyMatrix& m, int order2r);

// Fitting ideal E_k of the module presented by m with target rank q
// (E_k = I_{q-k}); unit ideal when q - k <= 0, zero-column padding implied.
Ideal fitting_ideal(const PolyMatrix& m, int target_rank, int k);

// GCD of the generators of E_k, unit-normalized; 0 iff E_k = 0.
LaurentPoly order_of_module(const PolyMatrix& m, int target_rank, int k);

}  // namespace jumploci
