#pragma once

#include <vector>

#include "jumploci/rational.hpp"

namespace jumploci {

using QRow = std::vector<Rational>;
using QMatrix = std::vector<QRow>;
using ZRow = std::vector<Integer>;
using ZMatrix = std::vector<ZRow>;

int rank_q(QMatrix m);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(QMatrix& m);

// Basis of the right nullspace {x : m x = 0}, columns stacked as rows of the
// result (each inner vector has m's column count entries).
std::vector<QRow> nullspace(const QMatrix& m);

// Canonical form for a homogeneous equation system: RREF, zero rows dropped,
// pivots scaled to 1, denominators cleared to a primitive integer row with
// positive pivot. Identical subspaces get identical forms.
QMatrix canonical_equations(QMatrix m);

bool row_in_span(const QMatrix& rref_rows, const std::vector<int>& pivots, QRow row);

Integer det_z(ZMatrix m);  // Bareiss fraction-free determinant

// Smith normal form with transform certificates: U * A * V = D, with U, V
// unimodular and D diagonal, d_1 | d_2 | ... Verified on construction.
struct SmithForm {
    ZMatrix d, u, v;
    std::vector<Integer> invariant_factors;  // nonzero diagonal entries, in order
};

SmithForm smith_normal_form(const ZMatrix& a);

}  // namespace jumploci
