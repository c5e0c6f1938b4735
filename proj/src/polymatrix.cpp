#include "jumploci/polymatrix.hpp"

#include <algorithm>
#include <map>

namespace jumploci {

PolyMatrix PolyMatrix::submatrix(const std::vector<int>& rs, const std::vector<int>& cs) const {
    PolyMatrix s(static_cast<int>(rs.size()), static_cast<int>(cs.size()), nvars);
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) s.entry[i][j] = entry[rs[i]][cs[j]];
    return s;
}

PolyMatrix PolyMatrix::delete_row_col(int r, int c) const {
    std::vector<int> rs, cs;
    for (int i = 0; i < rows; ++i)
        if (i != r) rs.push_back(i);
    for (int j = 0; j < cols; ++j)
        if (j != c) cs.push_back(j);
    return submatrix(rs, cs);
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols, rows, nvars);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t.entry[j][i] = entry[i][j];
    return t;
}

bool PolyMatrix::is_skew_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i; j < cols; ++j)
            if (!(entry[i][j] == -entry[j][i])) return false;
    return true;
}

Ideal::Ideal(int nv, std::vector<LaurentPoly> g) : nvars(nv) {
    for (auto& p : g)
        if (!p.is_zero_poly()) gens.push_back(std::move(p));
}

bool Ideal::is_unit_ideal() const {
    for (auto& g : gens)
        if (g.is_constant() && !g.is_zero_poly()) return true;
    return false;
}

namespace {

// Minors of m on a fixed row set, for every column subset of the same size,
// by dynamic programming over rows: level r holds det of the first r chosen
// rows against each column subset of size r.
std::map<std::vector<int>, LaurentPoly> minors_on_rows(const PolyMatrix& m, const std::vector<int>& rws) {
    int n = m.nvars;
    std::map<std::vector<int>, LaurentPoly> level;
    level[{}] = LaurentPoly(n, Rational(1));
    for (int r : rws) {
        std::map<std::vector<int>, LaurentPoly> next;
        for (auto& [cset, det] : level) {
            if (det.is_zero_poly()) continue;
            // Extend by one more column, keeping csets sorted. The new column
            // enters at some position, contributing the cofactor sign.
            for (int c = 0; c < m.cols; ++c) {
                if (std::binary_search(cset.begin(), cset.end(), c)) continue;
                if (m.entry[r][c].is_zero_poly()) continue;
                std::vector<int> cs(cset);
                auto pos = std::upper_bound(cs.begin(), cs.end(), c);
                std::size_t idx = static_cast<std::size_t>(pos - cs.begin());
                cs.insert(pos, c);
                // Laplace along the last chosen row: sign = (-1)^{(k-1) + idx}
                // with k the new size; equivalently parity of (size-1 - idx).
                int sign = ((cs.size() - 1 - idx) % 2 == 0) ? 1 : -1;
                LaurentPoly contrib = det * m.entry[r][c];
                if (sign < 0) contrib = -contrib;
                auto [it, fresh] = next.try_emplace(std::move(cs), contrib);
                if (!fresh) it->second = it->second + contrib;
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw ValidationError("determinant: square matrix required");
    if (m.rows == 0) return LaurentPoly(m.nvars, Rational(1));
    std::vector<int> rws(m.rows);
    for (int i = 0; i < m.rows; ++i) rws[i] = i;
    auto level = minors_on_rows(m, rws);
    std::vector<int> all(m.cols);
    for (int j = 0; j < m.cols; ++j) all[j] = j;
    auto it = level.find(all);
    return it == level.end() ? LaurentPoly(m.nvars) : it->second;
}

Ideal minors_ideal(const PolyMatrix& m, int size) {
    if (size < 0 || size > std::min(m.rows, m.cols))
        throw ValidationError("minors_ideal: size out of range");
    if (size == 0) return Ideal::unit(m.nvars);

    std::vector<LaurentPoly> gens;
    std::vector<int> rws(size);
    for (int i = 0; i < size; ++i) rws[i] = i;
    // Row subsets in lexicographic order; per row set, the DP emits column
    // subsets in lexicographic order from the ordered map.
    for (;;) {
        auto level = minors_on_rows(m, rws);
        for (auto& [cset, det] : level)
            if (!det.is_zero_poly()) gens.push_back(det);
        int i = size - 1;
        while (i >= 0 && rws[i] == m.rows - size + i) --i;
        if (i < 0) break;
        ++rws[i];
        for (int j = i + 1; j < size; ++j) rws[j] = rws[j - 1] + 1;
    }
    return Ideal(m.nvars, std::move(gens));
}

namespace {

LaurentPoly pfaffian_masked(const PolyMatrix& m, std::uint32_t mask,
                            std::map<std::uint32_t, LaurentPoly>& memo) {
    if (mask == 0) return LaurentPoly(m.nvars, Rational(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int a = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << a);
    LaurentPoly acc(m.nvars);
    int parity = 0;
    for (std::uint32_t bits = rest; bits; bits &= bits - 1, ++parity) {
        int b = __builtin_ctz(bits);
        if (!m.entry[a][b].is_zero_poly()) {
            LaurentPoly term = m.entry[a][b] * pfaffian_masked(m, rest & ~(1u << b), memo);
            acc = (parity % 2 == 0) ? acc + term : acc - term;
        }
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

LaurentPoly pfaffian(const PolyMatrix& m) {
    if (!m.is_skew_symmetric()) throw ValidationError("pfaffian: skew-symmetric matrix required");
    if (m.rows % 2 != 0) throw ValidationError("pfaffian: even dimension required");
    if (m.rows > 30) throw BudgetError("pfaffian: matrix too large");
    std::map<std::uint32_t, LaurentPoly> memo;
    std::uint32_t mask = m.rows == 32 ? ~0u : ((1u << m.rows) - 1);
    return pfaffian_masked(m, mask, memo);
}

Ideal pfaffian_ideal(const PolyMatrix& m, int order2r) {
    if (!m.is_skew_symmetric()) throw ValidationError("pfaffian_ideal: skew-symmetric matrix required");
    if (order2r % 2 != 0) throw ValidationError("pfaffian_ideal: even order required");
    if (order2r < 0 || order2r > m.rows) throw ValidationError("pfaffian_ideal: order out of range");
    if (order2r == 0) return Ideal::unit(m.nvars);
    if (m.rows > 30) throw BudgetError("pfaffian_ideal: matrix too large");

    std::map<std::uint32_t, LaurentPoly> memo;
    std::vector<LaurentPoly> gens;
    std::vector<int> sub(order2r);
    for (int i = 0; i < order2r; ++i) sub[i] = i;
    for (;;) {
        std::uint32_t mask = 0;
        for (int i : sub) mask |= (1u << i);
        LaurentPoly pf = pfaffian_masked(m, mask, memo);
        if (!pf.is_zero_poly()) gens.push_back(pf);
        int i = order2r - 1;
        while (i >= 0 && sub[i] == m.rows - order2r + i) --i;
        if (i < 0) break;
        ++sub[i];
        for (int j = i + 1; j < order2r; ++j) sub[j] = sub[j - 1] + 1;
    }
    return Ideal(m.nvars, std::move(gens));
}

Ideal fitting_ideal(const PolyMatrix& m, int target_rank, int k) {
    if (k < 0) throw ValidationError("fitting_ideal: k >= 0 required");
    int size = target_rank - k;
    if (size <= 0) return Ideal::unit(m.nvars);
    if (size > std::min(m.rows, m.cols)) return Ideal(m.nvars);  // padded minors all vanish
    return minors_ideal(m, size);
}

LaurentPoly order_of_module(const PolyMatrix& m, int target_rank, int k) {
    Ideal e = fitting_ideal(m, target_rank, k);
    if (e.is_zero_ideal()) return LaurentPoly(m.nvars);
    return unit_normalize(gcd_many(e.gens)).rep;
}

}  // namespace jumploci
