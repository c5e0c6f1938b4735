#include "jumploci/qlinalg.hpp"

#include <algorithm>

#include "jumploci/errors.hpp"

namespace jumploci {

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && is_zero(m[sel][c])) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = Rational(m[r][j] * inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = Rational(m[i][j] - f * m[r][j]);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank_q(QMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<QRow> nullspace(const QMatrix& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    QMatrix a = m;
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<QRow> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QRow v(cols, Rational(0));
        v[f] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<std::size_t>(pivots[k])] = Rational(-a[k][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix canonical_equations(QMatrix m) {
    rref(m);
    QMatrix out;
    for (auto& row : m) {
        bool nz = std::any_of(row.begin(), row.end(), [](const Rational& q) { return !is_zero(q); });
        if (!nz) continue;
        // Clear to a primitive integer row with positive leading entry.
        Integer l(1);
        for (auto& q : row) l = lcm(l, q.get_den());
        Integer g(0);
        std::vector<Integer> ints;
        ints.reserve(row.size());
        for (auto& q : row) {
            Integer z(q.get_num() * (l / q.get_den()));
            g = gcd(g, z);
            ints.push_back(z);
        }
        if (sgn(g) == 0) g = 1;
        QRow r;
        r.reserve(row.size());
        int lead = 1;
        for (auto& z : ints)
            if (sgn(z) != 0) {
                lead = sgn(z);
                break;
            }
        for (auto& z : ints) r.push_back(Rational(z * lead / g));
        out.push_back(std::move(r));
    }
    return out;
}

bool row_in_span(const QMatrix& rref_rows, const std::vector<int>& pivots, QRow row) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        auto p = static_cast<std::size_t>(pivots[k]);
        if (is_zero(row[p])) continue;
        Rational f = row[p];
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = Rational(row[j] - f * rref_rows[k][j]);
    }
    return std::all_of(row.begin(), row.end(), [](const Rational& q) { return is_zero(q); });
}

Integer det_z(ZMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return Integer(1);
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t sel = k;
        while (sel < n && sgn(m[sel][k]) == 0) ++sel;
        if (sel == n) return Integer(0);
        if (sel != k) {
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

namespace {

void row_op(ZMatrix& m, ZMatrix& u, std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < m[0].size(); ++c) m[i][c] -= f * m[j][c];
    for (std::size_t c = 0; c < u[0].size(); ++c) u[i][c] -= f * u[j][c];
}
void col_op(ZMatrix& m, ZMatrix& v, std::size_t i, std::size_t j, const Integer& f) {
    for (auto& row : m) row[i] -= f * row[j];
    for (auto& row : v) row[i] -= f * row[j];
}

ZMatrix identity(std::size_t n) {
    ZMatrix id(n, ZRow(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

}  // namespace

SmithForm smith_normal_form(const ZMatrix& a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    SmithForm s;
    s.d = a;
    s.u = identity(rows);
    s.v = identity(cols);
    if (rows == 0 || cols == 0) return s;

    auto& m = s.d;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Find a nonzero pivot in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (sgn(m[i][j]) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) {
            std::swap(m[pi], m[t]);
            std::swap(s.u[pi], s.u[t]);
        }
        if (pj != t) {
            for (auto& row : m) std::swap(row[pj], row[t]);
            for (auto& row : s.v) std::swap(row[pj], row[t]);
        }
        // Clear row and column t by Euclid steps until only m[t][t] remains.
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(m[i][t]) == 0) continue;
                Integer q = m[i][t] / m[t][t];
                row_op(m, s.u, i, t, q);
                if (sgn(m[i][t]) != 0) {
                    std::swap(m[i], m[t]);
                    std::swap(s.u[i], s.u[t]);
                }
                dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(m[t][j]) == 0) continue;
                Integer q = m[t][j] / m[t][t];
                col_op(m, s.v, j, t, q);
                if (sgn(m[t][j]) != 0) {
                    for (auto& row : m) std::swap(row[j], row[t]);
                    for (auto& row : s.v) std::swap(row[j], row[t]);
                }
                dirty = true;
            }
            if (!dirty) break;
        }
        // Divisibility fix-up: m[t][t] must divide every later entry.
        for (;;) {
            bool fixed = true;
            for (std::size_t i = t + 1; i < rows && fixed; ++i)
                for (std::size_t j = t + 1; j < cols && fixed; ++j)
                    if (sgn(m[i][j] % m[t][t]) != 0) {
                        // Add row i to row t, then restart elimination at t.
                        row_op(m, s.u, t, i, Integer(-1));
                        fixed = false;
                    }
            if (fixed) break;
            for (;;) {
                bool dirty = false;
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (sgn(m[t][j]) == 0) continue;
                    Integer q = m[t][j] / m[t][t];
                    col_op(m, s.v, j, t, q);
                    if (sgn(m[t][j]) != 0) {
                        for (auto& row : m) std::swap(row[j], row[t]);
                        for (auto& row : s.v) std::swap(row[j], row[t]);
                    }
                    dirty = true;
                }
                for (std::size_t i = t + 1; i < rows; ++i) {
                    if (sgn(m[i][t]) == 0) continue;
                    Integer q = m[i][t] / m[t][t];
                    row_op(m, s.u, i, t, q);
                    if (sgn(m[i][t]) != 0) {
                        std::swap(m[i], m[t]);
                        std::swap(s.u[i], s.u[t]);
                    }
                    dirty = true;
                }
                if (!dirty) break;
            }
        }
        if (sgn(m[t][t]) < 0) {
            for (auto& row : m) row[t] = -row[t];
            for (auto& row : s.v) row[t] = -row[t];
        }
    }

    for (std::size_t t = 0; t < std::min(rows, cols); ++t)
        if (sgn(m[t][t]) != 0) s.invariant_factors.push_back(m[t][t]);

    // Certificate checks: U A V = D and |det U| = |det V| = 1.
    ZMatrix ua(rows, ZRow(cols, Integer(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < rows; ++k) {
            if (sgn(s.u[i][k]) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) ua[i][j] += s.u[i][k] * a[k][j];
        }
    ZMatrix uav(rows, ZRow(cols, Integer(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            if (sgn(ua[i][k]) == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) uav[i][j] += ua[i][k] * s.v[k][j];
        }
    if (uav != s.d) throw InternalError("smith_normal_form: transform certificate failed");
    if (abs(det_z(s.u)) != 1 || abs(det_z(s.v)) != 1)
        throw InternalError("smith_normal_form: transforms are not unimodular");
    return s;
}

}  // namespace jumploci
