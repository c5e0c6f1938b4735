#include "jumploci/cdga.hpp"

#include <algorithm>

namespace jumploci {

namespace {

std::vector<std::pair<int, Rational>> combine_terms(std::vector<std::pair<int, Rational>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rational>> out;
    for (auto& [k, c] : terms) {
        if (!out.empty() && out.back().first == k)
            out.back().second += c;
        else
            out.emplace_back(k, c);
    }
    std::erase_if(out, [](const auto& t) { return is_zero(t.second); });
    return out;
}

}  // namespace

FiniteCDGA FiniteCDGA::create(std::vector<BasisElement> basis, StructureMap products, DiffMap differential) {
    FiniteCDGA a;
    a.basis_ = std::move(basis);
    a.products_ = std::move(products);
    a.differential_ = std::move(differential);
    for (auto& [key, terms] : a.products_) terms = combine_terms(std::move(terms));
    std::erase_if(a.products_, [](const auto& kv) { return kv.second.empty(); });
    for (auto& [key, terms] : a.differential_) terms = combine_terms(std::move(terms));
    std::erase_if(a.differential_, [](const auto& kv) { return kv.second.empty(); });
    for (auto& b : a.basis_) a.top_ = std::max(a.top_, b.degree);
    a.by_degree_.assign(static_cast<std::size_t>(a.top_) + 1, {});
    for (std::size_t i = 0; i < a.basis_.size(); ++i) {
        if (a.basis_[i].degree < 0) throw ValidationError("cdga: negative degree");
        a.by_degree_[static_cast<std::size_t>(a.basis_[i].degree)].push_back(static_cast<int>(i));
    }
    a.validate();
    return a;
}

int FiniteCDGA::dim(int degree) const {
    if (degree < 0 || degree > top_) return 0;
    return static_cast<int>(by_degree_[static_cast<std::size_t>(degree)].size());
}

const std::vector<int>& FiniteCDGA::degree_indices(int degree) const {
    static const std::vector<int> none;
    if (degree < 0 || degree > top_) return none;
    return by_degree_[static_cast<std::size_t>(degree)];
}

int FiniteCDGA::basis_index(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].name == name) return static_cast<int>(i);
    throw ValidationError("cdga: unknown basis element '" + name + "'");
}

const std::vector<std::pair<int, Rational>>* FiniteCDGA::product(int i, int j) const {
    auto it = products_.find({i, j});
    return it == products_.end() ? nullptr : &it->second;
}

void FiniteCDGA::validate() const {
    if (basis_.empty() || basis_[0].degree != 0)
        throw ValidationError("cdga: basis must start with the unit in degree 0");
    if (dim(0) != 1) throw ValidationError("cdga: connectedness requires dim A^0 = 1 (unit only)");

    auto degree_of = [&](int i) { return basis_[static_cast<std::size_t>(i)].degree; };

    // Unit acts as identity; product degrees are additive.
    for (auto& [key, terms] : products_) {
        auto [i, j] = key;
        int d = degree_of(i) + degree_of(j);
        for (auto& [k, c] : terms) {
            if (degree_of(k) != d) throw ValidationError("cdga: product not degree-additive");
            (void)c;
        }
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        auto* left = product(0, static_cast<int>(i));
        if (!left || left->size() != 1 || (*left)[0].first != static_cast<int>(i) ||
            (*left)[0].second != Rational(1))
            throw ValidationError("cdga: unit must multiply as identity (1*" +
                                  basis_[i].name + ")");
    }

    // Graded commutativity on every basis pair.
    auto terms_of = [&](int i, int j) {
        auto* t = product(i, j);
        return t ? *t : std::vector<std::pair<int, Rational>>{};
    };
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            auto ab = terms_of(static_cast<int>(i), static_cast<int>(j));
            auto ba = terms_of(static_cast<int>(j), static_cast<int>(i));
            int sign = (degree_of(static_cast<int>(i)) * degree_of(static_cast<int>(j))) % 2 ? -1 : 1;
            for (auto& [k, c] : ba) c *= sign;
            if (combine_terms(std::move(ab)) != combine_terms(std::move(ba)))
                throw ValidationError("cdga: graded commutativity fails on (" + basis_[i].name + "," +
                                      basis_[j].name + ")");
        }

    // D raises degree by one and kills the unit.
    for (auto& [i, terms] : differential_) {
        for (auto& [k, c] : terms) {
            if (degree_of(k) != degree_of(i) + 1)
                throw ValidationError("cdga: differential must raise degree by 1");
            (void)c;
        }
        if (i == 0) throw ValidationError("cdga: D(1) must vanish");
    }

    // D∘D = 0.
    for (int d = 0; d <= top_; ++d) {
        QMatrix d1 = differential_matrix(d), d2 = differential_matrix(d + 1);
        if (d1.empty() || d2.empty()) continue;
        for (std::size_t c = 0; c < d1[0].size(); ++c)
            for (std::size_t r = 0; r < d2.size(); ++r) {
                Rational acc(0);
                for (std::size_t m = 0; m < d1.size(); ++m) acc += d2[r][m] * d1[m][c];
                if (!is_zero(acc)) throw ValidationError("cdga: D∘D != 0");
            }
    }

    // Leibniz rule on every basis pair.
    auto diff_of = [&](int i) {
        auto it = differential_.find(i);
        return it == differential_.end() ? std::vector<std::pair<int, Rational>>{} : it->second;
    };
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            std::vector<std::pair<int, Rational>> lhs, rhs;
            for (auto& [k, c] : terms_of(static_cast<int>(i), static_cast<int>(j)))
                for (auto& [l, e] : diff_of(k)) lhs.emplace_back(l, c * e);
            for (auto& [k, c] : diff_of(static_cast<int>(i)))
                for (auto& [l, e] : terms_of(k, static_cast<int>(j))) rhs.emplace_back(l, c * e);
            int sign = degree_of(static_cast<int>(i)) % 2 ? -1 : 1;
            for (auto& [k, c] : diff_of(static_cast<int>(j)))
                for (auto& [l, e] : terms_of(static_cast<int>(i), k))
                    rhs.emplace_back(l, c * e * Rational(sign));
            if (combine_terms(std::move(lhs)) != combine_terms(std::move(rhs)))
                throw ValidationError("cdga: Leibniz rule fails on (" + basis_[i].name + "," +
                                      basis_[j].name + ")");
        }
}

QMatrix FiniteCDGA::differential_matrix(int degree) const {
    const auto& src = degree_indices(degree);
    const auto& dst = degree_indices(degree + 1);
    QMatrix m(dst.size(), QRow(src.size(), Rational(0)));
    for (std::size_t c = 0; c < src.size(); ++c) {
        auto it = differential_.find(src[c]);
        if (it == differential_.end()) continue;
        for (auto& [k, coeff] : it->second) {
            auto pos = std::find(dst.begin(), dst.end(), k);
            if (pos == dst.end()) throw InternalError("cdga: differential target not in next degree");
            m[static_cast<std::size_t>(pos - dst.begin())][c] += coeff;
        }
    }
    return m;
}

QMatrix FiniteCDGA::multiplication_matrix(const QRow& degree1_coords, int degree) const {
    const auto& ones = degree_indices(1);
    const auto& src = degree_indices(degree);
    const auto& dst = degree_indices(degree + 1);
    QMatrix m(dst.size(), QRow(src.size(), Rational(0)));
    for (std::size_t c = 0; c < src.size(); ++c)
        for (std::size_t j = 0; j < ones.size(); ++j) {
            if (is_zero(degree1_coords[j])) continue;
            auto* terms = product(ones[j], src[c]);
            if (!terms) continue;
            for (auto& [k, coeff] : *terms) {
                auto pos = std::find(dst.begin(), dst.end(), k);
                if (pos == dst.end()) throw InternalError("cdga: product target out of degree");
                m[static_cast<std::size_t>(pos - dst.begin())][c] += degree1_coords[j] * coeff;
            }
        }
    return m;
}

FiniteCDGA::Cohomology FiniteCDGA::cohomology(int degree) const {
    QMatrix d_here = differential_matrix(degree);
    QMatrix d_prev = differential_matrix(degree - 1);
    int ci = dim(degree);
    if (ci == 0) return {0, {}};
    int rank_here = d_here.empty() || d_here[0].empty() ? 0 : rank_q(d_here);
    int rank_prev = d_prev.empty() || d_prev[0].empty() ? 0 : rank_q(d_prev);
    int b = ci - rank_here - rank_prev;

    // Representatives: cocycles modulo the image, picked from the RREF
    // completion of the image basis inside the cocycle space.
    std::vector<QRow> cocycles;
    if (d_here.empty() || d_here[0].empty()) {
        for (int i = 0; i < ci; ++i) {
            QRow e(static_cast<std::size_t>(ci), Rational(0));
            e[static_cast<std::size_t>(i)] = Rational(1);
            cocycles.push_back(std::move(e));
        }
    } else {
        cocycles = nullspace(d_here);
    }
    QMatrix image_rows;
    if (!d_prev.empty() && !d_prev[0].empty()) {
        for (std::size_t c = 0; c < d_prev[0].size(); ++c) {
            QRow col(d_prev.size());
            for (std::size_t r = 0; r < d_prev.size(); ++r) col[r] = d_prev[r][c];
            image_rows.push_back(std::move(col));
        }
    }
    std::vector<QRow> reps;
    QMatrix span = image_rows;
    auto pivots = rref(span);
    for (auto& z : cocycles) {
        if (static_cast<int>(reps.size()) == b) break;
        if (row_in_span(span, pivots, z)) continue;
        reps.push_back(z);
        span.push_back(z);
        pivots = rref(span);
    }
    if (static_cast<int>(reps.size()) != b) throw InternalError("cdga: cohomology basis extraction failed");
    return {b, reps};
}

std::vector<QRow> FiniteCDGA::h1_basis() const {
    QMatrix d1 = differential_matrix(1);
    int c1 = dim(1);
    if (c1 == 0) return {};
    if (d1.empty() || d1[0].empty()) {
        std::vector<QRow> id;
        for (int i = 0; i < c1; ++i) {
            QRow e(static_cast<std::size_t>(c1), Rational(0));
            e[static_cast<std::size_t>(i)] = Rational(1);
            id.push_back(std::move(e));
        }
        return id;
    }
    return nullspace(d1);
}

FiniteCDGA FiniteCDGA::exterior(const std::vector<std::string>& generators,
                                const std::map<std::string, std::string>& differential_on_generators) {
    int g = static_cast<int>(generators.size());
    // Basis per subset, ordered by (popcount, numeric value).
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 0; s < (1u << g); ++s) subsets.push_back(s);
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::map<std::uint32_t, int> index_of;
    std::vector<BasisElement> basis;
    for (auto s : subsets) {
        std::string name;
        for (int i = 0; i < g; ++i)
            if (s & (1u << i)) name += generators[static_cast<std::size_t>(i)];
        if (name.empty()) name = "1";
        index_of[s] = static_cast<int>(basis.size());
        basis.push_back({name, __builtin_popcount(s)});
    }

    auto wedge_sign = [](std::uint32_t a, std::uint32_t b) -> int {
        if (a & b) return 0;
        int sign = 1;
        for (int i = 0; i < 32; ++i) {
            if (!(b & (1u << i))) continue;
            std::uint32_t higher = a >> (i + 1);
            if (__builtin_popcount(higher) % 2) sign = -sign;
        }
        return sign;
    };

    StructureMap products;
    for (auto a : subsets)
        for (auto b : subsets) {
            int s = wedge_sign(a, b);
            if (s != 0) products[{index_of[a], index_of[b]}].emplace_back(index_of[a | b], Rational(s));
        }

    // Differential on generators, extended to all basis monomials by Leibniz.
    std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Rational>>> d_subsets;
    for (auto& [gen, target] : differential_on_generators) {
        auto gi = std::find(generators.begin(), generators.end(), gen);
        if (gi == generators.end()) throw ValidationError("exterior: unknown generator " + gen);
        std::uint32_t tmask = 0;
        for (char ch : target) {
            auto ti = std::find(generators.begin(), generators.end(), std::string(1, ch));
            if (ti == generators.end()) throw ValidationError("exterior: unknown target letter");
            tmask |= 1u << (ti - generators.begin());
        }
        d_subsets[1u << (gi - generators.begin())].emplace_back(tmask, Rational(1));
    }
    DiffMap differential;
    for (auto s : subsets) {
        std::vector<std::pair<int, Rational>> image;
        for (int i = 0; i < g; ++i) {
            if (!(s & (1u << i))) continue;
            auto it = d_subsets.find(1u << i);
            if (it == d_subsets.end()) continue;
            // sign: number of generators before position i in s
            int before = __builtin_popcount(s & ((1u << i) - 1));
            int sgn_leibniz = before % 2 ? -1 : 1;
            std::uint32_t rest = s & ~(1u << i);
            for (auto& [tmask, c] : it->second) {
                if (tmask & rest) continue;  // wedge collapses
                int ws = wedge_sign(tmask, rest);
                // d(x_i) ∧ rest, with d(x_i) moved into place.
                if (ws != 0)
                    image.emplace_back(index_of[tmask | rest], c * Rational(sgn_leibniz * ws));
            }
        }
        if (!image.empty()) differential[index_of[s]] = combine_terms(std::move(image));
    }
    return create(std::move(basis), std::move(products), std::move(differential));
}

UniversalComplex universal_complex(const FiniteCDGA& a) {
    auto h1 = a.h1_basis();
    int n = static_cast<int>(h1.size());
    UniversalComplex uc;
    uc.n = n;
    for (int d = 0; d <= a.top_degree(); ++d) {
        const auto& src = a.degree_indices(d);
        const auto& dst = a.degree_indices(d + 1);
        PolyMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()), n);
        QMatrix dmat = a.differential_matrix(d);
        for (int j = 0; j < n; ++j) {
            QMatrix mult = a.multiplication_matrix(h1[static_cast<std::size_t>(j)], d);
            for (std::size_t c = 0; c < src.size(); ++c)
                for (std::size_t r = 0; r < dst.size(); ++r)
                    if (!is_zero(mult[r][c]))
                        m.at(static_cast<int>(r), static_cast<int>(c))
                            .add_term(Monomial::unit_var(n, j), mult[r][c]);
        }
        for (std::size_t c = 0; c < src.size(); ++c)
            for (std::size_t r = 0; r < dst.size(); ++r)
                if (!dmat.empty() && !is_zero(dmat[r][c]))
                    m.at(static_cast<int>(r), static_cast<int>(c)).add_term(Monomial(n), dmat[r][c]);
        uc.delta.push_back(std::move(m));
    }
    // Consecutive differentials compose to zero over S.
    for (std::size_t i = 0; i + 1 < uc.delta.size(); ++i) {
        const PolyMatrix& d0 = uc.delta[i];
        const PolyMatrix& d1 = uc.delta[i + 1];
        for (int r = 0; r < d1.rows; ++r)
            for (int c = 0; c < d0.cols; ++c) {
                LaurentPoly acc(n);
                for (int m2 = 0; m2 < d0.rows; ++m2) acc = acc + d1.at(r, m2) * d0.at(m2, c);
                if (!acc.is_zero_poly()) throw InternalError("universal complex: δ∘δ != 0");
            }
    }
    return uc;
}

VarietyDescription resonance(const FiniteCDGA& a, int degree, int depth) {
    if (degree < 0 || degree > a.top_degree())
        throw ValidationError("resonance: degree out of range");
    if (depth < 0) throw ValidationError("resonance: depth must be >= 0");
    auto uc = universal_complex(a);
    int n = uc.n;
    if (depth == 0) return VarietyDescription::full(Ambient::affine, n);

    int ci = a.dim(degree);
    int size = ci - depth + 1;
    if (size <= 0) return VarietyDescription::empty(Ambient::affine, n);

    const PolyMatrix* dh = degree < static_cast<int>(uc.delta.size()) ? &uc.delta[degree] : nullptr;
    const PolyMatrix* dp = degree >= 1 ? &uc.delta[degree - 1] : nullptr;
    int rows = (dh ? dh->rows : 0) + (dp ? dp->rows : 0);
    int cols = (dh ? dh->cols : 0) + (dp ? dp->cols : 0);
    PolyMatrix block(rows, cols, n);
    int r0 = 0, c0 = 0;
    if (dh) {
        for (int r = 0; r < dh->rows; ++r)
            for (int c = 0; c < dh->cols; ++c) block.at(r, c) = dh->at(r, c);
        r0 = dh->rows;
        c0 = dh->cols;
    }
    if (dp)
        for (int r = 0; r < dp->rows; ++r)
            for (int c = 0; c < dp->cols; ++c) block.at(r0 + r, c0 + c) = dp->at(r, c);

    if (size > std::min(rows, cols))
        return VarietyDescription::full(Ambient::affine, n);  // rank can never reach c_i - depth + 1
    VarietyDescription v =
        VarietyDescription::hypersurface(Ambient::affine, n, minors_ideal(block, size));
    v.simplify();
    return v;
}

}  // namespace jumploci
