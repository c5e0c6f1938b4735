#include "jumploci/variety.hpp"

#include <algorithm>
#include <sstream>

namespace jumploci {

LinearSubspace LinearSubspace::from_equations(int n, QMatrix raw) {
    LinearSubspace s;
    s.nvars = n;
    s.eqs = canonical_equations(std::move(raw));
    return s;
}

LinearSubspace LinearSubspace::origin(int n) {
    QMatrix eqs;
    for (int i = 0; i < n; ++i) {
        QRow r(n, Rational(0));
        r[i] = Rational(1);
        eqs.push_back(std::move(r));
    }
    return from_equations(n, std::move(eqs));
}

bool LinearSubspace::contained_in(const LinearSubspace& other) const {
    if (other.eqs.empty()) return true;
    QMatrix mine = eqs;
    std::vector<int> pivots = rref(mine);
    for (auto& row : other.eqs)
        if (!row_in_span(mine, pivots, row)) return false;
    return true;
}

QMatrix LinearSubspace::parametrization() const {
    std::vector<QRow> basis = eqs.empty() ? [&] {
        std::vector<QRow> id;
        for (int i = 0; i < nvars; ++i) {
            QRow r(nvars, Rational(0));
            r[i] = Rational(1);
            id.push_back(std::move(r));
        }
        return id;
    }()
                                          : nullspace(eqs);
    QMatrix m(nvars, QRow(basis.size(), Rational(0)));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (int i = 0; i < nvars; ++i) m[i][j] = basis[j][static_cast<std::size_t>(i)];
    return m;
}

LinearSubspace LinearSubspace::intersect(const LinearSubspace& other) const {
    QMatrix all = eqs;
    all.insert(all.end(), other.eqs.begin(), other.eqs.end());
    return from_equations(nvars, std::move(all));
}

bool CompHypersurface::operator==(const CompHypersurface& o) const {
    return ideal.nvars == o.ideal.nvars && ideal.gens == o.ideal.gens;
}

bool CompRootSet::operator==(const CompRootSet& o) const { return factors == o.factors; }

VarietyDescription VarietyDescription::of_subspaces(int n, std::vector<LinearSubspace> spaces) {
    VarietyDescription v{Ambient::affine, n, {}, false};
    for (auto& s : spaces) v.add(CompLinear{std::move(s)});
    v.simplify();
    return v;
}

VarietyDescription VarietyDescription::hypersurface(Ambient a, int n, Ideal ideal) {
    VarietyDescription v{a, n, {}, false};
    if (ideal.is_zero_ideal())
        v.add(CompFull{});
    else if (ideal.is_unit_ideal())
        ;  // empty
    else
        v.add(CompHypersurface{std::move(ideal)});
    return v;
}

bool VarietyDescription::is_full_description() const {
    return !identity_excluded && components.size() == 1 && std::holds_alternative<CompFull>(components[0]);
}

std::vector<LinearSubspace> VarietyDescription::linear_components() const {
    std::vector<LinearSubspace> out;
    for (auto& c : components) {
        if (auto* l = std::get_if<CompLinear>(&c)) out.push_back(l->space);
        if (std::holds_alternative<CompIdentity>(c) && ambient == Ambient::affine)
            out.push_back(LinearSubspace::origin(nvars));
        if (std::holds_alternative<CompFull>(c)) out.push_back(LinearSubspace::full(nvars));
    }
    return out;
}

bool VarietyDescription::all_components_linear_like() const {
    for (auto& c : components)
        if (std::holds_alternative<CompHypersurface>(c) || std::holds_alternative<CompSubtorus>(c) ||
            std::holds_alternative<CompRootSet>(c))
            return false;
    return true;
}

bool VarietyDescription::contains_identity() const {
    if (identity_excluded) return false;
    std::vector<Rational> one(static_cast<std::size_t>(nvars),
                              ambient == Ambient::torus ? Rational(1) : Rational(0));
    for (auto& c : components) {
        if (std::holds_alternative<CompFull>(c)) return true;
        if (std::holds_alternative<CompIdentity>(c)) return true;
        if (auto* h = std::get_if<CompHypersurface>(&c)) {
            bool all0 = true;
            for (auto& g : h->ideal.gens)
                if (!is_zero(g.evaluate_rational(one))) {
                    all0 = false;
                    break;
                }
            if (all0 && !h->ideal.gens.empty()) return true;
        }
        if (auto* l = std::get_if<CompLinear>(&c)) {
            (void)l;
            if (ambient == Ambient::affine) return true;  // subspaces pass through 0
        }
        if (auto* s = std::get_if<CompSubtorus>(&c)) {
            bool all = true;
            for (auto& [a, val] : s->eqs)
                if (val != 1) all = false;
            if (all) return true;
        }
        if (auto* r = std::get_if<CompRootSet>(&c)) {
            std::vector<Rational> pt{Rational(1)};
            for (auto& [f, mult] : r->factors)
                if (is_zero(f.evaluate_rational(pt))) return true;
        }
    }
    return false;
}

namespace {

std::string subspace_key(const LinearSubspace& s) {
    std::ostringstream os;
    for (auto& row : s.eqs) {
        for (auto& q : row) os << q.get_str() << ",";
        os << ";";
    }
    return os.str();
}

std::string component_key(const Component& c) {
    std::ostringstream os;
    os << c.index() << "|";
    if (auto* h = std::get_if<CompHypersurface>(&c)) {
        for (auto& g : h->ideal.gens) {
            for (auto& [m, k] : g.terms()) {
                for (auto e : m.e) os << e << ".";
                os << ":" << k.get_str() << ",";
            }
            os << ";";
        }
    } else if (auto* l = std::get_if<CompLinear>(&c)) {
        os << subspace_key(l->space);
    } else if (auto* s = std::get_if<CompSubtorus>(&c)) {
        for (auto& [a, v] : s->eqs) {
            for (auto e : a) os << e << ".";
            os << "=" << v << ";";
        }
    } else if (auto* r = std::get_if<CompRootSet>(&c)) {
        for (auto& [f, mult] : r->factors) {
            for (auto& [m, k] : f.terms()) os << m.e[0] << ":" << k.get_str() << ",";
            os << "^" << mult << ";";
        }
    }
    return os.str();
}

}  // namespace

void VarietyDescription::simplify() {
    std::vector<Component> kept;
    bool full = false;
    for (auto& c : components) {
        if (std::holds_alternative<CompEmpty>(c)) continue;
        if (std::holds_alternative<CompFull>(c)) full = true;
        if (auto* h = std::get_if<CompHypersurface>(&c)) {
            if (h->ideal.is_unit_ideal()) continue;
            if (h->ideal.is_zero_ideal()) {
                full = true;
                continue;
            }
        }
        kept.push_back(std::move(c));
    }
    if (full && !identity_excluded) {
        components = {CompFull{}};
        return;
    }
    // Dedupe by canonical key.
    std::sort(kept.begin(), kept.end(), [](const Component& a, const Component& b) {
        return component_key(a) < component_key(b);
    });
    kept.erase(std::unique(kept.begin(), kept.end(),
                           [](const Component& a, const Component& b) {
                               return component_key(a) == component_key(b);
                           }),
               kept.end());
    // Drop components certifiably inside a single other component.
    std::vector<bool> drop(kept.size(), false);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = 0; j < kept.size() && !drop[i]; ++j) {
            if (i == j || drop[j]) continue;
            const Component &a = kept[i], &b = kept[j];
            if (auto* la = std::get_if<CompLinear>(&a)) {
                if (auto* lb = std::get_if<CompLinear>(&b)) {
                    if (la->space.contained_in(lb->space)) drop[i] = true;
                } else if (std::holds_alternative<CompHypersurface>(b) && ambient == Ambient::affine) {
                    VarietyDescription single{ambient, nvars, {b}, false};
                    if (subspace_in_variety(la->space, single)) drop[i] = true;
                }
            } else if (std::holds_alternative<CompIdentity>(a)) {
                VarietyDescription single{ambient, nvars, {b}, false};
                if (single.contains_identity()) drop[i] = true;
            }
        }
    }
    components.clear();
    for (std::size_t i = 0; i < kept.size(); ++i)
        if (!drop[i]) components.push_back(std::move(kept[i]));
}

int VarietyDescription::dim_upper_bound() const {
    int d = -1;
    for (auto& c : components) {
        if (std::holds_alternative<CompFull>(c)) d = std::max(d, nvars);
        else if (std::holds_alternative<CompIdentity>(c)) d = std::max(d, 0);
        else if (auto* l = std::get_if<CompLinear>(&c)) d = std::max(d, l->space.dim());
        else if (std::get_if<CompHypersurface>(&c)) d = std::max(d, nvars - 1);
        else if (auto* s = std::get_if<CompSubtorus>(&c))
            d = std::max(d, nvars - static_cast<int>(s->eqs.size()));
        else if (std::get_if<CompRootSet>(&c)) d = std::max(d, 0);
    }
    return d;
}

std::optional<int> VarietyDescription::dim_exact() const {
    int d = -1;
    for (auto& c : components) {
        if (std::holds_alternative<CompFull>(c)) d = std::max(d, nvars);
        else if (std::holds_alternative<CompIdentity>(c)) d = std::max(d, 0);
        else if (auto* l = std::get_if<CompLinear>(&c)) d = std::max(d, l->space.dim());
        else if (auto* h = std::get_if<CompHypersurface>(&c)) {
            // A principal proper ideal has pure codimension 1.
            if (h->ideal.gens.size() == 1 && !h->ideal.gens[0].is_constant()) d = std::max(d, nvars - 1);
            else return std::nullopt;
        } else if (std::get_if<CompRootSet>(&c)) d = std::max(d, 0);
        else return std::nullopt;
    }
    return d;
}

bool subspace_in_variety(const LinearSubspace& l, const VarietyDescription& v) {
    if (l.nvars != v.nvars) throw ValidationError("subspace_in_variety: ambient dimension mismatch");
    QMatrix param;
    bool have_param = false;
    for (auto& c : v.components) {
        if (std::holds_alternative<CompFull>(c)) return true;
        if (std::holds_alternative<CompIdentity>(c)) {
            if (v.ambient == Ambient::affine && l.is_origin()) return true;
            continue;
        }
        if (auto* lc = std::get_if<CompLinear>(&c)) {
            if (l.contained_in(lc->space)) return true;
            continue;
        }
        if (auto* h = std::get_if<CompHypersurface>(&c)) {
            if (!have_param) {
                param = l.parametrization();
                have_param = true;
            }
            bool all0 = true;
            for (auto& g : h->ideal.gens) {
                require_polynomial(g, "subspace_in_variety");
                if (!substitute_linear(g, param).is_zero_poly()) {
                    all0 = false;
                    break;
                }
            }
            if (all0 && !h->ideal.gens.empty()) return true;
            continue;
        }
    }
    return false;
}

std::optional<bool> equal_as_subspace_unions(const VarietyDescription& a, const VarietyDescription& b) {
    if (!a.all_components_linear_like() || !b.all_components_linear_like()) return std::nullopt;
    if (a.identity_excluded || b.identity_excluded) return std::nullopt;
    auto la = a.linear_components();
    auto lb = b.linear_components();
    if (a.ambient == Ambient::torus || b.ambient == Ambient::torus) return std::nullopt;
    bool a_has_id = a.contains_identity(), b_has_id = b.contains_identity();
    if (a_has_id) la.push_back(LinearSubspace::origin(a.nvars));
    if (b_has_id) lb.push_back(LinearSubspace::origin(b.nvars));
    auto contained = [](const std::vector<LinearSubspace>& xs, const std::vector<LinearSubspace>& ys) {
        for (auto& x : xs) {
            bool in = false;
            for (auto& y : ys)
                if (x.contained_in(y)) {
                    in = true;
                    break;
                }
            if (!in) return false;
        }
        return true;
    };
    return contained(la, lb) && contained(lb, la);
}

std::string component_kind_name(const Component& c) {
    if (std::holds_alternative<CompEmpty>(c)) return "empty";
    if (std::holds_alternative<CompFull>(c)) return "full";
    if (std::holds_alternative<CompIdentity>(c)) return "identity";
    if (std::holds_alternative<CompHypersurface>(c)) return "hypersurface";
    if (std::holds_alternative<CompLinear>(c)) return "linear";
    if (std::holds_alternative<CompSubtorus>(c)) return "subtorus";
    return "rootset";
}

}  // namespace jumploci
