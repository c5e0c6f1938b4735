#include "jumploci/tangent_cone.hpp"

#include <algorithm>

namespace jumploci {

namespace {

Component origin_component() { return CompIdentity{}; }

void keep_maximal(std::vector<LinearSubspace>& spaces) {
    std::vector<bool> drop(spaces.size(), false);
    for (std::size_t i = 0; i < spaces.size(); ++i)
        for (std::size_t j = 0; j < spaces.size(); ++j) {
            if (i == j || drop[i] || drop[j]) continue;
            if (spaces[i].contained_in(spaces[j]) && !(spaces[i] == spaces[j])) drop[i] = true;
        }
    std::vector<LinearSubspace> kept;
    for (std::size_t i = 0; i < spaces.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(spaces[i]));
    spaces = std::move(kept);
}

struct PartitionScan {
    const std::vector<Monomial>& support;
    const std::vector<Rational>& coeff;
    int nvars;
    QMatrix eqs;  // constraint rows accumulated along the current branch
    std::vector<LinearSubspace> maximal;

    void insert_maximal(LinearSubspace s) {
        for (auto& m : maximal)
            if (s.contained_in(m)) return;
        std::erase_if(maximal, [&](const LinearSubspace& m) { return m.contained_in(s); });
        maximal.push_back(std::move(s));
    }

    // A branch whose constraints already confine it inside a known maximal
    // subspace can only shrink further: prune it.
    bool branch_redundant() const {
        if (maximal.empty()) return false;
        LinearSubspace cur = LinearSubspace::from_equations(nvars, eqs);
        for (auto& m : maximal)
            if (cur.contained_in(m)) return true;
        return false;
    }

    void rec(const std::vector<int>& remaining) {
        if (remaining.empty()) {
            insert_maximal(LinearSubspace::from_equations(nvars, eqs));
            return;
        }
        int head = remaining[0];
        std::vector<int> rest(remaining.begin() + 1, remaining.end());
        std::size_t k = rest.size();
        // Blocks have at least two members, so the head needs company.
        for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
            Rational sum = coeff[static_cast<std::size_t>(head)];
            std::vector<int> next;
            for (std::size_t t = 0; t < k; ++t) {
                if (bits & (std::uint64_t{1} << t))
                    sum += coeff[static_cast<std::size_t>(rest[t])];
                else
                    next.push_back(rest[t]);
            }
            if (!is_zero(sum)) continue;
            const Monomial& base = support[static_cast<std::size_t>(head)];
            std::size_t pushed = 0;
            for (std::size_t t = 0; t < k; ++t) {
                if (!(bits & (std::uint64_t{1} << t))) continue;
                const Monomial& other = support[static_cast<std::size_t>(rest[t])];
                QRow row;
                row.reserve(static_cast<std::size_t>(nvars));
                for (int i = 0; i < nvars; ++i)
                    row.push_back(Rational(static_cast<long>(other.e[i] - base.e[i])));
                eqs.push_back(std::move(row));
                ++pushed;
            }
            if (!branch_redundant()) rec(next);
            eqs.resize(eqs.size() - pushed);
        }
    }
};

}  // namespace

std::vector<LinearSubspace> exponential_tangent_cone_subspaces(const LaurentPoly& f,
                                                               std::size_t support_cap) {
    if (f.support_size() > support_cap)
        throw BudgetError("exponential_tangent_cone: support size " + std::to_string(f.support_size()) +
                          " exceeds cap " + std::to_string(support_cap));
    std::vector<Monomial> support;
    std::vector<Rational> coeff;
    for (auto& [m, c] : f.terms()) {
        support.push_back(m);
        coeff.push_back(c);
    }
    PartitionScan scan{support, coeff, f.nvars(), {}, {}};
    std::vector<int> all(support.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    scan.rec(all);

    std::sort(scan.maximal.begin(), scan.maximal.end(),
              [](const LinearSubspace& a, const LinearSubspace& b) { return a.eqs < b.eqs; });
    return scan.maximal;
}

VarietyDescription tangent_cone_hypersurface(const LaurentPoly& f, bool includes_identity_extra) {
    if (f.is_zero_poly())
        throw ValidationError("tangent_cone_hypersurface: zero polynomial rejected (full ambient case)");
    int n = f.nvars();
    std::vector<Rational> one(static_cast<std::size_t>(n), Rational(1));
    bool vanishes_at_identity = is_zero(f.evaluate_rational(one));
    VarietyDescription v = VarietyDescription::empty(Ambient::affine, n);
    if (vanishes_at_identity) {
        LaurentPoly init = initial_form(shift_to_origin(clear_to_poly(f)));
        v.add(CompHypersurface{Ideal(n, {init})});
    } else if (includes_identity_extra) {
        v.add(origin_component());
    }
    v.simplify();
    return v;
}

VarietyDescription exponential_tangent_cone(const LaurentPoly& f, bool includes_identity_extra,
                                            std::size_t support_cap) {
    int n = f.nvars();
    if (f.is_zero_poly()) return VarietyDescription::full(Ambient::affine, n);
    auto spaces = exponential_tangent_cone_subspaces(f, support_cap);
    VarietyDescription v = VarietyDescription::empty(Ambient::affine, n);
    for (auto& s : spaces) {
        if (s.is_origin())
            v.add(origin_component());
        else
            v.add(CompLinear{std::move(s)});
    }
    std::vector<Rational> one(static_cast<std::size_t>(n), Rational(1));
    if (includes_identity_extra || is_zero(f.evaluate_rational(one)))
        if (v.is_empty_description()) v.add(origin_component());
    v.simplify();
    return v;
}

VarietyDescription exponential_tangent_cone(const Ideal& ideal, bool includes_identity_extra,
                                            std::size_t support_cap) {
    int n = ideal.nvars;
    if (ideal.is_zero_ideal()) return VarietyDescription::full(Ambient::affine, n);

    bool first = true;
    std::vector<LinearSubspace> acc;
    for (auto& g : ideal.gens) {
        auto spaces = exponential_tangent_cone_subspaces(g, support_cap);
        if (first) {
            acc = std::move(spaces);
            first = false;
        } else {
            std::vector<LinearSubspace> merged;
            for (auto& a : acc)
                for (auto& b : spaces) {
                    LinearSubspace c = a.intersect(b);
                    merged.push_back(std::move(c));
                }
            std::sort(merged.begin(), merged.end(),
                      [](const LinearSubspace& x, const LinearSubspace& y) { return x.eqs < y.eqs; });
            merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
            keep_maximal(merged);
            acc = std::move(merged);
        }
        if (acc.empty()) break;
    }

    VarietyDescription v = VarietyDescription::empty(Ambient::affine, n);
    for (auto& s : acc) {
        if (s.is_origin())
            v.add(origin_component());
        else
            v.add(CompLinear{std::move(s)});
    }
    bool all_vanish_at_identity = true;
    std::vector<Rational> one(static_cast<std::size_t>(n), Rational(1));
    for (auto& g : ideal.gens)
        if (!is_zero(g.evaluate_rational(one))) {
            all_vanish_at_identity = false;
            break;
        }
    if (includes_identity_extra || all_vanish_at_identity)
        if (v.is_empty_description()) v.add(origin_component());
    v.simplify();
    return v;
}

}  // namespace jumploci
