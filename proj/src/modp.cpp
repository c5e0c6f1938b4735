#include "jumploci/modp.hpp"

#include <algorithm>
#include <cmath>

namespace jumploci {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

struct CompiledTerm {
    std::uint64_t coeff;
    std::vector<std::uint32_t> exps;  // reduced mod (p-1) on the torus
};

struct CompiledPoly {
    std::vector<CompiledTerm> terms;
};

// nullopt when the prime divides a denominator (prime unusable).
std::optional<std::uint64_t> to_fp(const Rational& q, std::uint64_t p) {
    Integer den = q.get_den() % p;
    if (sgn(den) == 0) return std::nullopt;
    Integer num = q.get_num() % p;
    std::uint64_t n = mpz_class(num + p).get_ui() % p;
    std::uint64_t d = mpz_class(den + p).get_ui() % p;
    return n * pow_mod(d, p - 2, p) % p;
}

std::optional<CompiledPoly> compile_poly(const LaurentPoly& f, std::uint64_t p, bool torus) {
    CompiledPoly out;
    for (auto& [m, c] : f.terms()) {
        auto cf = to_fp(c, p);
        if (!cf) return std::nullopt;
        CompiledTerm t{*cf, {}};
        t.exps.reserve(m.e.size());
        for (auto e : m.e) {
            if (torus) {
                std::int64_t r = e % static_cast<std::int64_t>(p - 1);
                if (r < 0) r += static_cast<std::int64_t>(p - 1);
                t.exps.push_back(static_cast<std::uint32_t>(r));
            } else {
                if (e < 0) return std::nullopt;  // affine data must be polynomial
                // Keep exponents positive so 0^e stays 0: x^e = x^{(e-1) mod (p-1) + 1}.
                std::uint32_t red =
                    e == 0 ? 0 : static_cast<std::uint32_t>((e - 1) % static_cast<std::int64_t>(p - 1) + 1);
                t.exps.push_back(red);
            }
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

struct CompiledComponent {
    enum Kind { full, identity, polys_all_zero, linear, subtorus } kind;
    std::vector<CompiledPoly> polys;                                   // hypersurface / rootset
    std::vector<std::vector<std::uint64_t>> linear_rows;               // linear equations
    std::vector<std::pair<std::vector<std::int64_t>, std::uint64_t>> char_eqs;  // subtorus
};

struct CompiledVariety {
    bool torus;
    int n;
    bool identity_excluded;
    std::vector<CompiledComponent> comps;
    std::uint64_t p;

    bool member(const std::vector<std::uint64_t>& pt,
                const std::vector<std::vector<std::uint64_t>>& pows) const {
        bool is_id = true;
        std::uint64_t idval = torus ? 1 : 0;
        for (auto x : pt)
            if (x != idval) {
                is_id = false;
                break;
            }
        if (is_id && identity_excluded) return false;
        for (auto& c : comps) {
            switch (c.kind) {
                case CompiledComponent::full:
                    return true;
                case CompiledComponent::identity:
                    if (is_id) return true;
                    break;
                case CompiledComponent::polys_all_zero: {
                    bool all0 = true;
                    for (auto& f : c.polys) {
                        std::uint64_t acc = 0;
                        for (auto& t : f.terms) {
                            std::uint64_t prod = t.coeff;
                            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                                if (t.exps[i] == 0) continue;
                                std::uint64_t xe = pows[i][t.exps[i]];
                                if (xe == 0) {
                                    prod = 0;
                                    break;
                                }
                                prod = prod * xe % p;
                            }
                            acc = (acc + prod) % p;
                        }
                        if (acc != 0) {
                            all0 = false;
                            break;
                        }
                    }
                    if (all0) return true;
                    break;
                }
                case CompiledComponent::linear: {
                    bool all0 = true;
                    for (auto& row : c.linear_rows) {
                        std::uint64_t acc = 0;
                        for (std::size_t i = 0; i < row.size(); ++i)
                            acc = (acc + row[i] * pt[i]) % p;
                        if (acc != 0) {
                            all0 = false;
                            break;
                        }
                    }
                    if (all0) return true;
                    break;
                }
                case CompiledComponent::subtorus: {
                    bool all = true;
                    for (auto& [a, val] : c.char_eqs) {
                        std::uint64_t acc = 1;
                        for (std::size_t i = 0; i < a.size(); ++i) {
                            if (a[i] == 0) continue;
                            std::int64_t r = a[i] % static_cast<std::int64_t>(p - 1);
                            if (r < 0) r += static_cast<std::int64_t>(p - 1);
                            acc = acc * pows[i][static_cast<std::size_t>(r)] % p;
                        }
                        if (acc != val) {
                            all = false;
                            break;
                        }
                    }
                    if (all) return true;
                    break;
                }
            }
        }
        return false;
    }
};

std::optional<CompiledVariety> compile_variety(const VarietyDescription& v, std::uint64_t p) {
    CompiledVariety cv;
    cv.torus = v.ambient == Ambient::torus;
    cv.n = v.nvars;
    cv.identity_excluded = v.identity_excluded;
    cv.p = p;
    for (auto& c : v.components) {
        CompiledComponent cc;
        if (std::holds_alternative<CompEmpty>(c)) continue;
        if (std::holds_alternative<CompFull>(c)) {
            cc.kind = CompiledComponent::full;
        } else if (std::holds_alternative<CompIdentity>(c)) {
            cc.kind = CompiledComponent::identity;
        } else if (auto* h = std::get_if<CompHypersurface>(&c)) {
            cc.kind = CompiledComponent::polys_all_zero;
            for (auto& g : h->ideal.gens) {
                auto cp = compile_poly(g, p, cv.torus);
                if (!cp) return std::nullopt;
                cc.polys.push_back(std::move(*cp));
            }
        } else if (auto* l = std::get_if<CompLinear>(&c)) {
            cc.kind = CompiledComponent::linear;
            for (auto& row : l->space.eqs) {
                std::vector<std::uint64_t> r;
                for (auto& q : row) {
                    auto f = to_fp(q, p);
                    if (!f) return std::nullopt;
                    r.push_back(*f);
                }
                cc.linear_rows.push_back(std::move(r));
            }
        } else if (auto* s = std::get_if<CompSubtorus>(&c)) {
            cc.kind = CompiledComponent::subtorus;
            for (auto& [a, val] : s->eqs)
                cc.char_eqs.emplace_back(a, val == 1 ? 1 : p - 1);
        } else if (auto* r = std::get_if<CompRootSet>(&c)) {
            cc.kind = CompiledComponent::polys_all_zero;
            // The root set is the zero locus of the product of the factors.
            for (auto& [f, mult] : r->factors) {
                (void)mult;
                auto cp = compile_poly(f, p, cv.torus);
                if (!cp) return std::nullopt;
                cc.polys.push_back(std::move(*cp));
            }
            // Union over factors, not intersection: emit one component each.
            for (auto& one : cc.polys) {
                CompiledComponent single;
                single.kind = CompiledComponent::polys_all_zero;
                single.polys.push_back(one);
                cv.comps.push_back(std::move(single));
            }
            continue;
        }
        cv.comps.push_back(std::move(cc));
    }
    return cv;
}

// Enumerates the point grid and applies `check`; returns false + witness via
// out-params when check fails somewhere.
template <class Check>
bool scan_points(bool torus, int n, std::uint64_t p, Check&& check, std::vector<std::uint64_t>& witness) {
    std::uint64_t lo = torus ? 1 : 0;
    std::vector<std::uint64_t> pt(static_cast<std::size_t>(n), lo);
    std::vector<std::vector<std::uint64_t>> pows(static_cast<std::size_t>(n));
    auto fill_pows = [&](std::size_t i) {
        auto& tab = pows[i];
        tab.assign(p, 0);
        tab[0] = 1;
        for (std::size_t e = 1; e < p; ++e) tab[e] = tab[e - 1] * pt[i] % p;
    };
    for (std::size_t i = 0; i < pt.size(); ++i) fill_pows(i);
    if (n == 0) {
        if (!check(pt, pows)) {
            witness = pt;
            return false;
        }
        return true;
    }
    for (;;) {
        if (!check(pt, pows)) {
            witness = pt;
            return false;
        }
        int i = n - 1;
        while (i >= 0) {
            ++pt[static_cast<std::size_t>(i)];
            if (pt[static_cast<std::size_t>(i)] < p) {
                fill_pows(static_cast<std::size_t>(i));
                break;
            }
            pt[static_cast<std::size_t>(i)] = lo;
            fill_pows(static_cast<std::size_t>(i));
            --i;
        }
        if (i < 0) return true;
    }
}

OracleReport run_oracle(const VarietyDescription& a, const VarietyDescription& b,
                        const std::vector<unsigned>& primes, std::uint64_t point_budget,
                        bool containment_only) {
    if (a.nvars != b.nvars || a.ambient != b.ambient)
        throw ValidationError("mod-p oracle: ambient mismatch");
    OracleReport rep;
    int n = a.nvars;
    for (unsigned p : primes) {
        double count = std::pow(a.ambient == Ambient::torus ? double(p - 1) : double(p), n);
        if (count > static_cast<double>(point_budget))
            throw BudgetError("mod-p oracle: (p-1)^n exceeds the point budget for p=" + std::to_string(p));
        auto ca = compile_variety(a, p);
        auto cb = compile_variety(b, p);
        if (!ca || !cb) {
            rep.note += "prime " + std::to_string(p) + " unusable; ";
            continue;
        }
        std::vector<std::uint64_t> witness;
        bool ok = scan_points(
            a.ambient == Ambient::torus, n, p,
            [&](const std::vector<std::uint64_t>& pt, const std::vector<std::vector<std::uint64_t>>& pows) {
                bool ma = ca->member(pt, pows);
                bool mb = cb->member(pt, pows);
                return containment_only ? (!ma || mb) : (ma == mb);
            },
            witness);
        if (!ok) {
            rep.outcome = OracleOutcome::differ;
            rep.witness = std::move(witness);
            rep.witness_prime = p;
            rep.primes_used.push_back(p);
            return rep;
        }
        rep.primes_used.push_back(p);
    }
    rep.outcome = rep.primes_used.empty() ? OracleOutcome::inconclusive : OracleOutcome::equal;
    return rep;
}

}  // namespace

OracleReport varieties_equal_mod_p(const VarietyDescription& a, const VarietyDescription& b,
                                   const std::vector<unsigned>& primes, std::uint64_t point_budget) {
    return run_oracle(a, b, primes, point_budget, false);
}

OracleReport variety_contained_mod_p(const VarietyDescription& a, const VarietyDescription& b,
                                     const std::vector<unsigned>& primes, std::uint64_t point_budget) {
    return run_oracle(a, b, primes, point_budget, true);
}

}  // namespace jumploci
