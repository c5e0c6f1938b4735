#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace jumploci {

// Exponent vector of a (Laurent) monomial. Negative exponents are legal in
// Laurent context. Length always equals the ambient variable count.
struct Monomial {
    std::vector<std::int64_t> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::int64_t> exps) : e(std::move(exps)) {}

    static Monomial unit_var(int nvars, int i) {
        Monomial m(nvars);
        m.e[i] = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }

    std::int64_t total_degree() const { return std::accumulate(e.begin(), e.end(), std::int64_t{0}); }

    bool is_one() const {
        for (auto x : e)
            if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    Monomial inverse() const {
        Monomial r(*this);
        for (auto& x : r.e) x = -x;
        return r;
    }

    bool operator==(const Monomial& o) const = default;
};

// The one global monomial order: total degree, ties broken lexicographically
// with earlier variables weighing more. A strict total order on each ambient.
inline int monomial_cmp(const Monomial& a, const Monomial& b) {
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_cmp(a, b) < 0; }
};

}  // namespace jumploci
