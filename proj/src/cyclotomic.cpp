#include "jumploci/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace jumploci {

namespace {

using UniPoly = std::vector<Rational>;  // dense, low-to-high

void trim_uni(UniPoly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim_uni(r);
    return r;
}

// quotient of exact division (throws if not exact)
UniPoly uni_div_exact(UniPoly num, const UniPoly& den) {
    UniPoly q(num.size(), Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        std::size_t shift = num.size() - den.size();
        Rational f = num.back() / den.back();
        q[shift] = f;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        trim_uni(num);
    }
    if (!num.empty()) throw InternalError("cyclotomic: division not exact");
    trim_uni(q);
    return q;
}

UniPoly uni_rem(UniPoly a, const UniPoly& m) {
    while (a.size() >= m.size() && !a.empty()) {
        std::size_t shift = a.size() - m.size();
        Rational f = a.back() / m.back();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= f * m[i];
        trim_uni(a);
    }
    return a;
}

UniPoly cyclotomic_polynomial(int m) {
    // (u^m - 1) / prod_{d | m, d < m} Phi_d
    UniPoly num(static_cast<std::size_t>(m) + 1, Rational(0));
    num[0] = Rational(-1);
    num[static_cast<std::size_t>(m)] = Rational(1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) num = uni_div_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

}  // namespace

std::shared_ptr<const CycloField> CycloField::get(int order) {
    static std::map<int, std::shared_ptr<const CycloField>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    if (order < 1) throw ValidationError("cyclotomic order must be positive");
    auto f = std::make_shared<CycloField>();
    f->order = order;
    f->modulus = cyclotomic_polynomial(order);
    cache[order] = f;
    return f;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const CycloField> f, std::vector<Rational> coeffs)
    : fld_(std::move(f)), c_(std::move(coeffs)) {
    normalize();
}

Cyclotomic Cyclotomic::root_power(const std::shared_ptr<const CycloField>& f, long k) {
    long m = f->order;
    long r = ((k % m) + m) % m;
    std::vector<Rational> c(static_cast<std::size_t>(r) + 1, Rational(0));
    c[static_cast<std::size_t>(r)] = Rational(1);
    return Cyclotomic(f, std::move(c));
}

void Cyclotomic::normalize() {
    if (fld_ && c_.size() >= fld_->modulus.size()) c_ = uni_rem(std::move(c_), fld_->modulus);
    trim_uni(c_);
    if (c_.size() <= 1 && fld_ && fld_->degree() <= 1) fld_.reset();  // Q itself
}

namespace {

const std::shared_ptr<const CycloField>& join_fields(const std::shared_ptr<const CycloField>& a,
                                                     const std::shared_ptr<const CycloField>& b) {
    if (!a) return b;
    if (!b) return a;
    if (a->order != b->order) throw ValidationError("cyclotomic: mixed field orders");
    return a;
}

}  // namespace

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    auto f = join_fields(fld_, o.fld_);
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Cyclotomic(f, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& q : c) q = Rational(-q);
    return Cyclotomic(fld_, std::move(c));
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    auto f = join_fields(fld_, o.fld_);
    return Cyclotomic(f, uni_mul(c_, o.c_));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (fld_ && o.fld_ && fld_->order != o.fld_->order) return false;
    return c_ == o.c_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (c_.empty()) throw ValidationError("cyclotomic: division by zero");
    if (!fld_ || c_.size() == 1) {
        if (is_rational()) return Cyclotomic(fld_, {Rational(1) / c_[0]});
    }
    // Extended Euclid in Q[u] against the modulus.
    UniPoly r0 = fld_->modulus, r1 = c_;
    UniPoly s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        // r0 = q r1 + r
        UniPoly q(r0.size(), Rational(0));
        UniPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::size_t shift = rem.size() - r1.size();
            Rational f = rem.back() / r1.back();
            q[shift] += f;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
            trim_uni(rem);
        }
        trim_uni(q);
        UniPoly s2 = s0;
        UniPoly qs1 = uni_mul(q, s1);
        s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        trim_uni(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd; modulus is irreducible over Q so r0 is a nonzero constant.
    if (r0.size() != 1) throw InternalError("cyclotomic: modulus not coprime with element");
    Rational inv = Rational(1) / r0[0];
    for (auto& q : s0) q *= inv;
    return Cyclotomic(fld_, std::move(s0));
}

std::string cyclo_to_string(const Cyclotomic& x) {
    if (is_zero(x)) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = x.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (is_zero(c[i])) continue;
        Rational a = abs(c[i]);
        if (first) {
            if (sgn(c[i]) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c[i]) < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            os << "u";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace jumploci
