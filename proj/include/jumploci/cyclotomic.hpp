#pragma once

#include <memory>

#include "jumploci/laurent.hpp"

namespace jumploci {

// The field Q[u]/(Phi_m(u)). Instances are cached per order.
struct CycloField {
    int order = 1;
    std::vector<Rational> modulus;  // monic cyclotomic polynomial, low-to-high

    int degree() const { return static_cast<int>(modulus.size()) - 1; }
    static std::shared_ptr<const CycloField> get(int order);
};

// Element of a cyclotomic field; a null field tags plain rational constants,
// which adopt the other operand's field on contact.
class Cyclotomic {
  public:
    Cyclotomic() = default;
    Cyclotomic(int k) { assign_rational(Rational(k)); }
    explicit Cyclotomic(const Rational& q) { assign_rational(q); }
    Cyclotomic(std::shared_ptr<const CycloField> f, std::vector<Rational> coeffs);

    // The residue of u^k, i.e. the k-th power of the chosen primitive root.
    static Cyclotomic root_power(const std::shared_ptr<const CycloField>& f, long k);

    const std::vector<Rational>& coeffs() const { return c_; }
    const std::shared_ptr<const CycloField>& field() const { return fld_; }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator-(const Cyclotomic& o) const { return *this + (-o); }
    Cyclotomic operator*(const Cyclotomic& o) const;
    bool operator==(const Cyclotomic& o) const;

    Cyclotomic inverse() const;

    friend bool is_zero(const Cyclotomic& x) { return x.c_.empty(); }

  private:
    void assign_rational(const Rational& q) {
        if (!jumploci::is_zero(q)) c_ = {q};
    }
    void normalize();

    std::shared_ptr<const CycloField> fld_;
    std::vector<Rational> c_;
};

inline Cyclotomic field_inverse(const Cyclotomic& x) { return x.inverse(); }

using CycloPoly = BasePoly<Cyclotomic>;

std::string cyclo_to_string(const Cyclotomic& x);

}  // namespace jumploci
